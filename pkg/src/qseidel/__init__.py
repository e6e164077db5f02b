"""Exact combinatorics of Seidel multiplication in quantum cohomology of G/P.

Everything is integer arithmetic over explicit lattice coordinates: root
systems and Weyl groups (rootsys, weyl), the extended affine Weyl group with
its parabolic factorizations (affine), an affine nil Hecke ring with its
coinvariant action (nilhecke, poly), and Schubert-basis classes with the
Chevalley and Seidel multiplication operators plus the affine-to-quantum
dictionary (qh). The suites module re-derives the identities these
implementations rely on from independent definitions.
"""

from .affine import (
    CentralElt,
    ExtAffElt,
    aff_inv,
    aff_length,
    aff_mul,
    central_dynkin_action,
    central_elements,
    central_inv,
    central_mul,
    central_order,
    eta_P,
    ext,
    hat_decompose,
    identity_aff,
    is_antidominant,
    is_waff_minus,
    is_wpaff,
    peterson_decompose,
    pi_P,
    pi_P_ext,
    translation,
)
from .nilhecke import (
    NilHeckeElt,
    XiVector,
    act_on_xi,
    divdiff,
    embed_group,
    nh_add,
    nh_basis,
    nh_mod_Jtilde,
    nh_mul,
    nh_one,
    nh_scalar,
    nh_zero,
    xi_unit,
)
from .poly import SPoly
from .qh import (
    QHClass,
    chevalley_multiply,
    psi_P,
    q_shift,
    qh_add,
    qh_from_json,
    qh_scale,
    qh_sub,
    qh_text,
    qh_to_json,
    seidel_apply,
    seidel_element,
    seidel_multiply,
    seidel_orbit,
    sigma,
    unit_class,
)
from .rootsys import CATALOG, RootSystem, build_root_system
from .suites import RunConfig, SuiteResult, run_suites, seidel_table
from .weyl import (
    ParabolicSet,
    WeylElt,
    coset_reduce,
    enumerate_minreps,
    enumerate_weyl,
    from_word,
    longest_element,
    parabolic,
    reduced_word,
    v_element,
    w_inv,
    w_mul,
)

__all__ = [
    "CATALOG",
    "CentralElt",
    "ExtAffElt",
    "NilHeckeElt",
    "ParabolicSet",
    "QHClass",
    "RootSystem",
    "RunConfig",
    "SPoly",
    "SuiteResult",
    "WeylElt",
    "XiVector",
    "act_on_xi",
    "aff_inv",
    "aff_length",
    "aff_mul",
    "build_root_system",
    "central_dynkin_action",
    "central_elements",
    "central_inv",
    "central_mul",
    "central_order",
    "chevalley_multiply",
    "coset_reduce",
    "divdiff",
    "embed_group",
    "enumerate_minreps",
    "enumerate_weyl",
    "eta_P",
    "ext",
    "from_word",
    "hat_decompose",
    "identity_aff",
    "is_antidominant",
    "is_waff_minus",
    "is_wpaff",
    "longest_element",
    "nh_add",
    "nh_basis",
    "nh_mod_Jtilde",
    "nh_mul",
    "nh_one",
    "nh_scalar",
    "nh_zero",
    "parabolic",
    "peterson_decompose",
    "pi_P",
    "pi_P_ext",
    "psi_P",
    "q_shift",
    "qh_add",
    "qh_from_json",
    "qh_scale",
    "qh_sub",
    "qh_text",
    "qh_to_json",
    "reduced_word",
    "run_suites",
    "seidel_apply",
    "seidel_element",
    "seidel_multiply",
    "seidel_orbit",
    "seidel_table",
    "sigma",
    "translation",
    "unit_class",
    "v_element",
    "w_inv",
    "w_mul",
    "xi_unit",
]
