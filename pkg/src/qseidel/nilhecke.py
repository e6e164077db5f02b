"""The affine nil Hecke ring with its central extension, in the A_x normal form.

Elements are finite sums  tau (x) f A_x  with tau central, x in the affine Weyl
group and f an integer polynomial in the equivariant parameters; the key
relations driving multiplication are

* A_i f = s_i(f) A_i + d_i(f), with d_i the divided difference (f - s_i f)/alpha_i,
  realized by the twisted Leibniz recursion so coefficients stay integral;
* A_x A_y = A_{xy} when lengths add and 0 otherwise;
* central elements rotate the affine Dynkin indices, conjugate the group part
  and act on scalars through their finite Weyl part (delta maps to zero on S,
  so translations act trivially there and the node-0 letters act through
  s_theta with alpha_0 read as -theta).

Group elements embed through s_i = 1 - alpha_i A_i, extended over a reduced
word of the hat part with the central part carried on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .affine import (
    CentralElt,
    ExtAffElt,
    aff_length,
    aff_inv,
    aff_mul,
    affine_simple_ext,
    central_inv,
    central_mul,
    hat_decompose,
    identity_aff,
    is_waff_minus,
    reduced_word_affine,
)
from .poly import SPoly
from .rootsys import RootSystem, Vec, dot
from .weyl import WeylElt, identity, v_element

EXPANSION_CAP = 8

NHKey = tuple[Optional[int], ExtAffElt]


# -- scalar actions of the affine letters -------------------------------------


@lru_cache(maxsize=None)
def scalar_root(rs: RootSystem, i: int) -> SPoly:
    """alpha_i as a weight-lattice polynomial; the node 0 letter reads as -theta."""
    n = rs.rank
    if i == 0:
        coords = tuple(-dot(rs.cartan[k], rs.theta) for k in range(n))
    else:
        coords = tuple(rs.cartan[k][i - 1] for k in range(n))
    return SPoly.weight(coords)


@lru_cache(maxsize=None)
def _coroot_pairings(rs: RootSystem, i: int) -> Vec:
    """<w_k, alpha_i_vee> for k = 1..n (alpha_0_vee reads as -theta_vee)."""
    if i == 0:
        return tuple(-c for c in rs.theta_coroot)
    return tuple(int(k == i - 1) for k in range(rs.rank))


@lru_cache(maxsize=None)
def _reflect_images(rs: RootSystem, i: int) -> tuple[SPoly, ...]:
    pair = _coroot_pairings(rs, i)
    root = scalar_root(rs, i)
    return tuple(SPoly.var(rs.rank, k + 1) - root * pair[k] for k in range(rs.rank))


def reflect_poly(rs: RootSystem, i: int, f: SPoly) -> SPoly:
    """s_i acting on S, i in 0..n."""
    return f.subst(list(_reflect_images(rs, i)))


def divdiff(rs: RootSystem, i: int, f: SPoly) -> SPoly:
    """Divided difference (f - s_i f)/alpha_i via the twisted Leibniz recursion.

    d_i(w_k g) = <w_k, alpha_i_vee> g + s_i(w_k) d_i(g), so the quotient is
    assembled without any polynomial division and integrality is structural.
    """
    pair = _coroot_pairings(rs, i)
    images = _reflect_images(rs, i)
    n = rs.rank

    def rec(expts: tuple[int, ...]) -> SPoly:
        k = next((t for t in range(n) if expts[t]), None)
        if k is None:
            return SPoly.zero(n)
        rest = tuple(e - int(t == k) for t, e in enumerate(expts))
        rest_poly = SPoly(n, {rest: 1})
        out = rest_poly * pair[k]
        tail = rec(rest)
        if tail:
            out = out + images[k] * tail
        return out

    total = SPoly.zero(n)
    for expts, c in f.terms.items():
        part = rec(expts)
        if part:
            total = total + part * c
    return total


def weyl_act_poly(w: WeylElt, f: SPoly) -> SPoly:
    """A finite Weyl element acting on S by its weight-lattice matrix."""
    n = w.rs.rank
    images = [SPoly.weight(w.act_weight(tuple(int(t == k) for t in range(n))))
              for k in range(n)]
    return f.subst(images)


@lru_cache(maxsize=None)
def _central_v(z: CentralElt) -> WeylElt:
    return identity(z.rs) if z.node is None else v_element(z.rs, z.node)


def central_act_poly(z: CentralElt, f: SPoly) -> SPoly:
    """Central elements act on S through their finite part (delta |-> 0)."""
    if z.node is None:
        return f
    return weyl_act_poly(_central_v(z), f)


# -- elements ------------------------------------------------------------------


@dataclass
class NilHeckeElt:
    """Finite map (central node, W_aff element) -> SPoly coefficient."""

    rs: RootSystem
    terms: dict[NHKey, SPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __eq__(self, other) -> bool:
        return (isinstance(other, NilHeckeElt) and self.rs is other.rs
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "NH(0)"
        bits = []
        for (c, x) in sorted(self.terms, key=lambda k: (k[0] or 0, aff_length(k[1]))):
            f = self.terms[(c, x)]
            tag = f"t{c}*" if c is not None else ""
            bits.append(f"({f.to_text()})*{tag}A{list(reduced_word_affine(x))}")
        return "NH[" + " + ".join(bits) + "]"


def nh_zero(rs: RootSystem) -> NilHeckeElt:
    return NilHeckeElt(rs, {})


def nh_one(rs: RootSystem) -> NilHeckeElt:
    return NilHeckeElt(rs, {(None, identity_aff(rs)): SPoly.one(rs.rank)})


def nh_scalar(rs: RootSystem, f: SPoly) -> NilHeckeElt:
    return NilHeckeElt(rs, {(None, identity_aff(rs)): f})


def nh_basis(x: ExtAffElt) -> NilHeckeElt:
    """The basis operator A_x = tau (x) A_hat(x)."""
    tau, hat = hat_decompose(x)
    return NilHeckeElt(x.rs, {(tau.node, hat): SPoly.one(x.rs.rank)})


def nh_add(a: NilHeckeElt, b: NilHeckeElt) -> NilHeckeElt:
    out = dict(a.terms)
    for k, v in b.terms.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return NilHeckeElt(a.rs, out)


def nh_neg(a: NilHeckeElt) -> NilHeckeElt:
    return NilHeckeElt(a.rs, {k: -v for k, v in a.terms.items()})


def nh_sub(a: NilHeckeElt, b: NilHeckeElt) -> NilHeckeElt:
    return nh_add(a, nh_neg(b))


def _aword_times_poly(rs: RootSystem, word: tuple[int, ...], g: SPoly) -> dict[ExtAffElt, SPoly]:
    """A_{word} * g in normal form: map from W_aff elements to left coefficients."""
    if not g:
        return {}
    if not word:
        return {identity_aff(rs): g}
    head, last = word[:-1], word[-1]
    out: dict[ExtAffElt, SPoly] = {}
    s_last = affine_simple_ext(rs, last)
    for z, c in _aword_times_poly(rs, head, reflect_poly(rs, last, g)).items():
        z2 = aff_mul(z, s_last)
        if aff_length(z2) == aff_length(z) + 1:
            prev = out.get(z2)
            tot = c if prev is None else prev + c
            if tot:
                out[z2] = tot
            else:
                out.pop(z2, None)
    dd = divdiff(rs, last, g)
    if dd:
        for z, c in _aword_times_poly(rs, head, dd).items():
            prev = out.get(z)
            tot = c if prev is None else prev + c
            if tot:
                out[z] = tot
            else:
                out.pop(z, None)
    return out


def _conj_by_central(z: CentralElt, x: ExtAffElt) -> ExtAffElt:
    if z.node is None:
        return x
    ze = z.to_ext()
    return aff_mul(aff_mul(aff_inv(ze), x), ze)


def nh_mul(a: NilHeckeElt, b: NilHeckeElt) -> NilHeckeElt:
    """Product in the smashed extension: (tau (x) u)(sigma (x) v) = tau sigma (x) sigma^-1(u) v."""
    rs = a.rs
    if b.rs is not rs:
        raise ValueError("mixed root systems")
    out: dict[NHKey, SPoly] = {}
    for (c1, x1), f1 in a.terms.items():
        tau1 = CentralElt(rs, c1)
        for (c2, x2), f2 in b.terms.items():
            tau2 = CentralElt(rs, c2)
            central = central_mul(tau1, tau2).node
            inv2 = central_inv(tau2)
            g1 = central_act_poly(inv2, f1)
            x1c = _conj_by_central(tau2, x1)
            word = reduced_word_affine(x1c)
            if len(word) > EXPANSION_CAP:
                raise ValueError(f"nil Hecke expansion beyond length {EXPANSION_CAP}")
            len2 = aff_length(x2)
            for z, c in _aword_times_poly(rs, word, f2).items():
                z2 = aff_mul(z, x2)
                if aff_length(z2) != aff_length(z) + len2:
                    continue
                coeff = g1 * c
                key = (central, z2)
                prev = out.get(key)
                tot = coeff if prev is None else prev + coeff
                if tot:
                    out[key] = tot
                else:
                    out.pop(key, None)
    return NilHeckeElt(rs, out)


def embed_group(x: ExtAffElt) -> NilHeckeElt:
    """Multiplicative inclusion of the extended affine Weyl group, s_i = 1 - alpha_i A_i."""
    rs = x.rs
    tau, hat = hat_decompose(x)
    word = reduced_word_affine(hat)
    if len(word) > EXPANSION_CAP:
        raise ValueError(f"group embedding beyond length {EXPANSION_CAP}")
    acc = nh_one(rs)
    for i in word:
        factor = NilHeckeElt(rs, {
            (None, identity_aff(rs)): SPoly.one(rs.rank),
            (None, affine_simple_ext(rs, i)): -scalar_root(rs, i),
        })
        acc = nh_mul(acc, factor)
    if tau.node is None:
        return acc
    return NilHeckeElt(rs, {(tau.node, z): f for (_, z), f in acc.terms.items()})


def nh_mod_Jtilde(a: NilHeckeElt) -> NilHeckeElt:
    """Reduction modulo the annihilator of the fundamental class: keep minimal-coset keys."""
    return NilHeckeElt(a.rs, {k: v for k, v in a.terms.items() if is_waff_minus(k[1])})


# -- the homology module -------------------------------------------------------


@dataclass
class XiVector:
    """S-combination of Schubert basis elements indexed by W~_aff^-."""

    rs: RootSystem
    terms: dict[ExtAffElt, SPoly] = field(default_factory=dict)

    def __post_init__(self):
        for x in self.terms:
            if not is_waff_minus(x):
                raise ValueError("xi basis keys must be minimal coset representatives")
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __eq__(self, other) -> bool:
        return (isinstance(other, XiVector) and self.rs is other.rs
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms


def xi_unit(rs: RootSystem) -> XiVector:
    return XiVector(rs, {identity_aff(rs): SPoly.one(rs.rank)})


def act_on_xi(x: ExtAffElt, v: XiVector) -> XiVector:
    """A_x acting basis-by-basis: xi_y |-> xi_{xy} when lengths add and xy stays minimal.

    Extended S-linearly; the central twist falls on the operator scalar, which
    is 1 for a pure group basis element, so coefficients ride along unchanged.
    """
    rs = x.rs
    lx = aff_length(x)
    out: dict[ExtAffElt, SPoly] = {}
    for y, c in v.terms.items():
        xy = aff_mul(x, y)
        if aff_length(xy) == lx + aff_length(y) and is_waff_minus(xy):
            prev = out.get(xy)
            tot = c if prev is None else prev + c
            if tot:
                out[xy] = tot
    return XiVector(rs, out)
