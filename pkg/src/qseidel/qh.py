"""Quantum cohomology classes of G/P and the operators acting on them.

A class is a finite sum of terms (w, q-exponents) with polynomial coefficients,
w a minimal coset representative and one quantum exponent per quantum node.
Two families of operators are exposed:

* seidel_multiply(i, -): exact multiplication by the class of v_i; a single
  term maps to a single term, with quantum exponent the quantum-node part of
  varpi_i_vee - w^-1(varpi_i_vee);
* chevalley_multiply(j, -): multiplication by the degree-two class sigma(s_j),
  the classical/quantum two-part sum over roots outside the parabolic, with an
  optional equivariant diagonal term (w_j - w(w_j)) sigma(w).

No general product of two arbitrary classes is exposed; everything the package
verifies is reachable through these operators plus the Peterson dictionary
psi_P, which reads a quantum class off an affine Schubert class via
peterson_decompose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .affine import (
    CentralElt,
    ExtAffElt,
    eta_P,
    is_antidominant,
    is_waff_minus,
    is_wpaff,
    peterson_decompose,
)
from .poly import SPoly
from .rootsys import RootSystem, Vec, dot, vadd, vsub
from .weyl import (
    ParabolicSet,
    WeylElt,
    coset_reduce,
    identity,
    is_minrep,
    reduced_word,
    reflection,
    v_element,
    w_mul,
)

QKey = tuple[WeylElt, Vec]


@dataclass
class QHClass:
    p: ParabolicSet
    terms: dict[QKey, SPoly] = field(default_factory=dict)

    def __post_init__(self):
        for w, d in self.terms:
            if not is_minrep(w, self.p):
                raise ValueError("class keys must be minimal coset representatives")
            if len(d) != len(self.p.nodes):
                raise ValueError("quantum exponent has wrong arity")
        self.terms = {k: v for k, v in self.terms.items() if v}

    @property
    def rs(self) -> RootSystem:
        return self.p.rs

    def __eq__(self, other) -> bool:
        return (isinstance(other, QHClass) and self.p == other.p
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_keys(self) -> list[QKey]:
        return sorted(self.terms, key=lambda k: (k[1], reduced_word(k[0])))

    def __repr__(self) -> str:
        return f"QH[{qh_text(self)}]"


def unit_class(p: ParabolicSet) -> QHClass:
    return sigma(p, identity(p.rs))


def sigma(p: ParabolicSet, w: WeylElt, q: Vec | None = None,
          coeff: SPoly | int = 1) -> QHClass:
    """The class of w, coset-reduced if needed, with optional exponent and coefficient."""
    wp, _ = coset_reduce(w, p)
    if q is None:
        q = (0,) * len(p.nodes)
    if isinstance(coeff, int):
        coeff = SPoly.const(p.rs.rank, coeff)
    return QHClass(p, {(wp, tuple(q)): coeff})


def qh_add(a: QHClass, b: QHClass) -> QHClass:
    if a.p != b.p:
        raise ValueError("mixed parabolic contexts")
    out = dict(a.terms)
    for k, v in b.terms.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return QHClass(a.p, out)


def qh_sub(a: QHClass, b: QHClass) -> QHClass:
    return qh_add(a, qh_scale(b, -1))


def qh_scale(a: QHClass, c: SPoly | int) -> QHClass:
    return QHClass(a.p, {k: v * c for k, v in a.terms.items()})


def q_shift(a: QHClass, d: Vec) -> QHClass:
    """Multiply by the quantum monomial with exponent d (entries may be negative)."""
    return QHClass(a.p, {(w, vadd(e, tuple(d))): v for (w, e), v in a.terms.items()})


# -- Seidel operators ----------------------------------------------------------


def seidel_multiply(i: int, c: QHClass) -> QHClass:
    """Exact multiplication by the class of v_i for a minuscule node i."""
    p = c.p
    rs = p.rs
    if i not in rs.minuscule_nodes:
        raise ValueError(f"node {i} is not minuscule in {rs.name()}")
    vi = v_element(rs, i)
    cw = rs.fund_coweight(i)
    out: dict[QKey, SPoly] = {}
    for (w, d), coeff in c.terms.items():
        diff = vsub(cw, w.inv_act_coweight(cw))  # in the coroot lattice
        e = vadd(d, eta_P(rs, diff, p))
        w2, _ = coset_reduce(w_mul(vi, w), p)
        key = (w2, e)
        prev = out.get(key)
        tot = coeff if prev is None else prev + coeff
        if tot:
            out[key] = tot
        else:
            out.pop(key, None)
    return QHClass(p, out)


def seidel_element(z: CentralElt, p: ParabolicSet) -> QHClass:
    """The image of a central element: the class of v_{f(i)} (the unit for identity)."""
    if z.is_identity():
        return unit_class(p)
    rs = p.rs
    return sigma(p, v_element(rs, rs.involution[z.node - 1]))


def seidel_apply(z: CentralElt, c: QHClass) -> QHClass:
    """Multiply by seidel_element(z), i.e. the v_{f(i)} operator."""
    if z.is_identity():
        return c
    return seidel_multiply(z.rs.involution[z.node - 1], c)


def seidel_orbit(i: int, p: ParabolicSet) -> tuple[list[QHClass], Vec]:
    """Iterate seidel_multiply(i, -) on the unit class until the Weyl part returns
    to the identity; returns the classes after each step and the closure exponent."""
    rs = p.rs
    steps: list[QHClass] = []
    cur = unit_class(p)
    for _ in range(len(rs.roots) + 2):
        cur = seidel_multiply(i, cur)
        steps.append(cur)
        ((w, d),) = cur.terms.keys()
        if w.is_identity():
            return steps, d
    raise AssertionError("Seidel orbit did not close")


# -- Chevalley operators -------------------------------------------------------


@lru_cache(maxsize=None)
def _chevalley_data(p: ParabolicSet):
    """Per root alpha outside the parabolic: (s_alpha, coroot, n_alpha, eta_P(alpha_vee))."""
    rs = p.rs
    rp = set(p.rp_pos)
    outside = [a for a in rs.pos_roots if a not in rp]
    data = []
    for alpha in outside:
        cv = rs.coroot_of(alpha)
        mcw = rs.coroot_to_coweight(cv)
        n_alpha = sum(dot(mcw, beta) for beta in outside)
        eta = tuple(cv[i - 1] for i in p.nodes)
        data.append((reflection(rs, alpha), cv, n_alpha, eta))
    return tuple(data)


def chevalley_multiply(j: int, c: QHClass, equivariant: bool = False) -> QHClass:
    """Multiplication by sigma(s_j) for a quantum node j, by the two-part root sum."""
    p = c.p
    rs = p.rs
    if j not in p.nodes:
        raise ValueError(f"node {j} is not a quantum node of {p!r}")
    out: dict[QKey, SPoly] = {}

    def acc(key: QKey, val: SPoly) -> None:
        prev = out.get(key)
        tot = val if prev is None else prev + val
        if tot:
            out[key] = tot
        else:
            out.pop(key, None)

    for (w, d), coeff in c.terms.items():
        lw = w.length
        for s_alpha, cv, n_alpha, eta in _chevalley_data(p):
            mult = cv[j - 1]  # <w_j, alpha_vee>
            if not mult:
                continue
            w2 = w_mul(w, s_alpha)
            if w2.length == lw + 1 and is_minrep(w2, p):
                acc((w2, d), coeff * mult)
            w2p, _ = coset_reduce(w2, p)
            if w2p.length == lw + 1 - n_alpha:
                acc((w2p, vadd(d, eta)), coeff * mult)
        if equivariant:
            wj = tuple(int(t == j - 1) for t in range(rs.rank))
            diag = SPoly.weight(wj) - SPoly.weight(w.act_weight(wj))
            if diag:
                acc((w, d), coeff * diag)
    return QHClass(p, out)


# -- the Peterson dictionary ---------------------------------------------------


def psi_P(y: ExtAffElt, mu: Vec, p: ParabolicSet) -> QHClass:
    """Class of xi_y relative to the reference xi_{pi_P(t_mu)}: q^{eta_P(nu-mu)} sigma(w).

    y must lie in W_aff^- intersect (W^P)_aff and mu must be an antidominant
    coroot-lattice coweight; (w, nu) is the Peterson decomposition of y.
    """
    rs = y.rs
    if not is_antidominant(mu):
        raise ValueError("reference coweight must be antidominant")
    if not rs.in_coroot_lattice(mu):
        raise ValueError("reference coweight must be in the coroot lattice")
    if not (is_waff_minus(y) and is_wpaff(y, p)):
        raise ValueError("psi_P needs y in W_aff^- intersect (W^P)_aff")
    w, nu = peterson_decompose(y, p)
    d = eta_P(rs, vsub(nu, tuple(mu)), p)
    return QHClass(p, {(w, d): SPoly.one(rs.rank)})


# -- rendering -----------------------------------------------------------------


def q_text(p: ParabolicSet, d: Vec) -> str:
    bits = []
    for node, e in zip(p.nodes, d):
        if e == 1:
            bits.append(f"q{node}")
        elif e:
            bits.append(f"q{node}^{e}")
    return " ".join(bits)


def qh_text(c: QHClass) -> str:
    if not c.terms:
        return "0"
    bits = []
    for w, d in c.sorted_keys():
        coeff = c.terms[(w, d)]
        parts = []
        if coeff != SPoly.one(c.rs.rank):
            t = coeff.to_text()
            parts.append(f"({t})" if (len(coeff.terms) > 1 or coeff.degree() > 0) else t)
        qt = q_text(c.p, d)
        if qt:
            parts.append(qt)
        word = reduced_word(w)
        parts.append("s[" + ".".join(map(str, word)) + "]" if word else "1")
        bits.append("*".join(parts))
    return " + ".join(bits)


def qh_to_json(c: QHClass) -> dict:
    return {
        "type": c.rs.name(),
        "parabolic": list(c.p.nodes),
        "terms": [
            {"w": list(reduced_word(w)), "q": list(d),
             "coeff": c.terms[(w, d)].to_json()}
            for w, d in c.sorted_keys()
        ],
    }


def qh_from_json(data: dict) -> QHClass:
    from .rootsys import build_root_system
    from .weyl import from_word, parabolic

    rs = build_root_system(data["type"])
    p = parabolic(rs, data["parabolic"])
    terms: dict[QKey, SPoly] = {}
    for t in data.get("terms", []):
        w = from_word(rs, t["w"])
        if not is_minrep(w, p):
            raise ValueError("term Weyl part is not a minimal coset representative")
        key = (w, tuple(int(x) for x in t["q"]))
        raw = t.get("coeff")
        coeff = SPoly.from_json(rs.rank, raw) if raw else SPoly.one(rs.rank)
        prev = terms.get(key)
        terms[key] = coeff if prev is None else prev + coeff
    return QHClass(p, terms)
