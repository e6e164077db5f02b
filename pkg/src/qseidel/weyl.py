"""Finite Weyl groups as unimodular matrices on the root lattice.

A group element is stored by the images of the simple roots (the columns of
its root-lattice matrix) together with the images under the inverse, so that
inversion is free and the coweight/weight actions need no linear solves:

* on roots:      w(alpha_j) = images[j-1]
* on coweights:  <w(lambda), alpha_i> = <lambda, w^-1(alpha_i)>
* on weights:    <w(mu), alpha_i_vee> = <mu, (w^-1(alpha_i))_vee>

Length is the number of positive roots sent negative; every reduced word in
this module composes left to right (word [1, 2] means s_1 s_2, apply s_2 first).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .rootsys import RootSystem, Vec, dot, is_positive_vec, vneg

WEYL_ENUM_CAP = 2**21


def _apply(mat: tuple[Vec, ...], vec: Vec) -> Vec:
    n = len(vec)
    out = [0] * n
    for j, c in enumerate(vec):
        if c:
            col = mat[j]
            for k in range(n):
                if col[k]:
                    out[k] += c * col[k]
    return tuple(out)


@dataclass(frozen=True)
class WeylElt:
    rs: RootSystem
    images: tuple[Vec, ...]
    inv_images: tuple[Vec, ...]

    def act_root(self, vec: Vec) -> Vec:
        return _apply(self.images, vec)

    def inv_act_root(self, vec: Vec) -> Vec:
        return _apply(self.inv_images, vec)

    def act_coweight(self, m: Vec) -> Vec:
        return tuple(dot(m, col) for col in self.inv_images)

    def inv_act_coweight(self, m: Vec) -> Vec:
        return tuple(dot(m, col) for col in self.images)

    def act_weight(self, a: Vec) -> Vec:
        """Action on the weight lattice in fundamental-weight coordinates."""
        rs = self.rs
        return tuple(dot(a, rs.coroot_of(col)) for col in self.inv_images)

    @cached_property
    def length(self) -> int:
        return sum(1 for r in self.rs.pos_roots if not is_positive_vec(self.act_root(r)))

    def is_identity(self) -> bool:
        return self.images == _identity_images(self.rs)

    def __repr__(self) -> str:
        word = reduced_word(self)
        return "W[e]" if not word else "W[" + ".".join(map(str, word)) + "]"


@lru_cache(maxsize=None)
def _identity_images(rs: RootSystem) -> tuple[Vec, ...]:
    n = rs.rank
    return tuple(tuple(int(i == j) for i in range(n)) for j in range(n))


@lru_cache(maxsize=None)
def identity(rs: RootSystem) -> WeylElt:
    eye = _identity_images(rs)
    return WeylElt(rs, eye, eye)


@lru_cache(maxsize=None)
def simple_reflection(rs: RootSystem, i: int) -> WeylElt:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple reflection index out of range: {i}")
    n = rs.rank
    imgs = []
    for j in range(n):
        # s_i(alpha_j) = alpha_j - <alpha_j, alpha_i_vee> alpha_i
        k = rs.cartan[i - 1][j]
        imgs.append(tuple(int(t == j) - k * int(t == i - 1) for t in range(n)))
    imgs = tuple(imgs)
    return WeylElt(rs, imgs, imgs)


@lru_cache(maxsize=None)
def reflection(rs: RootSystem, root: Vec) -> WeylElt:
    """The reflection s_alpha for any root alpha."""
    if root not in rs.root_set:
        raise ValueError(f"not a root: {root}")
    n = rs.rank
    cw = rs.coroot_to_coweight(rs.coroot_of(root))  # alpha_vee as coweight
    imgs = tuple(tuple(int(t == j) - cw[j] * root[t] for t in range(n))
                 for j in range(n))
    return WeylElt(rs, imgs, imgs)


def w_mul(a: WeylElt, b: WeylElt) -> WeylElt:
    if a.rs is not b.rs:
        raise ValueError("mixed root systems")
    images = tuple(_apply(a.images, col) for col in b.images)
    inv_images = tuple(_apply(b.inv_images, col) for col in a.inv_images)
    return WeylElt(a.rs, images, inv_images)


def w_inv(a: WeylElt) -> WeylElt:
    return WeylElt(a.rs, a.inv_images, a.images)


def w_len(a: WeylElt) -> int:
    return a.length


def from_word(rs: RootSystem, word) -> WeylElt:
    w = identity(rs)
    for i in word:
        w = w_mul(w, simple_reflection(rs, i))
    return w


@lru_cache(maxsize=None)
def reduced_word(w: WeylElt) -> tuple[int, ...]:
    """Lexicographically smallest-at-each-peel reduced word, right descent peeling."""
    rs = w.rs
    rev: list[int] = []
    cur = w
    while True:
        i = next((i for i in range(1, rs.rank + 1)
                  if not is_positive_vec(cur.act_root(rs.simple_root(i)))), None)
        if i is None:
            break
        cur = w_mul(cur, simple_reflection(rs, i))
        rev.append(i)
    if not cur.is_identity():
        raise AssertionError("descent peeling stalled off the identity")
    return tuple(reversed(rev))


def weyl_order(rs: RootSystem) -> int:
    n = rs.rank
    import math
    if rs.letter == "A":
        return math.factorial(n + 1)
    if rs.letter in ("B", "C"):
        return 2**n * math.factorial(n)
    if rs.letter == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(rs.letter, n)]


@lru_cache(maxsize=None)
def enumerate_weyl(rs: RootSystem) -> tuple[WeylElt, ...]:
    """All of W in length order (breadth-first closure under right multiplication)."""
    if weyl_order(rs) > WEYL_ENUM_CAP:
        raise ValueError(f"|W({rs.name()})| = {weyl_order(rs)} exceeds the enumeration cap")
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    seen = {identity(rs)}
    order = [identity(rs)]
    frontier = [identity(rs)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                w2 = w_mul(w, s)
                if w2 not in seen:
                    seen.add(w2)
                    nxt.append(w2)
        nxt.sort(key=lambda w: reduced_word(w))
        order.extend(nxt)
        frontier = nxt
    if len(order) != weyl_order(rs):
        raise AssertionError("Weyl enumeration has wrong size")
    return tuple(order)


@lru_cache(maxsize=None)
def longest_element(rs: RootSystem, nodes: tuple[int, ...] | None = None) -> WeylElt:
    """Longest element of the standard parabolic subgroup generated by `nodes`.

    nodes=None means the full group; the element is found by greedy descent on
    the sum of the fundamental coweights of the chosen nodes, which is regular
    for the subgroup, so no enumeration is needed.
    """
    if nodes is None:
        nodes = tuple(range(1, rs.rank + 1))
    m = list(tuple(int(k + 1 in nodes) for k in range(rs.rank)))
    w = identity(rs)
    while True:
        i = next((i for i in nodes if m[i - 1] > 0), None)
        if i is None:
            break
        c = m[i - 1]
        for j in range(rs.rank):
            m[j] -= c * rs.cartan[i - 1][j]
        w = w_mul(simple_reflection(rs, i), w)
    return w


@dataclass(frozen=True)
class ParabolicSet:
    """A choice of quantum nodes I_P; W_P is generated by the complement."""

    rs: RootSystem
    nodes: tuple[int, ...]

    def __post_init__(self):
        if list(self.nodes) != sorted(set(self.nodes)):
            raise ValueError("parabolic nodes must be sorted and distinct")
        if any(not 1 <= i <= self.rs.rank for i in self.nodes):
            raise ValueError("parabolic node out of range")

    @cached_property
    def wp_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.rs.rank + 1) if i not in self.nodes)

    @cached_property
    def rp_pos(self) -> tuple[Vec, ...]:
        """Positive roots of the parabolic subsystem (support off the quantum nodes)."""
        return tuple(r for r in self.rs.pos_roots
                     if all(r[i - 1] == 0 for i in self.nodes))

    def __repr__(self) -> str:
        return f"ParabolicSet({self.rs.name()}, {list(self.nodes)})"


def parabolic(rs: RootSystem, nodes) -> ParabolicSet:
    return ParabolicSet(rs, tuple(sorted(set(nodes))))


def is_minrep(w: WeylElt, p: ParabolicSet) -> bool:
    return all(is_positive_vec(w.act_root(w.rs.simple_root(j))) for j in p.wp_nodes)


@lru_cache(maxsize=None)
def coset_reduce(w: WeylElt, p: ParabolicSet) -> tuple[WeylElt, WeylElt]:
    """w = wP * u with wP minimal in w*W_P and u in W_P, lengths additive."""
    rs = w.rs
    cur = w
    rev: list[int] = []
    while True:
        j = next((j for j in p.wp_nodes
                  if not is_positive_vec(cur.act_root(rs.simple_root(j)))), None)
        if j is None:
            break
        cur = w_mul(cur, simple_reflection(rs, j))
        rev.append(j)
    u = from_word(rs, reversed(rev))
    if cur.length + u.length != w.length:
        raise AssertionError("coset reduction lost length additivity")
    return cur, u


@lru_cache(maxsize=None)
def enumerate_parabolic_subgroup(p: ParabolicSet) -> tuple[WeylElt, ...]:
    """Elements of W_P in length order."""
    rs = p.rs
    gens = [simple_reflection(rs, j) for j in p.wp_nodes]
    seen = {identity(rs)}
    order = [identity(rs)]
    frontier = [identity(rs)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                w2 = w_mul(w, s)
                if w2 not in seen:
                    if len(seen) >= WEYL_ENUM_CAP:
                        raise ValueError("parabolic subgroup exceeds the enumeration cap")
                    seen.add(w2)
                    nxt.append(w2)
        nxt.sort(key=lambda w: reduced_word(w))
        order.extend(nxt)
        frontier = nxt
    return tuple(order)


@lru_cache(maxsize=None)
def enumerate_minreps(rs: RootSystem, p: ParabolicSet) -> tuple[WeylElt, ...]:
    """Minimal coset representatives W^P in length order."""
    out = []
    seen = set()
    for w in enumerate_weyl(rs):
        wp, _ = coset_reduce(w, p)
        if wp not in seen:
            seen.add(wp)
            out.append(wp)
    return tuple(out)


@lru_cache(maxsize=None)
def v_element(rs: RootSystem, i: int) -> WeylElt:
    """v_i = w0 * w0^{P_i} for a minuscule node i.

    Sends varpi_i_vee where w0 sends it, and is the minimal coset representative
    of its class modulo the stabilizer of varpi_i_vee, hence the unique
    minimal-length element with that action.
    """
    if i not in rs.minuscule_nodes:
        raise ValueError(f"node {i} is not minuscule in {rs.name()}")
    w0 = longest_element(rs)
    w0p = longest_element(rs, tuple(j for j in range(1, rs.rank + 1) if j != i))
    v = w_mul(w0, w0p)
    cw = rs.fund_coweight(i)
    if v.act_coweight(cw) != w0.act_coweight(cw):
        raise AssertionError("v element does not track w0 on the fundamental coweight")
    if not is_minrep(v, parabolic(rs, (i,))):
        raise AssertionError("v element is not a minimal coset representative")
    return v
