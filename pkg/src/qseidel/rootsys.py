"""Finite root systems in simple-root coordinates, with exact integer arithmetic.

Everything downstream (Weyl matrices, affine translations, quantum exponents)
is bookkeeping over a handful of integer lattices attached to a Cartan matrix:

* roots live in the root lattice and are stored as tuples of simple-root
  coordinates;
* coroots are stored as tuples of simple-coroot coordinates, carried along
  during root generation so that alpha -> alpha_vee never needs a symmetrizer;
* coweights are stored as tuples of fundamental-coweight coordinates, i.e.
  lambda = sum m_i varpi_i_vee with m_i = <lambda, alpha_i>, so the pairing of
  a coweight against a root is a plain dot product.

Simple roots are numbered 1..n following Bourbaki (see README for the table).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

Vec = tuple[int, ...]

# Valid (letter, rank) pairs up to the supported rank bound.
MAX_RANK = 8
_VALID_RANKS = {
    "A": range(1, MAX_RANK + 1),
    "B": range(2, MAX_RANK + 1),
    "C": range(2, MAX_RANK + 1),
    "D": range(4, MAX_RANK + 1),
    "E": (6, 7, 8),
    "F": (4,),
    "G": (2,),
}

# Default working catalog: every acceptance sweep runs over these.
CATALOG = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4")


def dot(u: Vec, v: Vec) -> int:
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def is_positive_vec(u: Vec) -> bool:
    """Sign of a root vector: roots have all coordinates >= 0 or all <= 0."""
    return any(a > 0 for a in u)


def _bourbaki_edges(letter: str, n: int) -> list[tuple[int, int, int, int]]:
    """Edges (i, j, a_ij, a_ji) of the Dynkin diagram, a_ij = <alpha_j, alpha_i_vee>."""
    chain = [(i, i + 1, -1, -1) for i in range(1, n)]
    if letter == "A":
        return chain
    if letter == "B":
        # alpha_n short: <alpha_n, alpha_{n-1}_vee> = -1, <alpha_{n-1}, alpha_n_vee> = -2
        return chain[:-1] + [(n - 1, n, -1, -2)]
    if letter == "C":
        # alpha_n long
        return chain[:-1] + [(n - 1, n, -2, -1)]
    if letter == "D":
        return chain[:-1] + [(n - 2, n, -1, -1)]
    if letter == "E":
        # Bourbaki: chain 1-3-4-...-n with node 2 hanging off node 4
        edges = [(1, 3, -1, -1), (2, 4, -1, -1)]
        edges += [(i, i + 1, -1, -1) for i in range(3, n)]
        return edges
    if letter == "F":
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    if letter == "G":
        # alpha_1 short, alpha_2 long: <alpha_2, alpha_1_vee> = -3
        return [(1, 2, -3, -1)]
    raise AssertionError(letter)


def cartan_matrix(letter: str, n: int) -> tuple[Vec, ...]:
    """Rows A[i] with A[i][j] = <alpha_j, alpha_i_vee> (1-based i, j in math)."""
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i, j, aij, aji in _bourbaki_edges(letter, n):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji
    return tuple(tuple(row) for row in a)


def _invert_fraction_matrix(m: tuple[Vec, ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan over Fraction; raises on singular input."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class AffineRoot:
    """Real affine root alpha + n*delta with finite part a root and integer level n."""

    finite: Vec
    level: int

    def is_positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and is_positive_vec(self.finite))

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(vneg(self.finite), -self.level)


class RootSystem:
    """Immutable container for one simple type; build via build_root_system()."""

    def __init__(self, letter: str, rank: int):
        if letter not in _VALID_RANKS or rank not in _VALID_RANKS[letter]:
            raise ValueError(f"not a valid simple type: {letter}{rank}")
        self.letter = letter
        self.rank = rank
        self.cartan = cartan_matrix(letter, rank)
        self._cartan_t_inv = _invert_fraction_matrix(
            tuple(tuple(self.cartan[j][i] for j in range(rank)) for i in range(rank)))
        self._generate_roots()
        self._find_theta()
        self._find_minuscule()
        self._find_involution()
        self._central_class_table()

    # -- construction ---------------------------------------------------

    def _generate_roots(self) -> None:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        # Pairs (root, coroot); reflecting a root reflects its coroot, so the
        # coroot of every root comes out of the same closure for free.
        known: dict[Vec, Vec] = {simple[i]: simple[i] for i in range(n)}
        frontier = list(known)
        while frontier:
            nxt = []
            for r in frontier:
                c = known[r]
                for i in range(n):
                    # s_i(r) = r - <r, alpha_i_vee> alpha_i
                    k = dot(self.cartan[i], r)
                    r2 = tuple(x - k * int(j == i) for j, x in enumerate(r))
                    # s_i(c) = c - <c_as_coroot, alpha_i> e_i
                    k2 = dot(tuple(self.cartan[j][i] for j in range(n)), c)
                    c2 = tuple(x - k2 * int(j == i) for j, x in enumerate(c))
                    if r2 not in known:
                        known[r2] = c2
                        nxt.append(r2)
            frontier = nxt
        pos = sorted((r for r in known if is_positive_vec(r)), key=lambda r: (sum(r), r))
        self.pos_roots: tuple[Vec, ...] = tuple(pos)
        self.roots: tuple[Vec, ...] = tuple(pos) + tuple(vneg(r) for r in pos)
        self.root_set = frozenset(self.roots)
        self._coroot = {r: known[r] for r in self.roots}
        if len(self.roots) != 2 * len(self.pos_roots):
            raise AssertionError("root closure produced asymmetric sign sets")

    def _find_theta(self) -> None:
        cands = [r for r in self.pos_roots
                 if all(all(x >= 0 for x in vsub(r, s)) for s in self.pos_roots)]
        if len(cands) != 1:
            raise AssertionError("highest root is not unique")
        self.theta: Vec = cands[0]
        self.theta_coroot: Vec = self._coroot[self.theta]

    def _find_minuscule(self) -> None:
        n = self.rank
        by_theta = tuple(i + 1 for i in range(n) if self.theta[i] == 1)
        # Cross-check: i is minuscule iff every positive root has i-coordinate 0 or 1.
        by_pairing = tuple(i + 1 for i in range(n)
                           if all(r[i] in (0, 1) for r in self.pos_roots))
        if by_theta != by_pairing:
            raise AssertionError("minuscule characterizations disagree")
        self.minuscule_nodes: tuple[int, ...] = by_theta

    def _find_involution(self) -> None:
        """f with alpha_f(i) = -w0(alpha_i), w0 built by greedy descent on rho_vee."""
        n = self.rank
        # Track rho_vee (all-ones coweight coords) down to its antidominant image,
        # composing the corresponding root-lattice matrix on the fly.
        m = [1] * n
        mat = [[int(i == j) for j in range(n)] for i in range(n)]  # columns = images
        steps = 0
        while True:
            i = next((k for k in range(n) if m[k] > 0), None)
            if i is None:
                break
            c = m[i]
            for j in range(n):
                m[j] -= c * self.cartan[i][j]
            # left-multiply mat by s_i on the root lattice
            for col in range(n):
                k = dot(self.cartan[i], tuple(mat[r][col] for r in range(n)))
                mat[i][col] -= k
            steps += 1
            if steps > len(self.pos_roots):
                raise AssertionError("longest-element descent did not terminate")
        if steps != len(self.pos_roots):
            raise AssertionError("longest element has wrong length")
        self.w0_images: tuple[Vec, ...] = tuple(
            tuple(mat[r][col] for r in range(n)) for col in range(n))
        f = []
        for i in range(n):
            img = vneg(self.w0_images[i])
            j = next((k for k in range(n)
                      if img == tuple(int(t == k) for t in range(n))), None)
            if j is None:
                raise AssertionError("-w0 does not permute the simple roots")
            f.append(j + 1)
        self.involution: tuple[int, ...] = tuple(f)

    def _central_class_table(self) -> None:
        """Map each nontrivial coset of the coweight lattice mod Q_vee to its minuscule node."""
        table: dict[tuple[Fraction, ...], int] = {}
        for i in self.minuscule_nodes:
            m = tuple(-int(k == i - 1) for k in range(self.rank))  # -varpi_i_vee
            table[self.coweight_class(m)] = i
        self._class_to_minuscule = table

    # -- lattice arithmetic ----------------------------------------------

    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    def coroot_of(self, root: Vec) -> Vec:
        return self._coroot[root]

    def simple_root(self, i: int) -> Vec:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def fund_coweight(self, i: int) -> Vec:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def coroot_to_coweight(self, c: Vec) -> Vec:
        """Coroot coordinates -> fundamental-coweight coordinates (transpose Cartan)."""
        n = self.rank
        return tuple(sum(c[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def coweight_to_coroot(self, m: Vec) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum(self._cartan_t_inv[i][j] * m[j] for j in range(n))
                     for i in range(n))

    def in_coroot_lattice(self, m: Vec) -> bool:
        return all(x.denominator == 1 for x in self.coweight_to_coroot(m))

    def coroot_coords(self, m: Vec) -> Vec:
        c = self.coweight_to_coroot(m)
        if any(x.denominator != 1 for x in c):
            raise ValueError("coweight is not in the coroot lattice")
        return tuple(int(x) for x in c)

    def coweight_class(self, m: Vec) -> tuple[Fraction, ...]:
        """Residue of a coweight modulo the coroot lattice, as fractional parts."""
        return tuple(x - x.__floor__() for x in self.coweight_to_coroot(m))

    def minuscule_class_node(self, m: Vec) -> Optional[int]:
        """Node i in I_m with [m] = [-varpi_i_vee], or None when m is in Q_vee."""
        if self.in_coroot_lattice(m):
            return None
        cls = self.coweight_class(m)
        i = self._class_to_minuscule.get(cls)
        if i is None:
            raise AssertionError("coset without minuscule representative")
        return i

    def pairing(self, m: Vec, root: Vec) -> int:
        """<lambda, alpha> for a coweight in fundamental-coweight coords and a root."""
        return dot(m, root)

    def affine_simple(self, i: int) -> AffineRoot:
        """alpha_0 = delta - theta, alpha_i the finite simple roots."""
        if i == 0:
            return AffineRoot(vneg(self.theta), 1)
        return AffineRoot(self.simple_root(i), 0)

    def __repr__(self) -> str:
        return f"RootSystem({self.name()})"


@lru_cache(maxsize=None)
def build_root_system(name: str) -> RootSystem:
    """Build (and cache) a root system from a name like 'D4'.

    The cache makes root systems singletons, so identity comparison of the
    .rs attribute across derived objects is sound.
    """
    name = name.strip()
    if len(name) < 2 or not name[0].isalpha():
        raise ValueError(f"bad root system name: {name!r}")
    letter = name[0].upper()
    try:
        rank = int(name[1:])
    except ValueError:
        raise ValueError(f"bad root system name: {name!r}") from None
    return RootSystem(letter, rank)
