"""Exact integer linear algebra for rank two lattices.

Matrices are handled as numpy arrays of Python ints (``dtype=object``) while
they are being transformed, and handed back to callers as tuples of tuples so
that every value leaving this module is immutable and hashable.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from toric.errors import RankDeficient, ZeroVector

logger = logging.getLogger("intlinalg")

IntVec = Tuple[int, ...]
IntMat = Tuple[IntVec, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> np.ndarray:
    return np.array([[int(x) for x in row] for row in rows], dtype=object)


def freeze(M: np.ndarray) -> IntMat:
    return tuple(tuple(int(x) for x in row) for row in M)


def rank(rows: Sequence[Sequence[int]]) -> int:
    if len(rows) == 0 or len(rows[0]) == 0:
        return 0
    return sp.Matrix([list(r) for r in rows]).rank()


def exgcd(a: int, b: int) -> np.ndarray:
    """2x2 integer matrix E of determinant 1 with E @ [a, b] = [gcd(a, b), 0].

    If a divides b, E[0, 1] is 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign

    # Euclid on the column [a, b], with the row operations recorded in the
    # augmented identity block.
    M = np.array([[b, 0, 1],
                  [a, 1, 0]], dtype=object)
    while M[1, 0] != 0:
        q = M[0, 0] // M[1, 0]
        M[0] -= q * M[1]
        M = M[::-1]

    g = M[0, 0]
    E = M[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    if g != 0:
        E[1] = [-b_sign * b // g, a_sign * a // g]
    else:
        E = np.eye(2, dtype=object)
    return E


def hnf(M: Sequence[Sequence[int]]) -> Tuple[IntMat, IntMat]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U @ M == H. Nonzero rows of H come
    first, pivots are positive and the entries above each pivot lie in
    [0, pivot).
    """
    A = as_matrix(M)
    m, k = A.shape
    U = np.eye(m, dtype=object)
    row = 0
    for col in range(k):
        if row == m:
            break
        for j in range(row + 1, m):
            if A[j, col] == 0:
                continue
            E = exgcd(A[row, col], A[j, col])
            A[[row, j]] = E @ A[[row, j]]
            U[[row, j]] = E @ U[[row, j]]
        if A[row, col] == 0:
            continue
        if A[row, col] < 0:
            A[row] = -A[row]
            U[row] = -U[row]
        for i in range(row):
            q = A[i, col] // A[row, col]
            if q:
                A[i] -= q * A[row]
                U[i] -= q * U[row]
        row += 1
    return freeze(A), freeze(U)


def nonzero_rows(H: IntMat) -> IntMat:
    return tuple(r for r in H if any(r))


def integer_kernel(B: Sequence[Sequence[int]]) -> IntMat:
    """Rows forming a Z-basis of {a : a . B = 0}, canonicalized to HNF."""
    n = len(B)
    if rank(B) < 2:
        raise RankDeficient(f"matrix of {n} rows has rank < 2")
    H, U = hnf(B)
    r = len(nonzero_rows(H))
    kernel = U[r:]
    if not kernel:
        return ()
    return nonzero_rows(hnf(kernel)[0])


def primitive(v: Sequence[int]) -> IntVec:
    g = math.gcd(*(int(x) for x in v))
    if g == 0:
        raise ZeroVector(f"{tuple(v)} has no direction")
    return tuple(int(x) // g for x in v)


def clockwise_normal(g: Sequence[int]) -> IntVec:
    a, b = primitive(g)
    return (b, -a)


def cross(p: Sequence[int], q: Sequence[int]) -> int:
    return p[0] * q[1] - p[1] * q[0]


def dot(p: Sequence[int], q: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(p, q))


@dataclass(frozen=True)
class GaleLattice:
    """A rank two lattice L = B Z^2 in Z^n, given by the rows b_i of B."""

    rows: IntMat
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if rank(self.rows) < 2:
            raise RankDeficient(f"Gale matrix {self.rows} has rank < 2")

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def B(self) -> np.ndarray:
        return as_matrix(self.rows)

    @cached_property
    def A(self) -> IntMat:
        if self.n == 2:
            return ()
        return integer_kernel(self.rows)

    @cached_property
    def cyclic(self) -> bool:
        # The polar cone {y : y . b_k >= 0} is nonzero exactly when some
        # normal of some b_i lies in it.
        for b in self.rows:
            for y in ((b[1], -b[0]), (-b[1], b[0])):
                if all(dot(y, bk) >= 0 for bk in self.rows):
                    return False
        return True

    def vector(self, z: Sequence[int]) -> IntVec:
        """phi(z) = B z."""
        return tuple(b[0] * z[0] + b[1] * z[1] for b in self.rows)

    def project(self, indices: Sequence[int]) -> "GaleLattice":
        """The lattice obtained by keeping only the given coordinates."""
        return GaleLattice(tuple(self.rows[i] for i in indices))


def solve_in_lattice(L: GaleLattice, c: Sequence[int]) -> Optional[IntVec]:
    """z with B z = c, or None when c is not in L."""
    rows = L.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            det = cross(rows[i], rows[j])
            if det == 0:
                continue
            z1 = Fraction(c[i] * rows[j][1] - c[j] * rows[i][1], det)
            z2 = Fraction(rows[i][0] * c[j] - rows[j][0] * c[i], det)
            if z1.denominator != 1 or z2.denominator != 1:
                return None
            z = (int(z1), int(z2))
            return z if L.vector(z) == tuple(c) else None
    raise RankDeficient("no nonsingular pair of rows")


def gale_lattice_basis(L: GaleLattice) -> IntMat:
    """HNF basis (two rows) of the lattice Z B generated by the Gale vectors."""
    return nonzero_rows(hnf(L.rows)[0])


def saturation_index(L: GaleLattice) -> int:
    """[Z^2 : Z B]; equals 1 exactly when L is saturated."""
    u, v = gale_lattice_basis(L)
    return abs(cross(u, v))


@dataclass(frozen=True)
class Merge:
    dropped: int
    kept: int
    factor: int


@dataclass(frozen=True)
class NormalizationLog:
    """How a Gale matrix was reduced; indices refer to the original rows."""

    n_original: int
    dropped_zero: Tuple[int, ...] = ()
    merges: Tuple[Merge, ...] = ()

    @property
    def kept(self) -> Tuple[int, ...]:
        gone = set(self.dropped_zero) | {m.dropped for m in self.merges}
        return tuple(i for i in range(self.n_original) if i not in gone)

    @property
    def empty(self) -> bool:
        return not self.dropped_zero and not self.merges

    def lift_exponents(self, exps: Sequence[int]) -> IntVec:
        """Exponent vector of the normalized ring -> original ring.

        A merge of b_d = m b_k substitutes x_k -> x_d^m x_k; merges are undone
        last-to-first.
        """
        out = [0] * self.n_original
        for position, index in enumerate(self.kept):
            out[index] = int(exps[position])
        for merge in reversed(self.merges):
            out[merge.dropped] += merge.factor * out[merge.kept]
        return tuple(out)


def _positive_integer_ratio(p: IntVec, q: IntVec) -> Optional[int]:
    """m >= 1 with p == m * q, if any."""
    if cross(p, q) != 0 or dot(p, q) <= 0:
        return None
    k = 0 if q[0] != 0 else 1
    if p[k] % q[k] != 0:
        return None
    m = p[k] // q[k]
    return m if m >= 1 and (m * q[0], m * q[1]) == tuple(p) else None


def normalize_gale(B: Sequence[Sequence[int]]) -> Tuple[GaleLattice, NormalizationLog]:
    rows = [tuple(int(x) for x in r) for r in B]
    dropped_zero = tuple(i for i, r in enumerate(rows) if not any(r))
    alive: List[int] = [i for i, r in enumerate(rows) if any(r)]
    merges: List[Merge] = []

    changed = True
    while changed:
        changed = False
        for i in alive:
            for j in alive:
                if i == j:
                    continue
                m = _positive_integer_ratio(rows[i], rows[j])
                if m is None:
                    continue
                if m == 1:
                    # duplicates: keep the lowest index
                    i, j = max(i, j), min(i, j)
                merges.append(Merge(dropped=i, kept=j, factor=m))
                alive.remove(i)
                logger.info(f"merged b_{i + 1} = {m} * b_{j + 1}")
                changed = True
                break
            if changed:
                break

    for i in dropped_zero:
        logger.info(f"dropped zero row b_{i + 1}")
    kept_rows = tuple(rows[i] for i in alive)
    if rank(kept_rows) < 2:
        raise RankDeficient("Gale matrix has rank < 2 after normalization")
    log = NormalizationLog(len(rows), dropped_zero, tuple(merges))
    return GaleLattice(kept_rows), log
