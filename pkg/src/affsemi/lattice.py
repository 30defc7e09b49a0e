"""Exact integer and rational linear algebra over Z^d.

Vectors are plain tuples of Python ints (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator. Nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import DimensionMismatch, SingularBasis

Vector = Tuple[int, ...]

#: Returned by :func:`lattice_index` for lattices of rank below the ambient dimension.
INFINITE = math.inf


def vec(v: Sequence[int]) -> Vector:
    """Coerce a sequence to a lattice vector, rejecting non-integers."""
    out = []
    for x in v:
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, Fraction) and x.denominator == 1:
                x = x.numerator
            else:
                raise TypeError(f"lattice entries must be integers, got {x!r}")
        out.append(int(x))
    return tuple(out)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: Vector) -> Vector:
    return tuple(k * a for a in v)


def leq(u: Vector, v: Vector) -> bool:
    """Componentwise ``u <= v``."""
    return all(a <= b for a, b in zip(u, v))


def combine(coeffs: Sequence, vectors: Sequence[Vector]):
    """Return ``sum(coeffs[i] * vectors[i])`` (exact; entries may be Fractions)."""
    d = len(vectors[0])
    acc = [0] * d
    for c, v in zip(coeffs, vectors):
        for i in range(d):
            acc[i] += c * v[i]
    return tuple(acc)


# ---------------------------------------------------------------- rationals


def _column_matrix(basis: Sequence[Vector]):
    d = len(basis)
    for b in basis:
        if len(b) != d:
            raise DimensionMismatch(f"need {d} vectors of length {d}, got length {len(b)}")
    return [[Fraction(basis[j][i]) for j in range(d)] for i in range(d)]


def rational_inverse(basis: Sequence[Vector]):
    """Inverse of the square matrix whose *columns* are ``basis``.

    Gauss-Jordan elimination over Q. Raises :class:`SingularBasis` when the
    vectors are linearly dependent.
    """
    m = _column_matrix(basis)
    d = len(m)
    aug = [row + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(m)]
    for col in range(d):
        piv = next((r for r in range(col, d) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularBasis("basis vectors are linearly dependent")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


def apply_inverse(inverse, target: Vector) -> Tuple[Fraction, ...]:
    if len(target) != len(inverse):
        raise DimensionMismatch(f"target has length {len(target)}, expected {len(inverse)}")
    return tuple(sum((a * t for a, t in zip(row, target)), Fraction(0)) for row in inverse)


def solve_cone_coordinates(basis: Sequence[Vector], target: Vector) -> Tuple[Fraction, ...]:
    """Unique rationals ``l`` with ``sum(l[i] * basis[i]) == target``.

    Coordinates can be negative when ``target`` lies outside the cone spanned
    by ``basis``.

    >>> solve_cone_coordinates([(3, 1), (0, 4)], (2, 2))
    (Fraction(2, 3), Fraction(1, 3))
    """
    return apply_inverse(rational_inverse(basis), target)


def rank(vectors: Sequence[Vector]) -> int:
    """Rank over Q (computed over Z via the Hermite normal form)."""
    return hermite_normal_form(vectors).rank


# ------------------------------------------------------------ integer lattices


@dataclass(frozen=True)
class IntegerLatticeBasis:
    """Row-style Hermite normal form basis of a subgroup of Z^d.

    Rows are in echelon form, pivots are positive, and every entry above a
    pivot lies in ``[0, pivot)``.
    """

    rows: Tuple[Vector, ...]
    dimension: int

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self):
        return [next(i for i, x in enumerate(row) if x != 0) for row in self.rows]


def hermite_normal_form(vectors: Sequence[Vector]) -> IntegerLatticeBasis:
    """HNF of the Z-span of ``vectors`` by exact Euclidean row reduction.

    >>> hermite_normal_form([(2, 0), (0, 4), (1, 1)]).rows
    ((1, 1), (0, 2))
    """
    if not vectors:
        raise DimensionMismatch("need at least one vector")
    d = len(vectors[0])
    if any(len(v) != d for v in vectors):
        raise DimensionMismatch("vectors have different lengths")
    rows = [list(v) for v in vectors if any(v)]
    r = 0
    for col in range(d):
        if r >= len(rows):
            break
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[best] = rows[best], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][col] != 0:
                    q = rows[i][col] // rows[r][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][col] != 0:
                        done = False
            if done:
                break
        if rows[r][col] == 0:
            continue
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        p = rows[r][col]
        for i in range(r):
            q = rows[i][col] // p
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return IntegerLatticeBasis(tuple(tuple(row) for row in rows[:r]), d)


def lattice_contains(lattice: IntegerLatticeBasis, v: Vector) -> bool:
    """Whether ``v`` is an integer combination of the basis rows."""
    if len(v) != lattice.dimension:
        raise DimensionMismatch(f"vector has length {len(v)}, lattice lives in Z^{lattice.dimension}")
    rest = list(v)
    for row, p in zip(lattice.rows, lattice.pivots()):
        if any(rest[:p]):
            return False
        q, m = divmod(rest[p], row[p])
        if m:
            return False
        rest = [a - q * b for a, b in zip(rest, row)]
    return not any(rest)


def lattice_index(lattice: IntegerLatticeBasis):
    """``[Z^d : lattice]``, or :data:`INFINITE` when the rank is below ``d``."""
    if lattice.rank < lattice.dimension:
        return INFINITE
    return math.prod(row[p] for row, p in zip(lattice.rows, lattice.pivots()))


# ------------------------------------------------------- cone feasibility (LP)


def in_rational_cone(target: Vector, vectors: Sequence[Vector]) -> bool:
    """Whether ``target`` is a nonnegative rational combination of ``vectors``.

    Phase one of the simplex method over Q with Bland's rule, so it always
    terminates and never rounds.
    """
    d = len(target)
    if not any(target):
        return True
    if not vectors:
        return False
    m = len(vectors)
    # rows: A x + art = b with b >= 0
    tab = []
    for i in range(d):
        row = [Fraction(v[i]) for v in vectors] + [Fraction(int(i == k)) for k in range(d)]
        b = Fraction(target[i])
        if b < 0:
            row = [-x for x in row[:m]] + row[m:]
            b = -b
        tab.append(row + [b])
    basis = [m + i for i in range(d)]
    n = m + d
    # objective: minimise sum of artificials -> reduced costs
    cost = [Fraction(0)] * (n + 1)
    for row in tab:
        for j in range(m):
            cost[j] -= row[j]
        cost[n] -= row[n]
    while True:
        enter = next((j for j in range(n) if cost[j] < 0), None)
        if enter is None:
            break
        ratios = [
            (tab[i][n] / tab[i][enter], basis[i], i)
            for i in range(d)
            if tab[i][enter] > 0
        ]
        if not ratios:  # unbounded; cannot happen in phase one
            break
        _, _, leave = min(ratios)
        p = tab[leave][enter]
        tab[leave] = [x / p for x in tab[leave]]
        for i in range(d):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[n] == 0
