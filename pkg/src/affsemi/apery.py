"""Apery set with respect to the extremal rays, and related lattice data.

For each non-extremal generator ``a_{d+j}`` let ``c_j`` be the least positive
integer with ``c_j * a_{d+j}`` in the N-span of the extremal rays. Any
expression of an Apery element avoids the extremal rays (otherwise subtracting
one stays in S), and a coefficient ``m_j >= c_j`` could be traded for extremal
rays. So every Apery element is ``sum(m_j * a_{d+j})`` with ``0 <= m_j < c_j``.

The set is also closed under dropping a non-extremal summand: if ``w - a_i``
were in S for the smaller element it would be for ``w`` too. :func:`apery_set`
therefore grows it from 0 by adding non-extremal generators and keeping only
Apery elements, which visits far fewer points than the box above.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from . import lattice as la
from .lattice import Vector
from .semigroup import Semigroup


@dataclass(frozen=True)
class SingularExponent:
    """``c * a_{d+j} == sum(l[i] * a_i)`` with ``c`` minimal, and ``e = sum(l)``."""

    generator_index: int
    c: int
    l: Tuple[int, ...]
    e: int


@dataclass(frozen=True)
class AperyElement:
    value: Vector
    order: int
    rem: Vector
    floor: Tuple[int, ...]


@dataclass(frozen=True)
class AperyData:
    elements: Tuple[AperyElement, ...]  # sorted by value

    @property
    def values(self) -> Tuple[Vector, ...]:
        return tuple(w.value for w in self.elements)

    @property
    def max_order(self) -> int:
        return max(w.order for w in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v):
        return tuple(v) in set(self.values)


def singular_exponent(S: Semigroup, j: int) -> SingularExponent:
    """``c_j``, ``l_j`` and ``e_j`` for the j-th non-extremal generator (1-based)."""
    if not 1 <= j <= S.codimension:
        raise IndexError(f"j must be in 1..{S.codimension}, got {j}")
    coords = S.cone_coordinates(S.others[j - 1])
    c = math.lcm(*(q.denominator for q in coords))
    l = tuple(int(q * c) for q in coords)
    return SingularExponent(j, c, l, sum(l))


def singular_exponents(S: Semigroup) -> Tuple[SingularExponent, ...]:
    return S.cached(
        "singular_exponents",
        lambda: tuple(singular_exponent(S, j) for j in range(1, S.codimension + 1)),
    )


def rem_decompose(S: Semigroup, v) -> Tuple[Tuple[int, ...], Vector]:
    """Split ``v = sum(floor[i] * a_i) + rem`` with rem in the half-open parallelepiped.

    >>> from affsemi import build
    >>> rem_decompose(build([(3, 1), (0, 4), (2, 2)]), (4, 4))
    ((1, 0), (1, 3))
    """
    coords = S.cone_coordinates(v)
    floor = tuple(math.floor(q) for q in coords)
    rem = la.sub(tuple(v), la.combine(floor, S.extremal_rays))
    return floor, rem


def _is_apery(S: Semigroup, w: Vector) -> bool:
    return not any(S.contains(la.sub(w, a)) for a in S.extremal_rays)


def apery_set(S: Semigroup) -> AperyData:
    """``Ap(S, E)``: elements ``w`` of S with ``w - a_i`` outside S for every extremal ray."""

    def compute():
        found = {S.zero}
        frontier = [S.zero]
        while frontier:
            grown = []
            for w in frontier:
                for g in S.others:
                    u = la.add(w, g)
                    if u not in found and _is_apery(S, u):
                        found.add(u)
                        grown.append(u)
            frontier = grown
        elements = []
        for w in sorted(found):
            floor, rem = rem_decompose(S, w)
            elements.append(AperyElement(w, S.order(w), rem, floor))
        return AperyData(tuple(elements))

    return S.cached("apery", compute)


def apery_set_from_box(S: Semigroup) -> FrozenSet[Vector]:
    """Apery set by filtering every ``sum(m_j * a_{d+j})`` with ``m_j < c_j``."""
    ranges = [range(se.c) for se in singular_exponents(S)]
    candidates = {la.combine(m, S.others) if m else S.zero for m in itertools.product(*ranges)}
    return frozenset(w for w in candidates if _is_apery(S, w))


def apery_set_by_definition(S: Semigroup, box: Vector) -> FrozenSet[Vector]:
    """Apery elements inside ``[0, box]`` found straight from the definition.

    Independent of the candidate bound used by :func:`apery_set`; meant for
    cross-checking.
    """
    out = set()
    for v in itertools.product(*(range(b + 1) for b in box)):
        if S.contains(v) and _is_apery(S, v):
            out.add(v)
    return frozenset(out)


def fundamental_domain_points(S: Semigroup) -> FrozenSet[Vector]:
    """Integer points with every cone coordinate in ``[0, 1)``.

    Such points are bounded by ``sum(a_i)`` componentwise, so scanning that box
    is exhaustive.
    """

    def compute():
        top = la.combine([1] * S.dimension, S.extremal_rays)
        pts = set()
        for v in itertools.product(*(range(t + 1) for t in top)):
            coords = S.rational_coordinates(v)
            if all(0 <= q < 1 for q in coords):
                pts.add(v)
        return frozenset(pts)

    return S.cached("fundamental_domain", compute)


def group_contains(S: Semigroup, v) -> bool:
    """Membership in the group of differences of S."""
    return la.lattice_contains(S.group_lattice, tuple(v))


def group_index(S: Semigroup):
    return la.lattice_index(S.group_lattice)


def group_is_full(S: Semigroup) -> bool:
    return group_index(S) == 1


def rem_is_injective(S: Semigroup) -> bool:
    """Whether distinct Apery elements have distinct ``rem`` values (the Cohen-Macaulay test)."""
    rems = [w.rem for w in apery_set(S)]
    return len(set(rems)) == len(rems)
