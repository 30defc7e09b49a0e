"""Reductions of the maximal ideal.

``I`` below is the ideal generated by the monomials of the extremal rays. It is
a reduction of the maximal ideal exactly when every non-extremal generator has
degree at least 1, and then it is the only candidate monomial minimal
reduction (over an infinite field).

Exact reduction number
----------------------
The reduction number is the least ``n`` with ``m^(n+1) = I m^n``; once this
holds it holds for all larger ``n`` since ``m^(n+2) = m m^(n+1) = I m^(n+1)``.
As an ideal ``m^(n+1)`` is generated by the monomials ``x^z`` with ``z`` a sum
of exactly ``n+1`` generators. If such a ``z`` equals ``a_i + b`` with
``ord(b) >= n`` then so does ``z + t`` for any ``t`` in S (with ``b + t``), so
level ``n`` passes iff every such ``z`` has an extremal ``a_i`` with
``z - a_i`` in S of order at least ``n``. The search starts at the largest
Apery order, a known lower bound, and must stop by ``s*l - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import lattice as la
from .apery import apery_set, rem_is_injective, singular_exponents
from .errors import (
    DimensionMismatch,
    EmptyT,
    InvalidT,
    NoMonomialReduction,
    NotCohenMacaulay,
)
from .lattice import Vector
from .semigroup import Semigroup


@dataclass(frozen=True)
class ReductionReport:
    has_monomial_reduction: bool
    degrees: Tuple[Fraction, ...]
    bound_sl_minus_1: Optional[int]
    exact_reduction_number: Optional[int]
    lower_bound_max_apery_order: int


@dataclass(frozen=True)
class IdealDescription:
    """Generators ``x^u - x^v`` (binomials) and ``x^w`` (monomials)."""

    binomial_generators: Tuple[Tuple[Vector, Vector], ...]
    monomial_generators: Tuple[Vector, ...]


def layer(S: Semigroup, k: int) -> FrozenSet[Vector]:
    """All distinct sums of exactly ``k`` generators."""
    layers: List[FrozenSet[Vector]] = S.cached("layers", lambda: [frozenset([S.zero])])
    if len(layers) <= k:
        with S.lock:
            while len(layers) <= k:
                prev = layers[-1]
                layers.append(frozenset(la.add(z, g) for z in prev for g in S.generators))
    return layers[k]


def has_monomial_reduction(S: Semigroup) -> bool:
    """True iff every non-extremal generator has degree >= 1."""
    return all(deg >= 1 for deg in S.degrees())


def _require_dim2(S: Semigroup):
    if S.dimension != 2:
        raise DimensionMismatch(f"this test needs d = 2, semigroup has d = {S.dimension}")


def dim2_line_test(S: Semigroup) -> bool:
    """Planar test: every non-extremal generator lies on or beyond the line through a_1, a_2.

    "Beyond" means on the side away from the origin. Uses the sign of a cross
    product, so it needs no division and has no vertical-line special case.
    """
    _require_dim2(S)
    (c1, d1), (c2, d2) = S.extremal_rays
    det = c1 * d2 - c2 * d1  # the origin's side of the line has this sign

    def side(p):
        return (c2 - c1) * (p[1] - d1) - (d2 - d1) * (p[0] - c1)

    return all(side(p) * det <= 0 for p in S.others)


def line_slope(S: Semigroup) -> Optional[Fraction]:
    """Slope of the line through the two extremal rays (None if vertical)."""
    _require_dim2(S)
    (c1, d1), (c2, d2) = S.extremal_rays
    if c1 == c2:
        return None
    return Fraction(d1 - d2, c1 - c2)


def necessary_coordinate_test(S: Semigroup) -> bool:
    """Every non-extremal generator dominates the coordinatewise minimum of a_1, a_2.

    Necessary for a monomial reduction, not sufficient.
    """
    _require_dim2(S)
    (c1, d1), (c2, d2) = S.extremal_rays
    return all(c >= min(c1, c2) and d >= min(d1, d2) for c, d in S.others)


def sl_bound(S: Semigroup) -> Optional[int]:
    """``s * max(e_j) - 1``, or None when s = 0."""
    if S.codimension == 0:
        return None
    return S.codimension * max(se.e for se in singular_exponents(S)) - 1


def level_passes(S: Semigroup, n: int) -> bool:
    """Whether ``m^(n+1) = I m^n`` (see the module docstring)."""
    order = S._expr.order_or_minus_one
    for z in layer(S, n + 1):
        if not any(order(la.sub(z, a)) >= n for a in S.extremal_rays):
            return False
    return True


def reduction_number(S: Semigroup) -> int:
    """Exact reduction number of the maximal ideal with respect to ``I``."""
    if not has_monomial_reduction(S):
        raise NoMonomialReduction(f"{S!r} has a generator of degree < 1")

    def compute():
        if S.codimension == 0:
            return 0
        start = apery_set(S).max_order
        stop = max(sl_bound(S), start)
        for n in range(start, stop + 1):
            if level_passes(S, n):
                return n
        raise RuntimeError(f"level test did not pass by n = {stop} for {S!r}")

    return S.cached("reduction_number", compute)


def reduction_report(S: Semigroup) -> ReductionReport:
    exists = has_monomial_reduction(S)
    return ReductionReport(
        has_monomial_reduction=exists,
        degrees=S.degrees(),
        bound_sl_minus_1=sl_bound(S) if exists else None,
        exact_reduction_number=reduction_number(S) if exists else None,
        lower_bound_max_apery_order=apery_set(S).max_order,
    )


def is_minimal_multiplicity(S: Semigroup) -> bool:
    """For Cohen-Macaulay S: whether the Apery set has exactly ``1 + s`` elements."""
    if not rem_is_injective(S):
        raise NotCohenMacaulay(f"{S!r} is not Cohen-Macaulay")
    return len(apery_set(S)) == 1 + S.codimension


def alternative_reduction_generators(
    S: Semigroup, T: Optional[Iterable[Sequence[int]]] = None
) -> IdealDescription:
    """Generators of the binomial reduction ``(x^a1 - x^ai, x^t for t in T)``.

    ``T`` is a set of non-extremal generators containing every generator of
    degree < 1 and only generators of degree <= 1; by default exactly those of
    degree < 1. Nothing is verified about the resulting ideal.
    """
    degs = dict(zip(S.others, S.degrees()))
    below = {g for g, deg in degs.items() if deg < 1}
    at_most = {g for g, deg in degs.items() if deg <= 1}
    if T is None:
        if not below:
            raise EmptyT("no generator has degree < 1; use the monomial reduction")
        chosen = below
    else:
        chosen = {la.vec(t) for t in T}
        if not chosen:
            raise EmptyT("T must be non-empty")
        if not chosen <= set(S.others):
            raise InvalidT(f"T contains vectors that are not non-extremal generators: {sorted(chosen - set(S.others))}")
        if not below <= chosen <= at_most:
            raise InvalidT("T must contain every generator of degree < 1 and none of degree > 1")
    a1 = S.extremal_rays[0]
    binomials = tuple((a1, a) for a in S.extremal_rays[1:])
    monomials = tuple(g for g in S.others if g in chosen)
    return IdealDescription(binomials, monomials)
