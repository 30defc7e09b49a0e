"""Simplicial affine semigroups given by generators.

:func:`build` validates a raw generator list, detects the extremal rays and
returns a :class:`Semigroup` whose generators are ordered extremal rays first
(``a_1..a_d``) followed by the remaining generators (``a_{d+1}..a_{d+s}``),
each group in input order.

Membership and order are answered by memoised descent: ``v`` lies in ``S`` iff
``v == 0`` or ``v - g`` lies in ``S`` for some generator ``g <= v``. Each step
strictly lowers the coordinate sum, so the recursion stays inside the box
``[0, v]`` and terminates.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import lattice as la
from .errors import (
    DimensionMismatch,
    DuplicateGenerator,
    NegativeEntry,
    NotMember,
    NotMinimal,
    NotSimplicial,
    OutsideCone,
    RankDeficient,
    ZeroGenerator,
)
from .lattice import Vector


class _Expressions:
    """Membership, order and maximal expressions for a fixed generator list.

    The memo tables only ever receive values that are a pure function of the
    key, so concurrent readers at worst duplicate work; no locking is needed
    under the GIL.
    """

    def __init__(self, generators: Sequence[Vector]):
        self.generators = tuple(generators)
        self.dimension = len(self.generators[0]) if self.generators else 0
        self._zero = (0,) * self.dimension
        self._order: Dict[Vector, int] = {self._zero: 0}
        self._restricted: Dict[Tuple[Vector, int], int] = {}

    def order_or_minus_one(self, v: Vector) -> int:
        """``ord(v)``, or -1 when ``v`` is not a member."""
        memo = self._order
        if v in memo:
            return memo[v]
        if any(x < 0 for x in v):
            return -1
        gens = self.generators
        stack = [v]
        while stack:
            u = stack[-1]
            if u in memo:
                stack.pop()
                continue
            children = []
            for g in gens:
                w = tuple(a - b for a, b in zip(u, g))
                if min(w) >= 0:
                    children.append(w)
            pending = [w for w in children if w not in memo]
            if pending:
                stack.extend(pending)
                continue
            best = -1
            for w in children:
                o = memo[w]
                if o >= 0 and o + 1 > best:
                    best = o + 1
            memo[u] = best
            stack.pop()
        return memo[v]

    def contains(self, v: Vector) -> bool:
        return self.order_or_minus_one(v) >= 0

    def _best_from(self, v: Vector, k: int) -> int:
        # largest coefficient sum of an expression of v using generators k, k+1, ...
        if k == len(self.generators):
            return 0 if not any(v) else -1
        key = (v, k)
        if key in self._restricted:
            return self._restricted[key]
        g = self.generators[k]
        best = -1
        x, w = 0, v
        while all(c >= 0 for c in w):
            rest = self._best_from(w, k + 1)
            if rest >= 0 and x + rest > best:
                best = x + rest
            x += 1
            w = la.sub(w, g)
        self._restricted[key] = best
        return best

    def maximal_expression(self, v: Vector) -> Optional[Tuple[int, ...]]:
        """Coefficients of a maximal expression of ``v``, or None if ``v`` is not a member.

        Among maximal expressions, lower-indexed generators are used as much
        as possible (the lexicographically largest coefficient vector).
        """
        total = self._best_from(v, 0)
        if total < 0:
            return None
        coeffs = []
        w = v
        for k, g in enumerate(self.generators):
            target = total - sum(coeffs)
            # largest x such that the remainder still completes to the maximal total
            x = 0
            while all(c >= 0 for c in la.sub(w, la.scale(x + 1, g))):
                x += 1
            while x >= 0:
                rest = self._best_from(la.sub(w, la.scale(x, g)), k + 1)
                if rest >= 0 and x + rest == target:
                    break
                x -= 1
            coeffs.append(x)
            w = la.sub(w, la.scale(x, g))
        return tuple(coeffs)


def _primitive(v: Vector) -> Vector:
    g = math.gcd(*v)
    return tuple(x // g for x in v)


class Semigroup:
    """A validated simplicial affine semigroup ``S`` in N^d.

    Use :func:`build` to construct one. Attributes:

    * ``generators`` -- minimal generators, extremal rays first
    * ``extremal_rays`` -- ``generators[:d]``
    * ``others`` -- ``generators[d:]``
    * ``dimension`` (d) and ``codimension`` (s)
    * ``group_lattice`` -- HNF basis of the group of differences
    """

    def __init__(self, extremal_rays: Sequence[Vector], others: Sequence[Vector]):
        self.extremal_rays: Tuple[Vector, ...] = tuple(extremal_rays)
        self.others: Tuple[Vector, ...] = tuple(others)
        self.generators: Tuple[Vector, ...] = self.extremal_rays + self.others
        self.dimension = len(self.extremal_rays)
        self.codimension = len(self.others)
        self.group_lattice = la.hermite_normal_form(list(self.generators))
        self._inverse = la.rational_inverse(self.extremal_rays)
        self._expr = _Expressions(self.generators)
        # results of derived computations (Apery set, reduction number, ...)
        self._derived: Dict[str, object] = {}
        self.lock = threading.RLock()  # for caches that grow in place

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Semigroup<{gens}>"

    @property
    def zero(self) -> Vector:
        return (0,) * self.dimension

    def _check_dim(self, v: Sequence[int]) -> Vector:
        v = la.vec(v)
        if len(v) != self.dimension:
            raise DimensionMismatch(f"expected a vector of length {self.dimension}, got {v}")
        return v

    def cached(self, key: str, compute):
        """Memoise a derived quantity on this instance."""
        if key not in self._derived:
            # two threads may both compute; the first stored result wins
            self._derived.setdefault(key, compute())
        return self._derived[key]

    # -- membership and order ------------------------------------------------

    def contains(self, v: Sequence[int]) -> bool:
        """Whether ``v`` is a sum of generators (vectors with a negative entry are not)."""
        return self._expr.contains(self._check_dim(v))

    __contains__ = contains

    def order(self, v: Sequence[int]) -> int:
        """Largest number of generators (with repetition) summing to ``v``."""
        v = self._check_dim(v)
        o = self._expr.order_or_minus_one(v)
        if o < 0:
            raise NotMember(f"{v} is not in {self!r}")
        return o

    def maximal_expression(self, v: Sequence[int]) -> Tuple[int, ...]:
        """Coefficients ``x`` with ``sum(x) == order(v)`` and ``sum(x_k * a_k) == v``.

        Ties are broken by using lower-indexed generators as much as possible.
        """
        v = self._check_dim(v)
        coeffs = self._expr.maximal_expression(v)
        if coeffs is None:
            raise NotMember(f"{v} is not in {self!r}")
        return coeffs

    # -- cone coordinates ------------------------------------------------------

    def rational_coordinates(self, v: Sequence[int]) -> Tuple[Fraction, ...]:
        """Coordinates in the extremal-ray basis, with no sign check."""
        return la.apply_inverse(self._inverse, self._check_dim(v))

    def cone_coordinates(self, v: Sequence[int]) -> Tuple[Fraction, ...]:
        coords = self.rational_coordinates(v)
        if any(c < 0 for c in coords):
            raise OutsideCone(f"{tuple(v)} has negative cone coordinates {coords}")
        return coords

    def degree(self, v: Sequence[int]) -> Fraction:
        """Sum of the cone coordinates of ``v``."""
        return sum(self.cone_coordinates(v), Fraction(0))

    def degrees(self) -> Tuple[Fraction, ...]:
        """Degrees of the non-extremal generators."""
        return tuple(self.degree(g) for g in self.others)

    def is_homogeneous(self) -> bool:
        """True when every non-extremal generator has degree 1.

        Then every expression is maximal, the defining ideal is homogeneous and
        the ring coincides with its associated graded ring.
        """
        return all(deg == 1 for deg in self.degrees())


def _validate(raw: Iterable[Sequence[int]]) -> List[Vector]:
    gens = [la.vec(g) for g in raw]
    if not gens:
        raise ValueError("need at least one generator")
    d = len(gens[0])
    if d == 0:
        raise DimensionMismatch("generators must have at least one coordinate")
    seen = set()
    for g in gens:
        if len(g) != d:
            raise DimensionMismatch(f"generator {g} has length {len(g)}, expected {d}")
        if any(x < 0 for x in g):
            raise NegativeEntry(f"generator {g} has a negative entry")
        if not any(g):
            raise ZeroGenerator("the zero vector cannot be a generator")
        if g in seen:
            raise DuplicateGenerator(f"generator {g} is listed twice")
        seen.add(g)
    return gens


def extreme_directions(generators: Sequence[Vector]) -> List[Vector]:
    """Primitive directions of the extreme rays of the cone over ``generators``.

    A direction is extreme iff it is not a nonnegative rational combination of
    the other directions; tested exactly with :func:`lattice.in_rational_cone`.
    Returned in order of first appearance.
    """
    directions: List[Vector] = []
    for g in generators:
        u = _primitive(g)
        if u not in directions:
            directions.append(u)
    return [
        u
        for u in directions
        if not la.in_rational_cone(u, [w for w in directions if w != u])
    ]


def build(raw_generators: Iterable[Sequence[int]]) -> Semigroup:
    """Validate generators and return the simplicial semigroup they span.

    Raises:
        ZeroGenerator, NegativeEntry, DuplicateGenerator: malformed input.
        RankDeficient: the generators do not span Q^d.
        NotSimplicial: the cone has more than d extreme rays.
        NotMinimal: some generator is a sum of the others (with a witness).

    >>> build([(2, 2), (0, 4), (3, 1)]).extremal_rays
    ((0, 4), (3, 1))
    """
    gens = _validate(raw_generators)
    d = len(gens[0])
    if la.rank(gens) < d:
        raise RankDeficient(f"generators span a space of dimension < {d}")
    extreme = extreme_directions(gens)
    if len(extreme) != d:
        raise NotSimplicial(f"cone has {len(extreme)} extreme rays in dimension {d}")

    chosen = set()
    for u in extreme:
        on_ray = [g for g in gens if _primitive(g) == u]
        chosen.add(min(on_ray, key=sum))
    extremal = [g for g in gens if g in chosen]
    others = [g for g in gens if g not in chosen]

    ordered = extremal + others
    for k, g in enumerate(ordered):
        rest = ordered[:k] + ordered[k + 1:]
        if not rest:
            continue
        coeffs = _Expressions(rest).maximal_expression(g)
        if coeffs is not None:
            raise NotMinimal(g, [(h, c) for h, c in zip(rest, coeffs) if c])
    return Semigroup(extremal, others)
