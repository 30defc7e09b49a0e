"""Ring-theoretic invariants of ``K[S]`` computed from the semigroup.

Cohen-Macaulayness is read off the Apery set (``rem`` injective on it), the
Gorenstein property from its maxima, and, when the extremal monomials generate
a reduction, the associated graded ring from order conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from . import lattice as la
from .apery import (
    AperyData,
    apery_set,
    fundamental_domain_points,
    group_contains,
    group_index,
    rem_is_injective,
)
from .errors import (
    DimensionMismatch,
    EmptyT,
    NoMonomialReduction,
    NotStabilized,
    PreconditionFailed,
)
from .lattice import Vector
from .reduction import (
    IdealDescription,
    ReductionReport,
    alternative_reduction_generators,
    has_monomial_reduction,
    layer,
    level_passes,
    reduction_number,
    reduction_report,
    sl_bound,
)
from .semigroup import Semigroup

DEFAULT_HILBERT_CAP = 40


def is_cohen_macaulay(S: Semigroup) -> bool:
    return rem_is_injective(S)


# ------------------------------------------------------------- dimension two


@dataclass(frozen=True)
class PickCheck:
    apery_count: int
    outside_group_count: int
    determinant: int
    holds: bool


def _require_dim2(S: Semigroup):
    if S.dimension != 2:
        raise DimensionMismatch(f"needs d = 2, semigroup has d = {S.dimension}")


def determinant(S: Semigroup) -> int:
    """``|c1*d2 - c2*d1|``, the area of the parallelogram on the extremal rays."""
    _require_dim2(S)
    (c1, d1), (c2, d2) = S.extremal_rays
    return abs(c1 * d2 - c2 * d1)


def pick_identity_check(S: Semigroup) -> PickCheck:
    """Compare ``|Ap|`` plus the parallelogram points outside the group of S with the parallelogram area.

    The two agree exactly when the ring is Cohen-Macaulay.
    """
    _require_dim2(S)
    n_ap = len(apery_set(S))
    outside = sum(1 for z in fundamental_domain_points(S) if not group_contains(S, z))
    det = determinant(S)
    return PickCheck(n_ap, outside, det, n_ap + outside == det)


def a_k_set(S: Semigroup, k: int, swap: bool = False) -> Tuple[Vector, ...]:
    """Apery elements ``w`` with ``w + k*a_2`` outside ``Ap(S, a_1)``.

    That is, ``w + k*a_2 - a_1`` lies in S. With ``swap`` the two extremal
    rays exchange roles.
    """
    _require_dim2(S)
    a1, a2 = S.extremal_rays
    if swap:
        a1, a2 = a2, a1
    shift = la.sub(la.scale(k, a2), a1)
    return tuple(w for w in apery_set(S).values if S.contains(la.add(w, shift)))


def a_k_thresholds(S: Semigroup, swap: bool = False) -> dict:
    """For each Apery element ``w``, the least ``k`` with ``w`` in ``A_k`` (absent if none).

    Every element of S is ``w' + n1*a_1 + n2*a_2`` with ``w'`` Apery and
    ``n1, n2 >= 0``, so ``w + k*a_2 - a_1`` lies in S iff for some ``w'`` the
    difference ``w - a_1 - w'`` has an integer ``a_1``-coordinate ``>= 0`` and
    an integer ``a_2``-coordinate ``>= -k``.
    """
    _require_dim2(S)
    i1, i2 = (1, 0) if swap else (0, 1)

    def compute():
        values = apery_set(S).values
        coords = {w: S.rational_coordinates(w) for w in values}
        out = {}
        for w in values:
            best = None
            for u in values:
                # coordinates of w - a_1 - u
                q1 = coords[w][i1] - 1 - coords[u][i1]
                q2 = coords[w][i2] - coords[u][i2]
                if q1.denominator == 1 and q2.denominator == 1 and q1 >= 0:
                    k = max(0, -int(q2))
                    best = k if best is None else min(best, k)
            if best is not None:
                out[w] = best
        return out

    return dict(S.cached(f"a_k_thresholds:{swap}", compute))


def a_k_stable_index(S: Semigroup, swap: bool = False) -> int:
    """Least ``k`` from which ``A_k`` no longer changes.

    ``A_k`` grows with ``k``, and this can happen beyond the reduction number.
    """
    return max(a_k_thresholds(S, swap).values(), default=0)


# -------------------------------------------------------------- multiplicity


@dataclass(frozen=True)
class MultiplicityResult:
    value: int
    method: str  # "apery_cm" | "dim2_apery_minus_Ar" | "hilbert_estimate"
    certified: bool
    upper_bound_apery: int
    dim2_det_bound: Optional[int] = None
    cross_checks: Tuple[str, ...] = ()


def _hilbert_values(S: Semigroup):
    """Yield ``H(1), H(2), ...`` with ``H(n) = #{z in S : ord(z) <= n - 1}``."""
    order = S._expr.order_or_minus_one
    total = 0
    n = 1
    while True:
        # an element of order k is a sum of exactly k generators, so it first
        # counts when its own layer is scanned
        total += sum(1 for z in layer(S, n - 1) if order(z) == n - 1)
        yield total
        n += 1


def hilbert_samuel_function(S: Semigroup, n_max: int) -> List[int]:
    """``[H(0), ..., H(n_max)]``, the colength of ``m^n``."""
    values = [0]
    for n, h in zip(range(1, n_max + 1), _hilbert_values(S)):
        values.append(h)
    return values


def _finite_differences(S: Semigroup, cap: int):
    """Yield ``(n, d-th difference of H at n)`` for ``n = d .. cap``."""
    d = S.dimension
    signs = [(-1) ** i * math.comb(d, i) for i in range(d + 1)]
    H = [0]
    for n, h in zip(range(1, cap + 1), _hilbert_values(S)):
        H.append(h)
        if n >= d:
            yield n, sum(c * H[n - i] for i, c in enumerate(signs))


def hilbert_samuel_estimate(S: Semigroup, cap: int = DEFAULT_HILBERT_CAP, window: int = 3) -> int:
    """Multiplicity from the d-th finite difference of the Hilbert-Samuel function.

    Accepted once the difference is constant for ``window`` consecutive ``n``;
    the true stabilisation point is not known, so the result is uncertified.
    Raises :class:`NotStabilized` if ``n`` would exceed ``cap``.
    """
    run_value, run_len = None, 0
    for _, diff in _finite_differences(S, cap):
        if diff == run_value:
            run_len += 1
        else:
            run_value, run_len = diff, 1
        if run_len >= window:
            return run_value
    raise NotStabilized(f"d-th difference did not stabilise for n <= {cap}")


def hilbert_settles_on(S: Semigroup, value: int, cap: int = DEFAULT_HILBERT_CAP, window: int = 3) -> bool:
    """Whether the d-th difference of H reaches ``value`` for ``window`` consecutive n.

    The window rule alone can lock onto a transient plateau, so a certified
    value is confirmed by watching the sequence settle on it. Returns False
    only when the differences near ``cap`` are constant and different from
    ``value``; raises :class:`NotStabilized` if they are not constant there.
    """
    tail = []
    for _, diff in _finite_differences(S, cap):
        tail = (tail + [diff])[-window:]
        if tail == [value] * window:
            return True
    if len(tail) == window and len(set(tail)) == 1:
        return False
    raise NotStabilized(f"d-th difference did not stabilise for n <= {cap}")


def _dim2_formula(S: Semigroup, swap: bool, at_reduction_number: bool = False) -> int:
    """``|Ap| - |A_k|`` for ``k`` where ``A_k`` has settled, or for ``k = r``."""
    r = reduction_number(S)
    k = r if at_reduction_number else max(r, a_k_stable_index(S, swap))
    return len(apery_set(S)) - len(a_k_set(S, k, swap=swap))


def rem_class_count(S: Semigroup) -> int:
    """Number of classes of S modulo the lattice of the extremal rays.

    Equals the rank of ``K[S]`` over the polynomial ring on the extremal
    monomials, hence the multiplicity whenever those monomials generate a
    reduction.
    """
    return len({w.rem for w in apery_set(S)})


def multiplicity(S: Semigroup, hilbert_cap: int = DEFAULT_HILBERT_CAP, cross_check: bool = True) -> MultiplicityResult:
    """Multiplicity of ``K[S]``, certified where the Apery set determines it.

    With a monomial reduction and Cohen-Macaulay: the Apery set size. In the
    plane with a monomial reduction: ``|Ap| - |A_k|`` once ``A_k`` has settled,
    which may be later than ``k = r``; both orientations of the extremal rays
    must agree. Otherwise the Hilbert-Samuel estimate. Certified values are
    compared with :func:`rem_class_count`, and with ``cross_check`` and
    ``d <= 2`` with where the Hilbert-Samuel differences settle. A mismatch
    raises :class:`RuntimeError`.
    """
    ap = len(apery_set(S))
    det = determinant(S) if S.dimension == 2 else None
    reduction = has_monomial_reduction(S)
    cm = is_cohen_macaulay(S)
    checks = []

    dim2_value = None
    if S.dimension == 2 and reduction:
        dim2_value = _dim2_formula(S, swap=False)
        swapped = _dim2_formula(S, swap=True)
        if swapped != dim2_value:
            raise RuntimeError(f"|Ap| - |A_k| depends on orientation for {S!r}: {dim2_value} vs {swapped}")
        checks.append("dim2_swap")
        r = reduction_number(S)
        k_stable = max(a_k_stable_index(S), a_k_stable_index(S, swap=True))
        if k_stable > r:
            checks.append(f"A_k:settles_at({k_stable})>r({r})")

    if reduction and cm:
        value, method, certified = ap, "apery_cm", True
        if dim2_value is not None:
            if dim2_value != value:
                raise RuntimeError(f"dim2 formula gives {dim2_value}, Apery count {value} for {S!r}")
            checks.append("dim2_apery_minus_Ar")
    elif dim2_value is not None:
        value, method, certified = dim2_value, "dim2_apery_minus_Ar", True
    else:
        value, method, certified = hilbert_samuel_estimate(S, hilbert_cap), "hilbert_estimate", False

    if reduction:
        classes = rem_class_count(S)
        if certified and value != classes:
            raise RuntimeError(f"{method} value {value} differs from the rem class count {classes} for {S!r}")
        if not certified and value != classes:
            checks.append(f"rem_classes:disagree({classes})")
        else:
            checks.append("rem_classes")

    if certified and cross_check and S.dimension <= 2:
        try:
            settled = hilbert_settles_on(S, value, hilbert_cap)
        except NotStabilized:
            checks.append("hilbert:not_stabilized")
        else:
            if not settled:
                raise RuntimeError(f"Hilbert-Samuel function settles away from {method} value {value} for {S!r}")
            checks.append("hilbert")

    if value > ap:
        raise RuntimeError(f"multiplicity {value} exceeds |Ap| = {ap} for {S!r}")
    return MultiplicityResult(value, method, certified, ap, det, tuple(checks))


# ------------------------------------------------------ Gorenstein and graded


def _maxima(elements, below) -> List[Vector]:
    """Elements not strictly below another one under the relation ``below(a, b)``."""
    return [a for a in elements if not any(b != a and below(a, b) for b in elements)]


def apery_maxima(S: Semigroup) -> List[Vector]:
    """Maximal Apery elements for ``a <= b iff b - a in S``."""
    return _maxima(apery_set(S).values, lambda a, b: S.contains(la.sub(b, a)))


def apery_maxima_graded(S: Semigroup) -> List[Vector]:
    """Maximal Apery elements for ``a <=_M b``: ``b - a`` in S and ``ord(b) = ord(b - a) + ord(a)``."""

    def below(a, b):
        diff = la.sub(b, a)
        return S.contains(diff) and S.order(b) == S.order(diff) + S.order(a)

    return _maxima(apery_set(S).values, below)


def is_gorenstein(S: Semigroup) -> bool:
    return is_cohen_macaulay(S) and len(apery_maxima(S)) == 1


def _require_reduction(S: Semigroup):
    if not has_monomial_reduction(S):
        raise NoMonomialReduction(f"{S!r} has no monomial minimal reduction; the graded criteria do not apply")


def gr_is_cohen_macaulay(S: Semigroup) -> bool:
    """Whether the associated graded ring is Cohen-Macaulay (needs a monomial reduction).

    Equivalent to: R Cohen-Macaulay and ``I ∩ m^n = I m^(n-1)`` for all n.
    For ``n > r`` both sides equal ``m^n`` since ``m^n = I m^(n-1)`` there.
    For ``n <= r`` a monomial ``x^z`` of ``I`` with ``ord(z) >= n`` needs some
    ``a_j`` with ``ord(z - a_j) >= n - 1``; if ``ord(z) > r`` this is automatic,
    and every ``z`` with ``ord(z) <= r`` is a sum of exactly ``ord(z)``
    generators, so scanning the layers ``1..r`` is exhaustive.
    """
    _require_reduction(S)

    def compute():
        if not is_cohen_macaulay(S):
            return False
        r = reduction_number(S)
        order = S._expr.order_or_minus_one
        apery = set(apery_set(S).values)
        seen = set()
        for k in range(1, r + 1):
            for z in layer(S, k):
                if z in seen or z in apery:
                    continue
                seen.add(z)
                need = min(order(z), r) - 1
                if not any(order(la.sub(z, a)) >= need for a in S.extremal_rays):
                    return False
        return True

    return S.cached("gr_cm", compute)


def gr_is_gorenstein(S: Semigroup) -> bool:
    _require_reduction(S)
    return gr_is_cohen_macaulay(S) and len(apery_maxima_graded(S)) == 1


def betas_and_dS(S: Semigroup) -> Tuple[Tuple[int, ...], int]:
    """Histogram of Apery orders (``betas[i]`` = elements of order i) and its top index."""
    ap = apery_set(S)
    d_S = ap.max_order
    betas = [0] * (d_S + 1)
    for w in ap:
        betas[w.order] += 1
    return tuple(betas), d_S


def regularity(S: Semigroup) -> int:
    """Castelnuovo-Mumford regularity of the associated graded ring.

    Equals the largest Apery order, provided a monomial reduction exists and the
    graded ring is Cohen-Macaulay. When S is homogeneous this is also the
    regularity of R.
    """
    if not has_monomial_reduction(S):
        raise PreconditionFailed("regularity formula needs a monomial minimal reduction")
    if not gr_is_cohen_macaulay(S):
        raise PreconditionFailed("regularity formula needs a Cohen-Macaulay associated graded ring")
    return betas_and_dS(S)[1]


# ----------------------------------------------------------------- reports


@dataclass(frozen=True)
class GradedRingStatus:
    gr_cohen_macaulay: Optional[bool]
    gr_gorenstein: Optional[bool]
    betas: Tuple[int, ...]
    d_S: int
    regularity: Optional[int]


@dataclass(frozen=True)
class Dim2Block:
    pick_lhs: int
    determinant: int
    pick_holds: bool
    group_index: int


@dataclass
class Report:
    generators: Tuple[Vector, ...]
    extremal_rays: Tuple[Vector, ...]
    dimension: int
    codimension: int
    degrees: Tuple[Fraction, ...]
    homogeneous: bool
    reduction: ReductionReport
    apery: AperyData
    cohen_macaulay: bool
    gorenstein: bool
    multiplicity: Optional[MultiplicityResult]
    graded: GradedRingStatus
    dim2: Optional[Dim2Block]
    alternative_reduction: Optional[IdealDescription]
    annotations: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        from .report import report_to_dict

        return report_to_dict(self)


def analyze(S: Semigroup, hilbert_cap: int = DEFAULT_HILBERT_CAP, cross_check: bool = True) -> Report:
    """Compute every invariant of ``S``; optional sections that fail become ``None`` with a note."""
    notes: List[str] = []
    red = reduction_report(S)
    ap = apery_set(S)
    cm = is_cohen_macaulay(S)
    gor = is_gorenstein(S)
    betas, d_S = betas_and_dS(S)

    try:
        mult = multiplicity(S, hilbert_cap=hilbert_cap, cross_check=cross_check)
    except NotStabilized as exc:
        mult = None
        notes.append(f"multiplicity: null ({exc})")
    else:
        for check in mult.cross_checks:
            if check.startswith("A_k:settles_at"):
                notes.append(f"A_k only settles after the reduction number ({check}); the settled set is used")
            if check.startswith("rem_classes:disagree"):
                notes.append(f"Hilbert-Samuel estimate disagrees with the rem class count ({check})")

    if red.has_monomial_reduction:
        notes.append("the extremal monomials generate the unique monomial minimal reduction (infinite field assumed)")
        gr_cm = gr_is_cohen_macaulay(S)
        gr_gor = gr_is_gorenstein(S)
        reg = regularity(S) if gr_cm else None
        if not gr_cm:
            notes.append("graded.regularity: null (associated graded ring is not Cohen-Macaulay)")
    else:
        gr_cm = gr_gor = reg = None
        notes.append("graded.cm, graded.gorenstein, graded.regularity: null (no monomial minimal reduction)")
        notes.append("monomial_reduction.bound, monomial_reduction.reduction_number: null (no monomial minimal reduction)")
    graded = GradedRingStatus(gr_cm, gr_gor, betas, d_S, reg)

    if red.exact_reduction_number is not None:
        r = red.exact_reduction_number
        notes.append(f"reduction number {r} >= max Apery order {ap.max_order}")
        if gr_cm:
            if r != d_S:
                raise RuntimeError(f"graded ring CM but reduction number {r} != d(S) = {d_S} for {S!r}")
            notes.append(f"graded ring Cohen-Macaulay: reduction number equals d(S) = {d_S}")
            if mult is not None and mult.certified:
                ok = r <= mult.value - S.codimension
                notes.append(f"bound r <= e - codim: {r} <= {mult.value - S.codimension} {'holds' if ok else 'FAILS'}")
        if reg is not None and S.is_homogeneous():
            notes.append(f"defining ideal homogeneous: reg(R) = reg(gr) = {reg}")

    dim2 = None
    if S.dimension == 2:
        pick = pick_identity_check(S)
        dim2 = Dim2Block(
            pick.apery_count + pick.outside_group_count, pick.determinant, pick.holds, group_index(S)
        )
    else:
        notes.append("dim2: null (dimension is not 2)")

    alt = None
    if not red.has_monomial_reduction:
        try:
            alt = alternative_reduction_generators(S)
        except EmptyT as exc:
            notes.append(f"alternative_reduction: null ({exc})")
    else:
        notes.append("alternative_reduction: null (monomial reduction exists)")

    return Report(
        generators=S.generators,
        extremal_rays=S.extremal_rays,
        dimension=S.dimension,
        codimension=S.codimension,
        degrees=S.degrees(),
        homogeneous=S.is_homogeneous(),
        reduction=red,
        apery=ap,
        cohen_macaulay=cm,
        gorenstein=gor,
        multiplicity=mult,
        graded=graded,
        dim2=dim2,
        alternative_reduction=alt,
        annotations=notes,
    )


def invariant_violations(S: Semigroup, k_extra: int = 3) -> List[str]:
    """Check the structural identities that must hold for every semigroup.

    Returns a list of human-readable violations (empty when all hold).
    """
    bad = []
    ap = apery_set(S)
    rems = {w.rem for w in ap}
    expected = {z for z in fundamental_domain_points(S) if group_contains(S, z)}
    if rems != expected:
        bad.append("rem(Ap) is not the set of parallelepiped points in the group of S")
    for w in ap:
        if la.add(la.combine(w.floor, S.extremal_rays), w.rem) != w.value:
            bad.append(f"rem decomposition of {w.value} does not add up")
        if not all(0 <= q < 1 for q in S.rational_coordinates(w.rem)):
            bad.append(f"rem of {w.value} is outside the parallelepiped")
    betas, d_S = betas_and_dS(S)
    if sum(betas) != len(ap) or betas[0] != 1:
        bad.append("betas do not sum to |Ap| or betas[0] != 1")
    if len(ap) < 1 + S.codimension:
        bad.append("|Ap| < 1 + s")
    cm = is_cohen_macaulay(S)
    if S.dimension == 2 and pick_identity_check(S).holds != cm:
        bad.append("Pick identity disagrees with rem-injectivity")
    if has_monomial_reduction(S):
        r = reduction_number(S)
        if S.codimension and not ap.max_order <= r <= sl_bound(S):
            bad.append("reduction number outside [max Apery order, s*l - 1]")
        if not all(level_passes(S, n) for n in (r + 1, r + 2)):
            bad.append("level test not monotone above the reduction number")
        if gr_is_cohen_macaulay(S):
            if r != d_S:
                bad.append("graded CM but r != d(S)")
            mult = multiplicity(S, cross_check=False)
            if mult.certified and r > mult.value - S.codimension:
                bad.append("graded CM but r > e - s")
        if gr_is_gorenstein(S) and betas != betas[::-1]:
            bad.append("graded Gorenstein but betas not symmetric")
        if S.dimension == 2:
            for swap in (False, True):
                k0 = max(r, a_k_stable_index(S, swap))
                settled = a_k_set(S, k0, swap)
                if any(a_k_set(S, k, swap) != settled for k in range(k0, k0 + k_extra + 1)):
                    bad.append("A_k changes after its computed settling index")
                if set(a_k_thresholds(S, swap)) != set(a_k_set(S, k0 + k_extra, swap)):
                    bad.append("A_k thresholds disagree with direct membership")
            plain, swapped = _dim2_formula(S, swap=False), _dim2_formula(S, swap=True)
            if plain != swapped:
                bad.append(f"|Ap| - |A_k| depends on the orientation of the extremal rays: {plain} vs {swapped}")
            if plain != rem_class_count(S):
                bad.append("|Ap| - |A_k| differs from the rem class count")
    return bad
