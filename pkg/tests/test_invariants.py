import pytest

from affsemi import (
    DimensionMismatch,
    NoMonomialReduction,
    NotStabilized,
    PreconditionFailed,
    a_k_set,
    a_k_stable_index,
    analyze,
    apery_set,
    betas_and_dS,
    build,
    group_is_full,
    gr_is_cohen_macaulay,
    gr_is_gorenstein,
    has_monomial_reduction,
    hilbert_samuel_estimate,
    is_cohen_macaulay,
    is_gorenstein,
    multiplicity,
    pick_identity_check,
    reduction_number,
    regularity,
    rem_class_count,
)
from affsemi import lattice as la
from affsemi.invariants import (
    _dim2_formula,
    a_k_thresholds,
    apery_maxima,
    apery_maxima_graded,
    determinant,
    hilbert_samuel_function,
    hilbert_settles_on,
    invariant_violations,
)
from affsemi.reduction import layer

from corpus import CORPUS, random_planar_family
from test_semigroup import brute_orders


def gr_cm_oracle(S):
    """The finite Valabrega-Valla check written out literally, level by level."""
    if not is_cohen_macaulay(S):
        return False
    r = reduction_number(S)
    ap = set(apery_set(S).values)
    for n in range(1, r + 1):
        for k in range(n, r + 1):
            for z in layer(S, k):
                if z in ap:
                    continue
                ok = False
                for a in S.extremal_rays:
                    rest = la.sub(z, a)
                    if S.contains(rest) and S.order(rest) >= n - 1:
                        ok = True
                if not ok:
                    return False
    return True


def hilbert_tail(S, cap=40):
    H = hilbert_samuel_function(S, cap)
    return [H[n] - 2 * H[n - 1] + H[n - 2] for n in range(cap - 2, cap + 1)]


class TestCohenMacaulay:
    def test_examples(self):
        assert is_cohen_macaulay(build([(2, 0), (0, 4), (1, 1), (1, 2)]))
        S = build([(4, 0), (0, 4), (1, 3), (3, 1)])
        assert not is_cohen_macaulay(S)
        rems = {}
        for w in apery_set(S):
            rems.setdefault(w.rem, []).append(w.value)
        assert sorted(rems[(2, 2)]) == [(2, 6), (6, 2)]
        assert is_cohen_macaulay(build([(2, 0), (0, 2)]))

    def test_space_example_is_not_cm(self):
        S = build(CORPUS["space_seven"])
        assert len(apery_set(S)) == 43
        assert rem_class_count(S) == 25
        assert not is_cohen_macaulay(S)
        collide = [w.value for w in apery_set(S) if w.rem == (2, 3, 0)]
        assert sorted(collide) == [(2, 3, 5), (12, 3, 0)]


class TestPick:
    def test_examples(self):
        p = pick_identity_check(build([(5, 3), (3, 5), (2, 2)]))
        assert (p.apery_count, p.outside_group_count, p.determinant, p.holds) == (4, 12, 16, True)
        p = pick_identity_check(build([(4, 0), (0, 4), (1, 3), (3, 1)]))
        assert not p.holds and p.determinant == 16
        p = pick_identity_check(build([(1, 0), (0, 1)]))
        assert (p.apery_count, p.outside_group_count, p.determinant, p.holds) == (1, 0, 1, True)

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            pick_identity_check(build(CORPUS["space_seven"]))

    @pytest.mark.parametrize("S", random_planar_family(60, seed=41))
    def test_equivalent_to_cm(self, S):
        assert pick_identity_check(S).holds == is_cohen_macaulay(S)


class TestAkSets:
    def test_examples(self):
        S = build([(4, 0), (0, 4), (1, 3), (3, 1)])
        assert (6, 2) in a_k_set(S, 1)
        assert a_k_set(S, 0) == ()
        assert a_k_set(build([(3, 1), (0, 4), (2, 2)]), 2) == ()

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            a_k_set(build(CORPUS["space_seven"]), 1)

    def test_can_keep_growing_after_reduction_number(self):
        # A_k is still growing at k = r here, so |Ap| - |A_r| overshoots
        S = build([(0, 3), (3, 2), (8, 7), (3, 6)])
        r = reduction_number(S)
        assert r == 5
        assert len(a_k_set(S, r)) == 0 and len(a_k_set(S, r + 1)) == 3
        assert a_k_stable_index(S) == r + 1
        assert _dim2_formula(S, swap=False, at_reduction_number=True) == 12
        assert _dim2_formula(S, swap=False) == 9 == rem_class_count(S)
        assert hilbert_tail(S, 30) == [9, 9, 9]

    def test_orientation_at_reduction_number(self):
        S = build([(8, 0), (0, 2), (7, 2), (8, 5), (1, 5)])
        r = reduction_number(S)
        plain = _dim2_formula(S, swap=False, at_reduction_number=True)
        swapped = _dim2_formula(S, swap=True, at_reduction_number=True)
        assert (plain, swapped) == (20, 16)
        assert a_k_stable_index(S) > r
        assert _dim2_formula(S, swap=False) == _dim2_formula(S, swap=True) == 16
        assert hilbert_tail(S, 30) == [16, 16, 16]

    @pytest.mark.parametrize("S", [s for s in random_planar_family(60, seed=42) if has_monomial_reduction(s)])
    def test_thresholds_match_membership(self, S):
        for swap in (False, True):
            thresholds = a_k_thresholds(S, swap)
            k_top = a_k_stable_index(S, swap) + 3
            for k in range(0, k_top + 1):
                expected = {w for w, t in thresholds.items() if t <= k}
                assert set(a_k_set(S, k, swap)) == expected


class TestMultiplicity:
    def test_apery_cm(self):
        m = multiplicity(build([(5, 0), (0, 5), (6, 0), (0, 6)]))
        assert (m.value, m.method, m.certified) == (25, "apery_cm", True)
        m = multiplicity(build([(3, 1), (4, 2), (5, 2)]))
        assert (m.value, m.method, m.certified, m.upper_bound_apery, m.dim2_det_bound) == (2, "apery_cm", True, 2, 2)

    def test_estimates(self):
        m = multiplicity(build([(2, 0), (0, 4), (1, 1), (1, 2)]))
        assert (m.value, m.method, m.certified, m.upper_bound_apery) == (6, "hilbert_estimate", False, 8)
        m = multiplicity(build([(5, 3), (3, 5), (2, 2)]))
        assert (m.value, m.method, m.certified) == (2, "hilbert_estimate", False)

    def test_planar_formula(self):
        S = build([(4, 0), (0, 4), (1, 3), (3, 1)])
        m = multiplicity(S)
        assert (m.value, m.method, m.certified) == (4, "dim2_apery_minus_Ar", True)
        assert m.value == len(apery_set(S)) - len(a_k_set(S, reduction_number(S)))
        assert "hilbert" in m.cross_checks and "dim2_swap" in m.cross_checks
        assert hilbert_samuel_estimate(S) == 4

    def test_premature_plateau_of_the_estimator(self):
        # second differences run 4,9,12,11,10,10,10,10,9,9,...
        S = build([(5, 1), (1, 2), (7, 8), (5, 8), (6, 2)])
        assert hilbert_samuel_estimate(S) == 10
        assert hilbert_tail(S) == [9, 9, 9]
        m = multiplicity(S)
        assert (m.value, m.certified) == (9, True)
        assert hilbert_settles_on(S, 9)

    def test_estimator_cap(self):
        with pytest.raises(NotStabilized):
            hilbert_samuel_estimate(build([(2, 0), (0, 4), (1, 1), (1, 2)]), cap=3)

    def test_hilbert_function_against_box(self):
        S = build([(3, 1), (0, 4), (2, 2)])
        oracle = brute_orders(S.generators, (60, 60))
        H = hilbert_samuel_function(S, 12)
        for n in range(13):
            # elements of order < n have coordinate sum < 4n, well inside the box
            assert H[n] == sum(1 for o in oracle.values() if o <= n - 1)

    def test_regular(self):
        m = multiplicity(build([(2, 0), (0, 2)]))
        assert m.value == 1 and m.certified

    def test_slow_tail_needs_larger_cap(self):
        # second differences climb 1,2,...,46 before settling at n = 46
        S = build([(0, 7), (8, 1), (5, 2)])
        with pytest.raises(NotStabilized):
            multiplicity(S)
        assert multiplicity(S, hilbert_cap=60).value == 46

    @pytest.mark.parametrize("S", random_planar_family(80, seed=43))
    def test_relations(self, S):
        try:
            m = multiplicity(S, cross_check=False, hilbert_cap=80)
        except NotStabilized:
            assert not has_monomial_reduction(S)
            return
        ap = len(apery_set(S))
        assert m.value <= ap == m.upper_bound_apery
        assert m.certified == (m.method in ("apery_cm", "dim2_apery_minus_Ar"))
        if has_monomial_reduction(S):
            assert m.certified and m.value == rem_class_count(S)
            assert (m.value == ap) == is_cohen_macaulay(S)
            assert _dim2_formula(S, swap=False) == _dim2_formula(S, swap=True)
        if is_cohen_macaulay(S) and m.certified:
            assert m.value <= determinant(S)
        if is_cohen_macaulay(S):
            assert (ap == determinant(S)) == group_is_full(S)


class TestGorenstein:
    def test_examples(self):
        S = build([(3, 1), (0, 4), (2, 2)])
        assert apery_maxima(S) == [(4, 4)] and is_gorenstein(S)
        assert not is_gorenstein(build([(4, 0), (0, 4), (1, 3), (3, 1)]))
        assert is_gorenstein(build([(2, 0), (0, 2)]))

    def test_graded_examples(self):
        S = build([(0, 2), (2, 1), (0, 3), (1, 2)])
        assert apery_maxima_graded(S) == [(1, 5)]
        assert gr_is_gorenstein(S)
        T = build([(3, 1), (0, 4), (1, 3), (2, 2)])
        assert len(apery_maxima_graded(T)) == 2
        assert not gr_is_gorenstein(T)
        assert gr_is_gorenstein(build([(2, 0), (0, 2)]))

    def test_needs_reduction(self):
        S = build([(4, 1), (1, 3), (2, 2)])
        for fn in (gr_is_cohen_macaulay, gr_is_gorenstein):
            with pytest.raises(NoMonomialReduction):
                fn(S)
        with pytest.raises(PreconditionFailed, match="reduction"):
            regularity(S)


class TestGraded:
    def test_cm_examples(self):
        assert not gr_is_cohen_macaulay(build([(6, 0), (0, 4), (3, 3), (3, 9)]))
        assert gr_is_cohen_macaulay(build([(0, 2), (2, 1), (0, 3), (1, 2)]))
        assert gr_is_cohen_macaulay(build([(2, 0), (0, 2)]))

    def test_betas(self):
        assert betas_and_dS(build([(0, 2), (2, 1), (0, 3), (1, 2)])) == ((1, 2, 1), 2)
        assert betas_and_dS(build([(2, 0), (0, 2)])) == ((1,), 0)
        S = build(CORPUS["space_seven"])
        betas, d_S = betas_and_dS(S)
        assert d_S == 6 and sum(betas) == 43
        assert S.order((18, 10, 2)) == 6 and (18, 10, 2) in apery_set(S)
        assert S.maximal_expression((18, 10, 2)) == (0, 0, 0, 4, 0, 0, 2)

    def test_regularity(self):
        assert regularity(build([(0, 2), (2, 1), (0, 3), (1, 2)])) == 2
        assert regularity(build([(2, 0), (0, 2)])) == 0
        with pytest.raises(PreconditionFailed):
            regularity(build([(6, 0), (0, 4), (3, 3), (3, 9)]))
        with pytest.raises(PreconditionFailed):
            regularity(build(CORPUS["space_seven"]))

    @pytest.mark.parametrize("S", [s for s in random_planar_family(80, seed=44) if has_monomial_reduction(s)])
    def test_cm_against_literal_check(self, S):
        assert gr_is_cohen_macaulay(S) == gr_cm_oracle(S)

    @pytest.mark.parametrize("name", ["reduction_example", "gr_not_cm", "gr_gorenstein", "two_graded_maxima", "five_six"])
    def test_cm_corpus_against_literal_check(self, name):
        S = build(CORPUS[name])
        assert gr_is_cohen_macaulay(S) == gr_cm_oracle(S)


class TestAnalyze:
    def test_reduction_example(self):
        rep = analyze(build([(3, 1), (0, 4), (2, 2)]))
        assert rep.reduction.has_monomial_reduction and rep.reduction.exact_reduction_number == 2
        assert rep.cohen_macaulay and rep.gorenstein and rep.multiplicity.value == 3

    def test_no_reduction(self):
        rep = analyze(build([(2, 0), (0, 4), (1, 1), (1, 2)]))
        assert not rep.reduction.has_monomial_reduction and rep.cohen_macaulay
        assert rep.multiplicity.value == 6 and not rep.multiplicity.certified
        assert rep.graded.gr_cohen_macaulay is None and rep.graded.gr_gorenstein is None and rep.graded.regularity is None

    def test_regular(self):
        rep = analyze(build([(2, 0), (0, 2)]))
        assert rep.multiplicity.value == 1 and rep.reduction.exact_reduction_number == 0
        assert rep.cohen_macaulay and rep.gorenstein and rep.graded.gr_cohen_macaulay and rep.graded.gr_gorenstein

    def test_uncapped_estimate_becomes_null(self):
        rep = analyze(build([(2, 0), (0, 4), (1, 1), (1, 2)]), hilbert_cap=3)
        assert rep.multiplicity is None
        assert any(n.startswith("multiplicity: null") for n in rep.annotations)

    def test_late_settling_is_annotated(self):
        rep = analyze(build([(0, 3), (3, 2), (8, 7), (3, 6)]))
        assert rep.multiplicity.value == 9
        assert any("settles" in n for n in rep.annotations)

    @pytest.mark.parametrize("S", random_planar_family(60, seed=45) + [build(g) for g in CORPUS.values()])
    def test_no_violations(self, S):
        assert invariant_violations(S) == []
