import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affsemi import (
    INFINITE,
    DimensionMismatch,
    SingularBasis,
    hermite_normal_form,
    lattice_contains,
    lattice_index,
    solve_cone_coordinates,
)
from affsemi.lattice import in_rational_cone, rank


def minors_gcd(vectors):
    """gcd of all d x d minors; equals the index of a full-rank lattice in Z^d."""
    d = len(vectors[0])

    def det(rows):
        m = [[F(x) for x in r] for r in rows]
        out = F(1)
        for c in range(d):
            p = next((i for i in range(c, d) if m[i][c] != 0), None)
            if p is None:
                return 0
            if p != c:
                m[c], m[p] = m[p], m[c]
                out = -out
            out *= m[c][c]
            for i in range(c + 1, d):
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return int(out)

    return math.gcd(*(det(rows) for rows in itertools.combinations(vectors, d)))


def residue_classes(lattice, bound):
    """Count classes of Z^d mod the lattice by brute force (bound must be a multiple of the index)."""
    reps = []
    for v in itertools.product(range(bound), repeat=lattice.dimension):
        if not any(lattice_contains(lattice, tuple(a - b for a, b in zip(v, r))) for r in reps):
            reps.append(v)
    return len(reps)


small_vec = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


class TestConeCoordinates:
    @pytest.mark.parametrize(
        "basis, target, expected",
        [
            ([(3, 1), (0, 4)], (2, 2), (F(2, 3), F(1, 3))),
            ([(3, 1), (0, 4)], (3, 1), (F(1), F(0))),
            ([(2, 0), (0, 4)], (1, 1), (F(1, 2), F(1, 4))),
        ],
    )
    def test_examples(self, basis, target, expected):
        assert solve_cone_coordinates(basis, target) == expected

    def test_negative_coordinates_allowed(self):
        assert solve_cone_coordinates([(1, 0), (0, 1)], (-2, 3)) == (F(-2), F(3))

    def test_singular(self):
        with pytest.raises(SingularBasis):
            solve_cone_coordinates([(1, 2), (2, 4)], (1, 1))

    @given(
        st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)), min_size=3, max_size=3),
        st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)),
    )
    def test_back_substitution(self, basis, target):
        try:
            coords = solve_cone_coordinates(basis, target)
        except SingularBasis:
            assert rank(basis) < 3
            return
        recon = tuple(sum(c * b[i] for c, b in zip(coords, basis)) for i in range(3))
        assert recon == target
        assert all(isinstance(c, F) for c in coords)


class TestHermiteNormalForm:
    def test_index_two_example(self):
        L = hermite_normal_form([(2, 0), (0, 4), (1, 1)])
        assert L.rows == ((1, 1), (0, 2))
        assert [L.rows[i][p] for i, p in enumerate(L.pivots())] == [1, 2]
        assert lattice_index(L) == 2 == residue_classes(L, 2)

    def test_identity(self):
        L = hermite_normal_form([(1, 0), (0, 1)])
        assert L.rows == ((1, 0), (0, 1)) and L.rank == 2

    def test_index_of_five_three_family(self):
        # (1,1) is not in this lattice and the index is the gcd of minors, 4
        L = hermite_normal_form([(5, 3), (3, 5), (2, 2)])
        assert L.rank == 2
        assert lattice_index(L) == 4 == minors_gcd([(5, 3), (3, 5), (2, 2)]) == residue_classes(L, 4)
        assert not lattice_contains(L, (1, 1))
        assert not lattice_contains(L, (1, 0))
        assert lattice_contains(L, (2, 2))

    def test_zero_vectors_dropped(self):
        assert hermite_normal_form([(0, 0), (0, 0)]).rank == 0
        assert hermite_normal_form([(0, 0), (0, 3)]).rows == ((0, 3),)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            hermite_normal_form([(1, 0), (1, 0, 0)])

    @given(st.lists(small_vec, min_size=1, max_size=5))
    def test_shape_and_idempotence(self, vectors):
        L = hermite_normal_form(vectors)
        pivots = L.pivots()
        assert pivots == sorted(set(pivots))
        for i, (row, p) in enumerate(zip(L.rows, pivots)):
            assert row[p] > 0 and not any(row[:p])
            for above in L.rows[:i]:
                assert 0 <= above[p] < row[p]
        if L.rank:
            assert hermite_normal_form(list(L.rows)) == L

    @given(st.lists(small_vec, min_size=1, max_size=5))
    def test_same_span(self, vectors):
        L = hermite_normal_form(vectors)
        M = hermite_normal_form(list(L.rows) + vectors)
        assert M == L
        assert all(lattice_contains(L, v) for v in vectors)


class TestMembershipAndIndex:
    def test_examples(self):
        assert lattice_contains(hermite_normal_form([(2, 0), (0, 4), (1, 1)]), (1, 1))
        assert not lattice_contains(hermite_normal_form([(2, 0), (0, 4)]), (1, 1))
        # (2,2) = x(5,3) + y(3,5) forces x = y = 1/4
        assert not lattice_contains(hermite_normal_form([(5, 3), (3, 5)]), (2, 2))
        assert lattice_contains(hermite_normal_form([(5, 3), (3, 5)]), (8, 8))

    def test_index_examples(self):
        assert lattice_index(hermite_normal_form([(1, 0), (0, 1)])) == 1
        assert lattice_index(hermite_normal_form([(2, 0), (0, 4)])) == 8
        assert lattice_index(hermite_normal_form([(1, 1)])) == INFINITE

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            lattice_contains(hermite_normal_form([(1, 0), (0, 1)]), (1, 0, 0))

    @given(st.lists(small_vec, min_size=2, max_size=4), small_vec, small_vec)
    def test_group_closure(self, gens, u, v):
        L = hermite_normal_form(gens)
        # push u, v into the lattice via an integer combination of generators
        u = tuple(a * u[0] + b * u[1] for a, b in zip(gens[0], gens[1]))
        v = tuple(gens[0][i] * v[0] - gens[-1][i] * v[1] for i in range(2))
        assert lattice_contains(L, u) and lattice_contains(L, v)
        assert lattice_contains(L, tuple(a + b for a, b in zip(u, v)))
        assert lattice_contains(L, tuple(-a for a in v))

    @settings(max_examples=60)
    @given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), min_size=2, max_size=4))
    def test_index_matches_oracles(self, vectors):
        L = hermite_normal_form(vectors)
        if L.rank < 2:
            assert lattice_index(L) == INFINITE
            return
        idx = lattice_index(L)
        assert idx == abs(minors_gcd(vectors))
        if idx <= 64:
            assert residue_classes(L, idx) == idx


class TestRationalCone:
    def test_basic(self):
        assert in_rational_cone((1, 1), [(1, 0), (0, 1)])
        assert not in_rational_cone((-1, 1), [(1, 0), (0, 1)])
        assert in_rational_cone((0, 0), [])
        assert not in_rational_cone((1, 0), [])

    def test_square_cone(self):
        square = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
        for u in square:
            assert not in_rational_cone(u, [w for w in square if w != u])

    @settings(max_examples=80)
    @given(
        st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=4),
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
    )
    def test_combinations_are_inside(self, vectors, coeffs):
        target = tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) for i in range(3))
        assert in_rational_cone(target, vectors)
