from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from borelreg.errors import DomainError
from borelreg.homology import (ExactMatrix, FieldSpec, SimplicialComplex, boundary_matrix,
                               rank, reduced_homology_ranks)
from borelreg.oracles import rank_by_fractions

HOLLOW_TRIANGLE = SimplicialComplex.from_facets([1, 2, 3], [(1, 2), (1, 3), (2, 3)])
TWO_POINTS = SimplicialComplex.from_facets([1, 2], [(1,), (2,)])
FIELDS = [FieldSpec(0), FieldSpec(2), FieldSpec(3)]


@st.composite
def complexes(draw, max_vertices=5):
    n = draw(st.integers(0, max_vertices))
    verts = list(range(1, n + 1))
    subsets = [f for k in range(1, n + 1) for f in combinations(verts, k)]
    facets = draw(st.lists(st.sampled_from(subsets), max_size=6)) if subsets else []
    kind = draw(st.sampled_from(["facets", "void", "irrelevant"]))
    if kind == "void":
        return SimplicialComplex.void(verts)
    if kind == "irrelevant" or not facets:
        return SimplicialComplex.irrelevant(verts)
    return SimplicialComplex.from_facets(verts, facets)


class TestComplex:
    def test_downward_closure_enforced(self):
        with pytest.raises(DomainError):
            SimplicialComplex([1, 2], [(), (1, 2)])

    def test_void_and_irrelevant_differ(self):
        assert SimplicialComplex.void() != SimplicialComplex.irrelevant()
        assert SimplicialComplex.void().is_void
        assert not SimplicialComplex.irrelevant().is_void


class TestBoundary:
    def test_augmentation_of_two_points(self):
        assert boundary_matrix(TWO_POINTS, 0).entries == [[1, 1]]

    def test_hollow_triangle(self):
        M = boundary_matrix(HOLLOW_TRIANGLE, 1)
        # rows: (1,), (2,), (3,); columns: (1,2), (1,3), (2,3)
        assert M.entries == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
        assert rank(M) == 2

    def test_single_vertex(self):
        assert boundary_matrix(SimplicialComplex.simplex([1]), 0).entries == [[1]]

    def test_empty_dimensions(self):
        M = boundary_matrix(TWO_POINTS, 1)
        assert (M.rows, M.cols) == (2, 0)

    @given(complexes())
    def test_boundary_squares_to_zero(self, C):
        for k in range(1, C.dimension + 1):
            A, B = boundary_matrix(C, k - 1), boundary_matrix(C, k)
            for i in range(A.rows):
                for j in range(B.cols):
                    assert sum(A.entries[i][t] * B.entries[t][j] for t in range(A.cols)) == 0


class TestRank:
    def test_examples(self):
        assert rank(ExactMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
        assert rank(ExactMatrix.zeros(3, 4)) == 0
        assert rank(ExactMatrix.from_rows([[1, 1], [1, 1]])) == 1

    def test_characteristic_dependence(self):
        M = ExactMatrix.from_rows([[2, 0], [0, 1]])
        assert rank(M, FieldSpec(0)) == 2
        assert rank(M, FieldSpec(2)) == 1

    @given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=6))
    @settings(max_examples=200)
    def test_bareiss_matches_fraction_elimination(self, rows):
        assert rank(ExactMatrix.from_rows(rows)) == rank_by_fractions(rows)

    @given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=5))
    def test_prime_field_rank_bounded_by_rational(self, rows):
        M = ExactMatrix.from_rows(rows)
        assert rank(M, FieldSpec(5)) <= rank(M)

    def test_largest_supported_prime(self):
        p = 2**31 - 1
        M = ExactMatrix.from_rows([[p + 1, 2], [3, 6]])
        assert rank(M, FieldSpec(p)) == 1
        with pytest.raises(DomainError):
            FieldSpec(2**61 - 1)

    def test_field_spec(self):
        assert FieldSpec.parse("q") == FieldSpec(0)
        assert FieldSpec.parse("f3") == FieldSpec(3)
        with pytest.raises(DomainError):
            FieldSpec(4)
        with pytest.raises(DomainError):
            FieldSpec.parse("r")


class TestReducedHomology:
    def test_examples(self):
        assert reduced_homology_ranks(TWO_POINTS) == {-1: 0, 0: 1}
        assert reduced_homology_ranks(HOLLOW_TRIANGLE) == {-1: 0, 0: 0, 1: 1}
        full = SimplicialComplex.simplex([1, 2, 3, 4])
        assert not any(reduced_homology_ranks(full).values())

    def test_void_and_irrelevant(self):
        assert reduced_homology_ranks(SimplicialComplex.void([1, 2])) == {-1: 0}
        assert reduced_homology_ranks(SimplicialComplex.irrelevant([1, 2])) == {-1: 1}

    def test_hollow_tetrahedron(self):
        C = SimplicialComplex.from_facets([1, 2, 3, 4], combinations([1, 2, 3, 4], 3))
        assert reduced_homology_ranks(C) == {-1: 0, 0: 0, 1: 0, 2: 1}

    @given(complexes())
    @settings(max_examples=150)
    def test_euler_poincare(self, C):
        f = C.f_vector()
        h = reduced_homology_ranks(C)
        assert sum((-1) ** k * f[k] for k in f) == sum((-1) ** k * h[k] for k in h)
        assert all(v >= 0 for v in h.values())

    @given(complexes())
    @settings(max_examples=100)
    def test_rank_nullity(self, C):
        f = C.f_vector()
        for k in range(0, C.dimension + 1):
            r_k = rank(boundary_matrix(C, k))
            r_next = rank(boundary_matrix(C, k + 1))
            assert r_k + r_next <= f[k]

    @given(complexes(max_vertices=4))
    @settings(max_examples=100)
    def test_cone_is_acyclic(self, C):
        if C.is_void:
            return
        assert not any(reduced_homology_ranks(C.cone(99)).values())

    @given(complexes())
    @settings(max_examples=150)
    def test_fields_agree_on_small_complexes(self, C):
        base = reduced_homology_ranks(C, FIELDS[0])
        for F in FIELDS[1:]:
            assert reduced_homology_ranks(C, F) == base
