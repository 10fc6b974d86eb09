from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticespec import exactmath as em
from latticespec.errors import (
    DimensionError,
    InputError,
    OriginNotInteriorError,
    SimplicialityError,
)
from latticespec.polytope import LatticePolytope, from_vertices, lattice_points_naive


@st.composite
def random_simplex(draw, dims=(2, 3)):
    """Simplex with ``v_0 = -sum c_i v_i`` so the origin is interior."""
    n = draw(st.sampled_from(dims))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n))
    if em.det(rows) == 0:
        rows = [list(r) for r in em.identity(n)]
    c = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    v0 = [-sum(ci * r[j] for ci, r in zip(c, rows)) for j in range(n)]
    return LatticePolytope.from_vertices([v0] + rows)


def test_triangle_basics(triangle):
    assert len(triangle.facets) == 3
    assert [f.vertex_indices for f in triangle.facets] == [(0, 1), (0, 2), (1, 2)]
    assert [f.normal for f in triangle.facets] == [(1, 1), (1, -2), (-2, 1)]
    assert triangle.is_reflexive()
    assert triangle.normalized_volume() == 3


def test_rejects_bad_input():
    with pytest.raises(DimensionError):
        from_vertices(2, [(1, 0), (0, 1)])
    with pytest.raises(OriginNotInteriorError):
        from_vertices(2, [(1, 0), (0, 1), (1, 1)])
    with pytest.raises(DimensionError):
        from_vertices(2, [(1, 0), (-1, 0), (2, 0)])
    with pytest.raises(SimplicialityError):
        # octahedron facets are simplices but the cube's are squares
        from_vertices(3, [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
    with pytest.raises(InputError):
        from_vertices(2, [(1, 0), (0, 1), (-1, -1), (0, 0)])
    with pytest.raises(InputError):
        from_vertices(2, [(1, 0), (1, 0), (0, 1), (-1, -1)])


def test_square_facets(square):
    normals = {f.normal for f in square.facets}
    assert normals == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert square.is_reflexive()
    assert square.normalized_volume() == 8


def test_simplex_113(simplex_113):
    normals = [f.normal for f in simplex_113.facets]
    assert normals == [(1, Fraction(2, 3)), (1, -1), (-4, -1)]
    for f in simplex_113.facets:
        for i in f.vertex_indices:
            assert f.value(simplex_113.vertices[i]) == 1
    assert not simplex_113.is_reflexive()
    assert simplex_113.normalized_volume() == 5


def test_lattice_points(triangle, square):
    assert triangle.lattice_points(1) == [(-1, -1), (0, 0), (0, 1), (1, 0)]
    assert len(square.lattice_points(1)) == 9
    assert len(square.lattice_points(2)) == 25
    with pytest.raises(InputError):
        square.lattice_points(0)


def test_delta_vectors(triangle, square):
    assert square.delta_vector() == (1, 6, 1)
    assert triangle.delta_vector() == (1, 1, 1)
    assert from_vertices(2, [(1, 0), (-1, 2), (0, -1)]).delta_vector() == (1, 2, 1)


def test_nonprimitive_vertices_accepted():
    P = from_vertices(2, [(2, 0), (0, 2), (-2, -2)])
    assert P.normalized_volume() == 12
    assert not P.is_reflexive()


@settings(max_examples=40, deadline=None)
@given(random_simplex())
def test_fast_enumeration_matches_naive_scan(P):
    for ell in (1, 2):
        assert P.lattice_points(ell) == sorted(lattice_points_naive(P, ell))


@settings(max_examples=40, deadline=None)
@given(random_simplex())
def test_delta_vector_properties(P):
    d = P.delta_vector()
    assert d[0] == 1
    assert all(x >= 0 for x in d)
    assert sum(d) == P.normalized_volume()
    if P.is_reflexive():
        assert d == d[::-1]


def _interpolate(xs, ys, x):
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Fraction(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


@settings(max_examples=25, deadline=None)
@given(random_simplex(dims=(2,)))
def test_ehrhart_counts_are_polynomial(P):
    n = P.dim
    xs = list(range(n + 1))
    ys = [P.ehrhart(x) for x in xs]
    assert _interpolate(xs, ys, n + 1) == P.ehrhart(n + 1)
    assert P.ehrhart(n + 1) == len(lattice_points_naive(P, n + 1))


def test_ehrhart_polynomial_degree_3(simplex_1223):
    xs = list(range(4))
    ys = [simplex_1223.ehrhart(x) for x in xs]
    assert _interpolate(xs, ys, 4) == simplex_1223.ehrhart(4)
