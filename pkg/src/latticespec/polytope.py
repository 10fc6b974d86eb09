"""Simplicial lattice polytopes containing the origin in their interior.

Facets are stored as rational normals ``u`` normalised so that ``<u, b> = 1``
on the facet.  Then the Newton function is ``max_F <u_F, v>`` and ``v`` lies
in the dilation ``l P`` iff that maximum is at most ``l``.

Lattice points are enumerated coordinate by coordinate in an LLL-reduced
basis.  At depth ``k`` the admissible range of the next coordinate comes from
the facets of the projection of ``l P`` onto the first ``k + 1`` coordinates,
so no candidate is generated outside that projection.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from . import exactmath as em
from .errors import (
    DimensionError,
    InputError,
    OriginNotInteriorError,
    SimplicialityError,
)

__all__ = [
    "Facet",
    "LatticePolytope",
    "from_vertices",
    "lattice_points_naive",
]


@dataclass(frozen=True)
class Facet:
    vertex_indices: tuple[int, ...]
    normal: tuple[Fraction, ...]

    def value(self, v: Sequence[int]) -> Fraction:
        return sum((u * x for u, x in zip(self.normal, v)), Fraction(0))


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    return tuple(x // g for x in vec) if g > 1 else tuple(vec)


def _supporting_hyperplanes(points: Sequence[Sequence[int]]):
    """Facet hyperplanes ``a.x <= b`` of ``conv(points)``, assumed full-dimensional.

    Yields ``(a, b, on)`` with ``a`` primitive and ``on`` the indices of the
    points lying on the hyperplane.  Brute force over ``k``-subsets.
    """
    k = len(points[0])
    seen = set()
    for subset in itertools.combinations(range(len(points)), k):
        p0 = points[subset[0]]
        diffs = [[x - y for x, y in zip(points[i], p0)] for i in subset[1:]]
        a = em.cofactor_normal(diffs) if k > 1 else (1,)
        if not any(a):
            continue
        a = _primitive(a)
        b = sum(x * y for x, y in zip(a, p0))
        vals = [sum(x * y for x, y in zip(a, p)) for p in points]
        if all(x <= b for x in vals):
            pass
        elif all(x >= b for x in vals):
            a, b, vals = tuple(-x for x in a), -b, [-x for x in vals]
        else:
            continue
        if (a, b) in seen:
            continue
        seen.add((a, b))
        yield a, b, tuple(i for i, x in enumerate(vals) if x == b)


def _projection_inequalities(points: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray]:
    """Integer rows ``(A, c)`` with ``conv(points) = {x : A x <= c}`` (0 interior)."""
    if len(points[0]) == 1:
        xs = [p[0] for p in points]
        return np.array([[1], [-1]], dtype=object), np.array([max(xs), -min(xs)], dtype=object)
    rows, rhs = [], []
    for a, b, _ in _supporting_hyperplanes(points):
        rows.append(a)
        rhs.append(b)
    return np.array(rows, dtype=object), np.array(rhs, dtype=object)


def _ceil_div(a, b):
    return -((-a) // b)


@dataclass(frozen=True, eq=False)
class LatticePolytope:
    """Full-dimensional simplicial lattice polytope with the origin in its interior.

    Build with :meth:`from_vertices`; the constructor does no validation.
    """

    dim: int
    vertices: tuple[tuple[int, ...], ...]
    facets: tuple[Facet, ...] = field(repr=False)

    @classmethod
    def from_vertices(cls, vertices: Iterable[Sequence[int]], dim: int | None = None) -> "LatticePolytope":
        verts = tuple(tuple(int(x) for x in v) for v in vertices)
        if not verts:
            raise DimensionError("no vertices given")
        n = len(verts[0]) if dim is None else int(dim)
        if n < 1 or any(len(v) != n for v in verts):
            raise DimensionError(f"every vertex must have {n} coordinates")
        if len(set(verts)) != len(verts):
            raise InputError("vertices are not pairwise distinct")
        if len(verts) < n + 1:
            raise DimensionError(f"{len(verts)} points cannot span a {n}-dimensional polytope")
        if em.rank([[x - y for x, y in zip(v, verts[0])] for v in verts[1:]]) < n:
            raise DimensionError("polytope is not full-dimensional")

        hyperplanes = list(_supporting_hyperplanes(verts))
        if any(b <= 0 for _, b, _ in hyperplanes):
            raise OriginNotInteriorError("origin is not an interior point")
        facets = []
        for a, b, on in hyperplanes:
            if len(on) != n:
                raise SimplicialityError(f"facet through vertices {on} is not a simplex")
            facets.append(Facet(on, tuple(Fraction(x, b) for x in a)))
        on_some = {i for f in facets for i in f.vertex_indices}
        if len(on_some) != len(verts):
            missing = sorted(set(range(len(verts))) - on_some)
            raise InputError(f"points {missing} are not vertices of the convex hull")
        facets.sort(key=lambda f: f.vertex_indices)
        return cls(n, verts, tuple(facets))

    # ------------------------------------------------------------------ basics

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    def is_reflexive(self) -> bool:
        return all(u.denominator == 1 for f in self.facets for u in f.normal)

    def normalized_volume(self) -> int:
        """``n! vol(P)``, summed over the cones on the facets."""
        return sum(abs(em.det([self.vertices[i] for i in f.vertex_indices])) for f in self.facets)

    def newton_nu(self, v: Sequence[int]) -> Fraction:
        return max(f.value(v) for f in self.facets)

    # ------------------------------------------------------------ enumeration

    @cached_property
    def _nu_scale(self) -> int:
        return lcm(*(u.denominator for f in self.facets for u in f.normal))

    @cached_property
    def _reduced_frame(self):
        """LLL basis change ``T`` and derived integer data in the new coordinates."""
        vt = em.transpose(self.vertices)  # n x m, rows = coordinate functionals
        t, _ = em.lll_reduce(vt)
        tinv = em.inverse_unimodular(t)
        verts = [em.matvec(t, v) for v in self.vertices]
        # facet rows in new coordinates, scaled to the common denominator
        scale = self._nu_scale
        nu_rows = []
        for f in self.facets:
            row = [sum(f.normal[i] * tinv[i][j] for i in range(self.dim)) * scale
                   for j in range(self.dim)]
            nu_rows.append([int(x) for x in row])
        projections = [_projection_inequalities([v[: k + 1] for v in verts])
                       for k in range(self.dim - 1)]
        return t, tinv, verts, np.array(nu_rows, dtype=object), projections

    def _scan(self, ell: int) -> tuple[np.ndarray, np.ndarray]:
        """Points of ``ell P`` in reduced coordinates and their scaled Newton values."""
        n = self.dim
        _, _, verts, nu_rows, projections = self._reduced_frame
        scale = self._nu_scale
        pts = np.zeros((1, 0), dtype=object)
        for k in range(n):
            if k < n - 1:
                a, c = projections[k]
                c = c * ell
            else:
                a, c = nu_rows, np.full(len(nu_rows), scale * ell, dtype=object)
            rest = c[None, :] - pts.dot(a[:, :k].T) if k else np.tile(c, (len(pts), 1))
            coef = a[:, k]
            lo = np.full(len(pts), min(v[k] for v in verts) * ell, dtype=object)
            hi = np.full(len(pts), max(v[k] for v in verts) * ell, dtype=object)
            ok = np.ones(len(pts), dtype=bool)
            for j, cj in enumerate(coef):
                if cj > 0:
                    hi = np.minimum(hi, rest[:, j] // cj)
                elif cj < 0:
                    lo = np.maximum(lo, _ceil_div(rest[:, j], cj))
                else:
                    ok &= rest[:, j] >= 0
            counts = np.where(ok, hi - lo + 1, 0)
            counts = np.maximum(counts, 0).astype(np.int64)
            total = int(counts.sum())
            base = np.repeat(pts, counts, axis=0)
            starts = np.repeat(lo, counts)
            offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
            new = (starts + offsets).astype(object).reshape(-1, 1)
            pts = np.hstack([base, new]) if k else new
        nu = pts.dot(nu_rows.T).max(axis=1) if len(pts) else np.zeros(0, dtype=object)
        return pts, nu

    def lattice_points(self, ell: int = 1) -> list[tuple[int, ...]]:
        """Lattice points of ``ell P`` in lexicographic order."""
        if ell < 1:
            raise InputError("dilation factor must be positive")
        pts, _ = self._scan(ell)
        tinv = self._reduced_frame[1]
        out = [em.matvec(tinv, p) for p in pts.tolist()]
        return sorted(out)

    def nu_distribution(self, max_nu: int) -> Counter:
        """Multiplicity of each Newton value ``<= max_nu`` over the lattice."""
        _, nu = self._scan(max_nu)
        scale = self._nu_scale
        return Counter({Fraction(int(k), scale): int(c)
                        for k, c in zip(*np.unique(nu.astype(np.int64) if _fits(nu) else nu,
                                                   return_counts=True))})

    @cached_property
    def _ehrhart_counts(self) -> tuple[int, ...]:
        dist = self.nu_distribution(self.dim)
        return tuple([1] + [sum(c for v, c in dist.items() if v <= ell)
                            for ell in range(1, self.dim + 1)])

    def ehrhart(self, ell: int) -> int:
        """``L_P(ell)``, the number of lattice points in ``ell P``."""
        if ell == 0:
            return 1
        if ell <= self.dim:
            return self._ehrhart_counts[ell]
        return len(self._scan(ell)[0])

    def delta_vector(self) -> tuple[int, ...]:
        """Numerator coefficients of the Ehrhart series."""
        n = self.dim
        counts = self._ehrhart_counts
        return tuple(sum((-1) ** i * comb(n + 1, i) * counts[j - i] for i in range(j + 1))
                     for j in range(n + 1))

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.dim == other.dim and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash((self.dim, frozenset(self.vertices)))


def _fits(arr) -> bool:
    return len(arr) == 0 or max(abs(int(arr.max())), abs(int(arr.min()))) < 2**62


def from_vertices(dim: int, vertices: Iterable[Sequence[int]]) -> LatticePolytope:
    return LatticePolytope.from_vertices(vertices, dim)


def lattice_points_naive(P: LatticePolytope, ell: int = 1) -> list[tuple[int, ...]]:
    """Bounding-box scan in the original coordinates; reference implementation."""
    lo = [ell * min(v[i] for v in P.vertices) for i in range(P.dim)]
    hi = [ell * max(v[i] for v in P.vertices) for i in range(P.dim)]
    out = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(f.value(x) <= ell for f in P.facets):
            out.append(x)
    return out
