"""Face fan of a polytope: maximal cones, box elements, ages.

A box element of a cone with generators ``b_1..b_n`` is a lattice point
``sum q_i b_i`` with every ``0 <= q_i < 1``.  Its Newton value is ``sum q_i``
and the dimension of its minimal cone is the number of nonzero ``q_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exactmath as em
from .errors import InvariantViolation
from .polytope import LatticePolytope

__all__ = [
    "MaximalCone",
    "BoxElement",
    "AgePair",
    "maximal_cones",
    "newton_nu",
    "barycentric_nu",
    "box_elements",
    "box_elements_bruteforce",
    "box_union",
    "box_inverse",
    "age",
    "age_pair",
]


@dataclass(frozen=True)
class MaximalCone:
    facet_index: int
    generator_indices: tuple[int, ...]
    generator_matrix: em.IntMatrix  # columns are the generators

    @property
    def index(self) -> int:
        return abs(em.det(self.generator_matrix))

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        return em.transpose(self.generator_matrix)

    def coordinates(self, v: Sequence[int]) -> tuple[Fraction, ...]:
        return em.solve_rational(self.generator_matrix, v)

    def point(self, coords: Sequence[Fraction]) -> tuple[int, ...]:
        p = [sum(c * g for c, g in zip(coords, row)) for row in self.generator_matrix]
        if any(Fraction(x).denominator != 1 for x in p):
            raise InvariantViolation(f"coordinates {coords} do not give a lattice point")
        return tuple(int(x) for x in p)


@dataclass(frozen=True)
class BoxElement:
    """``point = sum coords[i] * generator[i]`` with ``0 <= coords[i] < 1``."""

    point: tuple[int, ...]
    cone: MaximalCone
    coords: tuple[Fraction, ...]
    nu: Fraction = field(init=False)
    support_dim: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "nu", sum(self.coords, Fraction(0)))
        object.__setattr__(self, "support_dim", sum(1 for q in self.coords if q))


@dataclass(frozen=True)
class AgePair:
    element: BoxElement
    inverse: BoxElement

    @property
    def age(self) -> Fraction:
        return self.element.nu

    @property
    def inverse_age(self) -> Fraction:
        return self.inverse.nu


def maximal_cones(P: LatticePolytope) -> list[MaximalCone]:
    cones = []
    for idx, f in enumerate(P.facets):
        gens = [P.vertices[i] for i in f.vertex_indices]
        cones.append(MaximalCone(idx, f.vertex_indices, em.transpose(gens)))
    return cones


def newton_nu(P: LatticePolytope, v: Sequence[int]) -> Fraction:
    """Newton function as a maximum over facet functionals."""
    return P.newton_nu(v)


def barycentric_nu(P: LatticePolytope, v: Sequence[int]) -> Fraction:
    """Newton function as ``sum q_i`` in a maximal cone containing ``v``."""
    for cone in maximal_cones(P):
        q = cone.coordinates(v)
        if all(x >= 0 for x in q):
            return sum(q, Fraction(0))
    raise InvariantViolation(f"no maximal cone contains {tuple(v)}")


def box_elements(cone: MaximalCone) -> list[BoxElement]:
    """Box of a simplicial cone via Smith normal form coset representatives.

    With ``U B V = D`` the classes of ``Z^n / B Z^n`` are ``U^-1 a`` for
    ``0 <= a_i < d_i``; each is moved into the half-open parallelepiped by
    taking fractional parts of its cone coordinates.
    """
    b = cone.generator_matrix
    n = len(b)
    u, d, _ = em.snf(b)
    uinv = em.inverse_unimodular(u)
    det = em.det(b)
    den = abs(det)
    # B^-1 = adj / den with an integer matrix adj
    sign = 1 if det > 0 else -1
    adj = [[sign * x for x in row] for row in em.adjugate(b)]
    out = []
    for a in itertools.product(*(range(d[i][i]) for i in range(n))):
        r = em.matvec(uinv, a)
        num = [sum(x * y for x, y in zip(row, r)) % den for row in adj]
        point = tuple(sum(g * x for g, x in zip(row, num)) // den for row in b)
        q = tuple(Fraction(x, den) for x in num)
        out.append(BoxElement(point, cone, q))
    out.sort(key=lambda e: (e.nu, e.point))
    if len(out) != cone.index or len({e.point for e in out}) != len(out):
        raise InvariantViolation(f"box of cone {cone.facet_index} has wrong size")
    return out


def box_elements_bruteforce(cone: MaximalCone) -> list[BoxElement]:
    """Scan the bounding box of the half-open parallelepiped; test oracle."""
    gens = cone.generators
    n = len(gens)
    corners = [[sum(g[i] for g, s in zip(gens, sel) if s) for i in range(n)]
               for sel in itertools.product((0, 1), repeat=n)]
    lo = [min(c[i] for c in corners) for i in range(n)]
    hi = [max(c[i] for c in corners) for i in range(n)]
    out = []
    for v in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        q = cone.coordinates(v)
        if all(0 <= x < 1 for x in q):
            out.append(BoxElement(tuple(v), cone, q))
    out.sort(key=lambda e: (e.nu, e.point))
    return out


def box_union(P: LatticePolytope) -> list[BoxElement]:
    """Box elements of all maximal cones, one per lattice point.

    A point on a shared face keeps the lowest-indexed cone; its Newton value
    and minimal-cone dimension must not depend on that choice.
    """
    seen: dict[tuple[int, ...], BoxElement] = {}
    for cone in maximal_cones(P):
        for e in box_elements(cone):
            prev = seen.get(e.point)
            if prev is None:
                seen[e.point] = e
            elif (prev.nu, prev.support_dim) != (e.nu, e.support_dim):
                raise InvariantViolation(f"box element {e.point} is inconsistent across cones")
    return sorted(seen.values(), key=lambda e: (e.nu, e.point))


def box_inverse(e: BoxElement) -> BoxElement:
    """Involution ``q_i -> 1 - q_i`` on the nonzero coordinates."""
    q = tuple(x if x == 0 else 1 - x for x in e.coords)
    inv = BoxElement(e.cone.point(q), e.cone, q)
    if e.nu + inv.nu != e.support_dim:
        raise InvariantViolation(f"ages of {e.point} and its inverse do not sum to {e.support_dim}")
    return inv


def age(e: BoxElement) -> Fraction:
    return e.nu


def age_pair(e: BoxElement) -> AgePair:
    return AgePair(e, box_inverse(e))
