"""Hard Lefschetz and KKP decision procedures.

Both criteria test the same condition on every twisted sector: with age
``a`` and minimal-cone dimension ``s``, either ``a`` is an integer and
``a == s/2``, or it is not and ``floor(a) == (s - 1)/2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

import numpy as np

from .errors import DomainError
from .fanbox import box_union
from .polytope import LatticePolytope
from .weights import WeightSystem, _require_reduced, is_reflexive_weights, sector_arrays

__all__ = [
    "Witness",
    "HLVerdict",
    "age_condition",
    "hl_box_criterion",
    "hl_weight_criterion",
    "hl_necessary_condition",
    "kkp_check",
]


@dataclass(frozen=True)
class Witness:
    """A sector where the age condition fails.

    ``where`` is the lattice point (box criterion) or the 1-based sector
    index ``i`` (weight criterion).  ``lhs`` is ``age`` or ``floor(age)``,
    ``rhs`` the value it should equal.
    """

    where: tuple[int, ...] | int
    age: Fraction
    support_dim: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class HLVerdict:
    holds: bool
    method: str
    witnesses: tuple[Witness, ...] = field(default=())

    def __bool__(self):
        return self.holds


def age_condition(a: Fraction, support_dim: int) -> tuple[bool, Fraction, Fraction]:
    """Check one sector; returns ``(ok, lhs, rhs)``."""
    if a.denominator == 1:
        lhs, rhs = Fraction(a), Fraction(support_dim, 2)
    else:
        # rhs is a half-integer when support_dim is even, so the test fails
        lhs, rhs = Fraction(floor(a)), Fraction(support_dim - 1, 2)
    return lhs == rhs, lhs, rhs


def hl_box_criterion(P: LatticePolytope) -> HLVerdict:
    witnesses = []
    for e in box_union(P):
        ok, lhs, rhs = age_condition(e.nu, e.support_dim)
        if not ok:
            witnesses.append(Witness(e.point, e.nu, e.support_dim, lhs, rhs))
    return HLVerdict(not witnesses, "box-criterion", tuple(witnesses))


def hl_weight_criterion(w: WeightSystem, max_witnesses: int | None = None) -> HLVerdict:
    """Sector-by-sector test for the reduced simplex of weight ``w``.

    Sector ``i`` has age ``sum_{l<i} d_l - mu f_i`` and minimal-cone
    dimension ``d_1 - d_i``.  The test runs on integer arrays, so systems
    with millions of sectors stay cheap; ``max_witnesses`` caps the list.
    """
    _require_reduced(w)
    if w.q[-1] == 1:
        return HLVerdict(True, "weight-criterion")
    big, _, d, beta = sector_arrays(w)
    dim = d[0] - d
    integral = beta % big == 0
    ok = np.where(integral, 2 * beta == dim * big, 2 * (beta // big) == dim - 1)
    bad = np.flatnonzero(~ok[1:]) + 1
    witnesses = []
    for i in bad[:max_witnesses]:
        a = Fraction(int(beta[i]), big)
        _, lhs, rhs = age_condition(a, int(dim[i]))
        witnesses.append(Witness(int(i) + 1, a, int(dim[i]), lhs, rhs))
    return HLVerdict(not len(bad), "weight-criterion", tuple(witnesses))


def hl_necessary_condition(w: WeightSystem) -> bool:
    """``2 mu / q_n == n + 1 + m(q_n)`` for reflexive ``w`` with ``q_n >= 2``."""
    if w.q[-1] == 1:
        raise DomainError("necessary condition only applies when the largest weight is >= 2")
    if not is_reflexive_weights(w):
        raise DomainError(f"{w} is not reflexive")
    return Fraction(2 * w.mu, w.q[-1]) == w.n + 1 + w.top_multiplicity


def kkp_check(w: WeightSystem) -> bool:
    if not is_reflexive_weights(w):
        raise DomainError(f"KKP is only stated for reflexive weights; {w} is not")
    if w.q[-1] == 1:
        return True
    big, _, d, beta = sector_arrays(w)
    return bool(np.all(2 * beta[1:] == (d[0] - d[1:]) * big))
