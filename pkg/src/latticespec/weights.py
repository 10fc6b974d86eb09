"""Weight systems of lattice simplices and the data attached to them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from . import exactmath as em
from .errors import InputError, InvariantViolation, ReducednessError, ShapeError
from .polytope import LatticePolytope
from .spectrum import FractionalPolynomial, spectrum_direct

__all__ = [
    "WeightSystem",
    "SectorData",
    "weight_of_simplex",
    "is_reduced",
    "is_reflexive_weights",
    "construct_simplex",
    "sector_data",
    "sector_arrays",
    "spectrum_from_weights",
    "enumerate_reflexive",
    "unit_fraction_partitions",
    "payne_weights",
]


@dataclass(frozen=True)
class WeightSystem:
    """Ascending tuple of positive integers ``(q_0, ..., q_n)``."""

    q: tuple[int, ...]

    def __post_init__(self):
        q = tuple(sorted(int(x) for x in self.q))
        if len(q) < 2:
            raise InputError("a weight system needs at least two entries")
        if q[0] < 1:
            raise InputError("weights must be positive")
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "WeightSystem":
        """From a comma-separated list such as ``"1,2,2,3"``."""
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError as exc:
            raise InputError(f"cannot parse weights {text!r}: {exc}") from None

    @property
    def mu(self) -> int:
        return sum(self.q)

    @property
    def n(self) -> int:
        return len(self.q) - 1

    @property
    def top_multiplicity(self) -> int:
        """Multiplicity of the largest weight."""
        return self.q.count(self.q[-1])

    def __str__(self):
        return "(" + ",".join(map(str, self.q)) + ")"


@dataclass(frozen=True)
class SectorData:
    """Sorted distinct ``f_i = l/q_j`` with their counts ``d_i`` and ages.

    ``ages`` and ``beta`` are the same numbers ``sum_{l<i} d_l - mu f_i``;
    both names are kept because they play different roles (sector ages vs.
    spectrum offsets).
    """

    f: tuple[Fraction, ...]
    d: tuple[int, ...]
    beta: tuple[Fraction, ...]
    ages: tuple[Fraction, ...]

    def rows(self):
        return list(zip(range(1, len(self.f) + 1), self.f, self.d, self.ages))


def weight_of_simplex(P: LatticePolytope) -> WeightSystem:
    if not P.is_simplex:
        raise ShapeError(f"expected {P.dim + 1} vertices, got {len(P.vertices)}")
    verts = P.vertices
    q = [abs(em.det(em.transpose([v for j, v in enumerate(verts) if j != i])))
         for i in range(len(verts))]
    return WeightSystem(tuple(q))


def is_reduced(w: WeightSystem) -> bool:
    g = 0
    for x in w.q:
        g = gcd(g, x)
    return g == 1


def _require_reduced(w: WeightSystem):
    if not is_reduced(w):
        raise ReducednessError(f"weight system {w} is not reduced")


def is_reflexive_weights(w: WeightSystem) -> bool:
    _require_reduced(w)
    return all(w.mu % x == 0 for x in w.q)


def construct_simplex(w: WeightSystem) -> LatticePolytope:
    """A reduced simplex of weight ``w``, unique up to unimodular equivalence.

    Vertices are the columns of a unimodular completion of ``q`` with the last
    row dropped, so ``sum q_i v_i = 0``.  The coordinates are then LLL-reduced
    to keep the simplex compact.
    """
    _require_reduced(w)
    u = em.unimodular_completion(w.q)
    n = w.n
    cols = [tuple(u[r][i] for r in range(n)) for i in range(n + 1)]
    t, _ = em.lll_reduce(em.transpose(cols))
    cols = [em.matvec(t, c) for c in cols]
    P = LatticePolytope.from_vertices(cols, n)
    if weight_of_simplex(P) != w:
        raise InvariantViolation(f"constructed simplex has weight {weight_of_simplex(P)}, not {w}")
    return P


def sector_arrays(w: WeightSystem):
    """Sector data as integer arrays over the common denominator ``L = lcm(q)``.

    Returns ``(L, x, d, beta)`` with ``f_i = x[i] / L`` and ``beta_i = beta[i] / L``.
    ``f`` runs over the multiples of ``L / q_j`` below ``L``, so a mask of
    length ``L`` replaces sorting ``mu`` fractions.
    """
    _require_reduced(w)
    big = lcm(*w.q)
    # object dtype only when int64 could overflow; such systems are huge anyway
    dtype = np.int64 if w.mu * big < 2**62 else object
    d = np.zeros(big, dtype=dtype)
    for qj in w.q:
        d[::big // qj] += 1
    x = np.flatnonzero(d)
    d = d[x]
    running = np.cumsum(d) - d
    beta = running * big - w.mu * x.astype(dtype)
    return big, x, d, beta


@lru_cache(maxsize=4096)
def sector_data(w: WeightSystem) -> SectorData:
    big, x, d, beta = sector_arrays(w)
    f = tuple(Fraction(int(v), big) for v in x)
    b = tuple(Fraction(int(v), big) for v in beta)
    return SectorData(f, tuple(int(v) for v in d), b, b)


def spectrum_from_weights(w: WeightSystem, verify: bool = True) -> FractionalPolynomial:
    """Spectrum as the union of the runs ``beta_i, beta_i + 1, ..., beta_i + d_i - 1``.

    With ``verify`` the result is compared with the lattice-point summation on
    :func:`construct_simplex` and a mismatch raises :class:`InvariantViolation`.
    """
    big, _, d, beta = sector_arrays(w)
    starts = np.repeat(np.cumsum(d) - d, d)
    offsets = np.arange(int(d.sum())) - starts
    exps, counts = np.unique(np.repeat(beta, d) + big * offsets, return_counts=True)
    spec = FractionalPolynomial({Fraction(int(e), big): int(c) for e, c in zip(exps, counts)})
    if verify:
        direct = spectrum_direct(construct_simplex(w))
        if direct != spec:
            raise InvariantViolation(f"weight formula gives {spec}, lattice summation {direct}")
    return spec


def unit_fraction_partitions(parts: int) -> list[tuple[int, ...]]:
    """All ascending ``(k_0 <= ... <= k_{m-1})`` with ``sum 1/k_i == 1``."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: Fraction, left: int):
        if left == 1:
            if remaining.numerator == 1 and remaining.denominator >= (prefix[-1] if prefix else 1):
                out.append(tuple(prefix + [remaining.denominator]))
            return
        # need 1/k < remaining (something must be left) and left/k >= remaining
        k = max(prefix[-1] if prefix else 1, remaining.denominator // remaining.numerator + 1)
        while Fraction(left, k) >= remaining:
            rec(prefix + [k], remaining - Fraction(1, k), left - 1)
            k += 1

    rec([], Fraction(1), parts)
    return out


def enumerate_reflexive(n: int) -> list[WeightSystem]:
    """All reduced reflexive weight systems of length ``n + 1``, sorted."""
    if n < 1:
        raise InputError("dimension must be positive")
    out = []
    for ks in unit_fraction_partitions(n + 1):
        m = lcm(*ks)
        raw = [m // k for k in ks]
        g = 0
        for x in raw:
            g = gcd(g, x)
        w = WeightSystem(tuple(x // g for x in raw))
        if not (is_reduced(w) and is_reflexive_weights(w)):
            raise InvariantViolation(f"{w} from {ks} is not reduced and reflexive")
        out.append(w)
    out.sort(key=lambda w: w.q)
    if len({w.q for w in out}) != len(out):
        raise InvariantViolation("duplicate weight systems in enumeration")
    return out


def payne_weights(s: int, k: int) -> tuple[WeightSystem, FractionalPolynomial]:
    """Weight ``(1, ..., 1, s)`` with ``s*k`` ones and its closed-form spectrum.

    The spectrum is ``1 + z + ... + z^{sk}`` plus ``z^{jk}`` for ``j = 1..s-1``.
    """
    if s < 2 or k < 2:
        raise InputError("need s >= 2 and k >= 2")
    w = WeightSystem((1,) * (s * k) + (s,))
    exps = list(range(s * k + 1)) + [j * k for j in range(1, s)]
    return w, FractionalPolynomial.from_exponents(exps)
