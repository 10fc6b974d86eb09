"""Polynomials with rational exponents and the Newton spectrum.

The spectrum of ``P`` is ``(1 - z)^n * sum_v z^nu(v)`` over all lattice
points.  Multiplying by ``(1 - z)^n`` only raises exponents, so the terms of
exponent at most ``n`` come from the points with ``nu(v) <= n``; the spectrum
is exactly those terms.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import comb, floor
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InputError, InvariantViolation
from .polytope import LatticePolytope

__all__ = [
    "FractionalPolynomial",
    "fp_mul",
    "reciprocal_transform",
    "spectrum_direct",
    "is_polynomial",
    "is_unimodal",
    "lower_half_nondecreasing",
    "hibi_inequalities",
    "alpha_slices",
]


class FractionalPolynomial:
    """Finite sum of ``c * z**a`` with rational ``a`` and integer ``c``.

    Immutable; zero coefficients are dropped and terms iterate in ascending
    exponent order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        acc: dict[Fraction, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[Fraction(e)] += int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def from_exponents(cls, exponents: Iterable) -> "FractionalPolynomial":
        """One term ``z**e`` per listed exponent (repeats add up)."""
        return cls((e, 1) for e in exponents)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "FractionalPolynomial":
        return cls(enumerate(coeffs))

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]]) -> "FractionalPolynomial":
        return cls((Fraction(p, q), c) for p, q, c in triples)

    def terms(self) -> tuple[tuple[Fraction, int], ...]:
        return self._terms

    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(e for e, _ in self._terms)

    def coefficient(self, e) -> int:
        e = Fraction(e)
        return next((c for x, c in self._terms if x == e), 0)

    def value_at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def coefficients(self) -> list[int]:
        """Dense coefficient list; only defined when all exponents are natural numbers."""
        if not is_polynomial(self):
            raise DomainError("polynomial has non-integral or negative exponents")
        if not self._terms:
            return []
        out = [0] * (int(self._terms[-1][0]) + 1)
        for e, c in self._terms:
            out[int(e)] = c
        return out

    def to_triples(self) -> list[tuple[int, int, int]]:
        return [(e.numerator, e.denominator, c) for e, c in self._terms]

    def truncate(self, max_exponent) -> "FractionalPolynomial":
        return FractionalPolynomial((e, c) for e, c in self._terms if e <= max_exponent)

    def __mul__(self, other):
        if not isinstance(other, FractionalPolynomial):
            return NotImplemented
        acc: dict[Fraction, int] = defaultdict(int)
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] += c1 * c2
        return FractionalPolynomial(acc)

    def __add__(self, other):
        if not isinstance(other, FractionalPolynomial):
            return NotImplemented
        return FractionalPolynomial(self._terms + other._terms)

    def __sub__(self, other):
        if not isinstance(other, FractionalPolynomial):
            return NotImplemented
        return FractionalPolynomial(self._terms + tuple((e, -c) for e, c in other._terms))

    def __eq__(self, other):
        if not isinstance(other, FractionalPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "z"
            else:
                mono = f"z^{e}" if e.denominator == 1 else f"z^({e})"
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            else:
                body = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"FractionalPolynomial({str(self)!r})"


def fp_mul(a: FractionalPolynomial, b: FractionalPolynomial) -> FractionalPolynomial:
    return a * b


def reciprocal_transform(f: FractionalPolynomial, n: int) -> FractionalPolynomial:
    """``z^n f(1/z)``: exponent ``a`` goes to ``n - a``."""
    if any(e < 0 or e > n for e in f.exponents()):
        raise InputError(f"exponents must lie in [0, {n}]")
    return FractionalPolynomial((n - e, c) for e, c in f.terms())


def _one_minus_z_power(n: int) -> FractionalPolynomial:
    return FractionalPolynomial((i, (-1) ** i * comb(n, i)) for i in range(n + 1))


def spectrum_direct(P: LatticePolytope) -> FractionalPolynomial:
    """Newton spectrum by truncated summation over ``nP``.

    The result is checked for nonnegativity, symmetry and total mass
    ``normalized_volume(P)``; a failure raises :class:`InvariantViolation`.
    """
    n = P.dim
    series = FractionalPolynomial(P.nu_distribution(n))
    spec = (series * _one_minus_z_power(n)).truncate(n)
    if any(c < 0 for _, c in spec.terms()):
        raise InvariantViolation(f"negative spectral multiplicity in {spec}")
    if reciprocal_transform(spec, n) != spec:
        raise InvariantViolation(f"spectrum {spec} is not symmetric about {Fraction(n, 2)}")
    if spec.value_at_one() != P.normalized_volume():
        raise InvariantViolation("spectrum total differs from the normalized volume")
    return spec


def is_polynomial(f: FractionalPolynomial) -> bool:
    return all(e.denominator == 1 and e >= 0 for e in f.exponents())


def is_unimodal(coeffs: Sequence[int]) -> bool:
    """True iff the sequence weakly rises and then weakly falls."""
    i, m = 0, len(coeffs)
    while i + 1 < m and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < m and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i + 1 >= m


def lower_half_nondecreasing(f: FractionalPolynomial, n: int) -> bool:
    """Multiplicities nondecrease over the exponents up to ``n/2``.

    A diagnostic, not an invariant: it fails for spectra that satisfy hard
    Lefschetz, e.g. weight ``(1, 2, 2, 3)``.
    """
    if reciprocal_transform(f, n) != f:
        raise InputError("spectrum is not symmetric about n/2")
    half = [c for e, c in f.terms() if e <= Fraction(n, 2)]
    return all(a <= b for a, b in zip(half, half[1:]))


def hibi_inequalities(f: FractionalPolynomial, n: int) -> bool:
    """``1 <= d(1) <= d(i)`` for ``2 <= i <= n // 2``."""
    if not is_polynomial(f):
        raise DomainError("Hibi inequalities need integral exponents")
    d = [f.coefficient(i) for i in range(n + 1)]
    if d[0] != 1:
        raise DomainError("constant coefficient must be 1")
    if n < 1 or d[1] < 1:
        return False
    return all(d[1] <= d[i] for i in range(2, n // 2 + 1))


def alpha_slices(f: FractionalPolynomial) -> dict[Fraction, list[int]]:
    """Split ``f = sum_a z^a f_a(z)`` by the fractional part ``a`` of the exponents.

    Returns ``{a: dense coefficients of f_a}`` for each ``a`` in ``[0, 1)`` that occurs.
    """
    if any(e < 0 for e in f.exponents()):
        raise InputError("exponents must be nonnegative")
    grouped: dict[Fraction, dict[int, int]] = defaultdict(dict)
    for e, c in f.terms():
        k = floor(e)
        grouped[e - k][k] = c
    out = {}
    for a in sorted(grouped):
        g = grouped[a]
        out[a] = [g.get(i, 0) for i in range(max(g) + 1)]
    return out
