"""Full analyses of a polytope or weight system, packaged as plain data."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .errors import DomainError, InputError, InvariantViolation
from .lefschetz import HLVerdict, hl_box_criterion, hl_necessary_condition, hl_weight_criterion, kkp_check
from .polytope import LatticePolytope
from .spectrum import (
    FractionalPolynomial,
    alpha_slices,
    hibi_inequalities,
    is_polynomial,
    is_unimodal,
    lower_half_nondecreasing,
    reciprocal_transform,
    spectrum_direct,
)
from .weights import (
    WeightSystem,
    construct_simplex,
    enumerate_reflexive,
    is_reduced,
    is_reflexive_weights,
    payne_weights,
    sector_data,
    spectrum_from_weights,
    weight_of_simplex,
)

log = logging.getLogger(__name__)

METHODS = ("box", "direct", "auto")
TABLE_COLUMNS = ("weights", "mu", "reflexive", "hl", "kkp", "unimodal", "eq5", "necessary_condition")


def _rat(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _verdict_dict(v: HLVerdict) -> dict:
    return {
        "holds": v.holds,
        "method": v.method,
        "witnesses": [
            {
                "where": list(w.where) if isinstance(w.where, tuple) else w.where,
                "age": _rat(w.age),
                "support_dim": w.support_dim,
                "lhs": _rat(w.lhs),
                "rhs": _rat(w.rhs),
            }
            for w in v.witnesses
        ],
    }


@dataclass
class AnalysisReport:
    input: dict
    dim: int
    mu: int
    reflexive: bool
    spectrum: list
    symmetric: bool
    unimodal: bool | None
    eq5: bool
    slices: list
    hl: dict
    weights: list | None = None
    delta: list | None = None
    hibi: bool | None = None
    kkp: bool | None = None
    necessary_condition: bool | None = None
    sectors: list | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def render(self) -> str:
        def fmt(x):
            if x is None:
                return "n/a"
            if isinstance(x, bool):
                return "true" if x else "false"
            return str(x)

        spec = FractionalPolynomial.from_triples(self.spectrum)
        lines = [f"input: {self.input}"]
        if self.weights is not None:
            lines.append(f"weights: ({','.join(map(str, self.weights))})")
        lines += [
            f"dim: {self.dim}",
            f"mu: {self.mu}",
            f"reflexive: {fmt(self.reflexive)}",
            f"delta: {fmt(self.delta)}",
            f"spectrum: {spec}",
            f"symmetric: {fmt(self.symmetric)}",
            f"unimodal: {fmt(self.unimodal)}",
            f"eq5 (lower half nondecreasing): {fmt(self.eq5)}",
            f"hibi: {fmt(self.hibi)}",
        ]
        for s in self.slices:
            a = Fraction(*s["alpha"])
            lines.append(f"  slice {a}: {s['coefficients']} unimodal={fmt(s['unimodal'])}")
        if self.sectors:
            lines.append("  i  f      d  age")
            for row in self.sectors:
                lines.append(f"  {row['i']:<2} {str(Fraction(*row['f'])):<6} {row['d']:<2} "
                             f"{Fraction(*row['age'])}")
        lines.append(f"hl: {fmt(self.hl['holds'])} ({self.hl['method']})")
        for w in self.hl["witnesses"]:
            lines.append(f"  fails at {w['where']}: age {Fraction(*w['age'])}, "
                         f"{Fraction(*w['lhs'])} != {Fraction(*w['rhs'])}")
        lines.append(f"kkp: {fmt(self.kkp)}")
        lines.append(f"necessary_condition: {fmt(self.necessary_condition)}")
        for k in sorted(self.extra):
            lines.append(f"{k}: {fmt(self.extra[k])}")
        return "\n".join(lines) + "\n"


def _spectrum(P: LatticePolytope, w: WeightSystem | None, method: str) -> FractionalPolynomial:
    if method == "direct" or w is None:
        return spectrum_direct(P)
    if method == "box":
        return spectrum_from_weights(w, verify=False)
    a, b = spectrum_direct(P), spectrum_from_weights(w, verify=False)
    if a != b:
        raise InvariantViolation(f"lattice summation gives {a}, weight formula {b}")
    return a


def _hl(P: LatticePolytope, w: WeightSystem | None, method: str) -> HLVerdict:
    if method == "direct" or w is None:
        return hl_box_criterion(P)
    if method == "box":
        return hl_weight_criterion(w)
    a, b = hl_box_criterion(P), hl_weight_criterion(w)
    if a.holds != b.holds:
        raise InvariantViolation(f"box criterion says {a.holds}, weight criterion {b.holds}")
    return b


def analyze_polytope(P: LatticePolytope, method: str = "auto", *, want_delta: bool = False,
                     echo: dict | None = None) -> AnalysisReport:
    """Run every check on ``P``.

    ``method`` picks the route for reduced simplices: ``direct`` uses
    lattice-point summation and the box criterion, ``box`` the sector formulas
    of the weight system, ``auto`` both with an agreement check.  Other
    polytopes always use the direct route.
    """
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}")
    n = P.dim
    w = weight_of_simplex(P) if P.is_simplex else None
    reduced_w = w if w is not None and is_reduced(w) else None

    spec = _spectrum(P, reduced_w, method)
    reflexive = P.is_reflexive()
    integral = is_polynomial(spec)
    if integral != reflexive:
        raise InvariantViolation("integral spectrum does not match reflexivity")
    delta = list(P.delta_vector()) if (reflexive or want_delta) else None
    if reflexive and delta != spec.coefficients():
        raise InvariantViolation(f"delta vector {delta} differs from spectrum {spec}")

    slices = alpha_slices(spec)
    verdict = _hl(P, reduced_w, method)
    slice_rows = [{"alpha": _rat(a), "coefficients": c, "unimodal": is_unimodal(c)}
                  for a, c in slices.items()]
    if verdict.holds and not all(r["unimodal"] for r in slice_rows):
        raise InvariantViolation("hard Lefschetz holds but a slice is not unimodal")

    kkp = necessary = None
    if reflexive:
        if reduced_w is not None:
            kkp = kkp_check(reduced_w)
            if kkp != verdict.holds:
                raise InvariantViolation("KKP check disagrees with hard Lefschetz")
            if reduced_w.q[-1] >= 2:
                necessary = hl_necessary_condition(reduced_w)
        else:
            kkp = verdict.holds

    sectors = None
    if reduced_w is not None:
        s = sector_data(reduced_w)
        sectors = [{"i": i, "f": _rat(f), "d": d, "age": _rat(a), "beta": _rat(b)}
                   for i, (f, d, a, b) in enumerate(zip(s.f, s.d, s.ages, s.beta), start=1)]

    return AnalysisReport(
        input=echo if echo is not None else {"dim": n, "vertices": [list(v) for v in P.vertices]},
        dim=n,
        mu=P.normalized_volume(),
        reflexive=reflexive,
        spectrum=[list(t) for t in spec.to_triples()],
        symmetric=reciprocal_transform(spec, n) == spec,
        unimodal=is_unimodal(spec.coefficients()) if integral else None,
        eq5=lower_half_nondecreasing(spec, n),
        slices=slice_rows,
        hl=_verdict_dict(verdict),
        weights=list(w.q) if w is not None else None,
        delta=delta,
        hibi=hibi_inequalities(spec, n) if integral else None,
        kkp=kkp,
        necessary_condition=necessary,
        sectors=sectors,
    )


def analyze_weights(w: WeightSystem, method: str = "auto", *, want_delta: bool = False) -> AnalysisReport:
    if not is_reduced(w):
        raise InputError(f"weight system {w} is not reduced")
    P = construct_simplex(w)
    echo = {"weights": list(w.q), "vertices": [list(v) for v in P.vertices]}
    return analyze_polytope(P, method, want_delta=want_delta, echo=echo)


def analyze_payne(s: int, k: int, method: str = "auto") -> AnalysisReport:
    w, closed = payne_weights(s, k)
    rep = analyze_weights(w, method)
    computed = FractionalPolynomial.from_triples(rep.spectrum)
    rep.input = {"payne": {"s": s, "k": k}, "weights": list(w.q)}
    rep.extra = {
        "closed_form": str(closed),
        "closed_form_matches": computed == closed,
        "mu_is_s(k+1)": rep.mu == s * (k + 1),
        "unimodal_iff_s_eq_2": rep.unimodal == (s == 2),
        "hl_iff_s_eq_2": rep.hl["holds"] == (s == 2),
    }
    if not rep.extra["closed_form_matches"]:
        raise InvariantViolation(f"computed spectrum {computed} differs from closed form {closed}")
    return rep


def classify(w: WeightSystem, method: str = "auto") -> dict:
    """One classification-table row for a reduced reflexive weight system."""
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}")
    spec = spectrum_from_weights(w, verify=False)
    verdict = hl_weight_criterion(w, max_witnesses=1)
    if method != "box":
        P = construct_simplex(w)
        direct = spectrum_direct(P)
        box = hl_box_criterion(P)
        if method == "auto" and (direct != spec or box.holds != verdict.holds):
            raise InvariantViolation(f"routes disagree on {w}")
        spec, verdict = direct, box
    reflexive = is_reflexive_weights(w)
    return {
        "weights": w.q,
        "mu": w.mu,
        "reflexive": reflexive,
        "hl": verdict.holds,
        "kkp": kkp_check(w) if reflexive else None,
        "unimodal": is_unimodal(spec.coefficients()) if is_polynomial(spec) else None,
        "eq5": lower_half_nondecreasing(spec, w.n),
        "necessary_condition": hl_necessary_condition(w) if reflexive and w.q[-1] >= 2 else None,
    }


def _classify_star(args):
    return classify(*args)


def classification_table(n: int, method: str = "auto", parallel: bool = False) -> list[dict]:
    if not 1 <= n <= 6:
        raise InputError("dimension must be between 1 and 6")
    systems = enumerate_reflexive(n)
    if method == "auto" and n > 4:
        log.info("dimension %d: lattice-point route skipped, using weight formulas only", n)
        method = "box"
    jobs = [(w, method) for w in systems]
    if parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            rows = list(pool.map(_classify_star, jobs, chunksize=8))
    else:
        rows = [classify(*j) for j in jobs]
    rows.sort(key=lambda r: r["weights"])
    return rows


def format_row(row: dict) -> str:
    def cell(x):
        if x is None:
            return "n/a"
        if isinstance(x, bool):
            return "true" if x else "false"
        if isinstance(x, tuple):
            return "(" + ",".join(map(str, x)) + ")"
        return str(x)

    return ";".join(cell(row[c]) for c in TABLE_COLUMNS)


def summarize(rows: list[dict]) -> dict:
    return {
        "systems": len(rows),
        "hl": sum(r["hl"] for r in rows),
        "kkp": sum(bool(r["kkp"]) for r in rows),
        "unimodal": sum(bool(r["unimodal"]) for r in rows),
        "eq5": sum(r["eq5"] for r in rows),
        "necessary_condition": sum(bool(r["necessary_condition"]) for r in rows),
        "hl_weights": ["(" + ",".join(map(str, r["weights"])) + ")" for r in rows if r["hl"]],
    }
