"""
Property suites run by `hyperalpha verify` on one generated instance.

Each suite receives a TrialContext and returns the number of comparisons it made plus a
Failure record for every violated one. A Failure's `slack` is signed so that a negative
value is the size of the violation.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .. import schema
from ..bounds import (
    BoundReport,
    best_bound,
    bound_kpower_subset,
    bound_signless_laplacian,
    bound_square_subset,
    bound_strong_set,
    bound_subset,
    bound_vertex_pair,
    max_min_vertex_pair,
    pair_display_forms,
)
from ..combinatorics import VertexSubset, max_strong_independent
from ..config import VERIFY
from ..errors import HyperalphaError, PreconditionViolated
from ..hypergraph import Hypergraph, adjacent, complete, degree_profile, random_regular
from ..spectral import (
    SpectralResult,
    check_laplacian_transport,
    check_product_rho,
    laplacian_pair_from_adjacency,
    spectral_radius,
    variational_estimate,
)
from ..tensor_ops import KVector, rayleigh


@dataclass(frozen=True)
class Failure:
    trial: int
    suite: str
    check: str
    alpha: float | None
    value: float | None
    reference: float | None
    slack: float | None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "trial": self.trial,
            "suite": self.suite,
            "check": self.check,
            "alpha": self.alpha,
            "value": self.value,
            "reference": self.reference,
            "slack": self.slack,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Tolerances:
    soundness: float
    improvement: float
    product: float
    regular: float = 1e-8
    fuzz: float = 1e-10


@dataclass
class TrialContext:
    trial: int
    g: Hypergraph
    alphas: tuple[float, ...]
    spectra: dict[float, SpectralResult]
    tolerances: Tolerances
    rng: np.random.Generator
    inflate: dict[str, float] = field(default_factory=dict)


@dataclass
class SuiteResult:
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)


# ----------------------------
# Shared instance material
# ----------------------------


def _random_subsets(ctx: TrialContext) -> list[VertexSubset]:
    """Max strong independent set, V itself, and a few random nonempty subsets."""
    g = ctx.g
    out = [max_strong_independent(g), VertexSubset.of(g, g.vertices())]
    for _ in range(VERIFY.random_subsets):
        size = int(ctx.rng.integers(1, g.n + 1))
        picks = ctx.rng.choice(g.n, size=size, replace=False)
        out.append(VertexSubset.of(g, [int(v) + 1 for v in picks]))
    return out


def _random_pair(ctx: TrialContext) -> tuple[int, int] | None:
    g = ctx.g
    pairs = [(i, j) for i in g.vertices() for j in g.vertices() if g.degree(i) > g.degree(j)]
    if not pairs:
        return None
    return pairs[int(ctx.rng.integers(len(pairs)))]


def _all_reports(ctx: TrialContext, a: float, subsets: list[VertexSubset]) -> list[BoundReport]:
    g = ctx.g
    ref = ctx.spectra[a]
    reports = list(best_bound(g, a, spectrum=ref).reports)
    for s in subsets:
        reports.append(bound_subset(g, a, s, spectrum=ref))
        reports.append(bound_square_subset(g, a, s, spectrum=ref))
        reports.append(bound_kpower_subset(g, a, s, spectrum=ref))
    reports.append(bound_strong_set(g, a, subsets[0], spectrum=ref))
    pair = _random_pair(ctx)
    if pair is not None:
        reports.append(bound_vertex_pair(g, a, pair[0], pair[1], spectrum=ref))
    return reports


# ----------------------------
# Suites
# ----------------------------


def soundness(ctx: TrialContext) -> SuiteResult:
    """Every bound stays below the certified upper end of the rho_alpha bracket."""
    out = SuiteResult()
    subsets = _random_subsets(ctx)
    tol = ctx.tolerances.soundness

    def compare(report: BoundReport) -> None:
        value = report.value + ctx.inflate.get(report.bound, 0.0)
        out.checks += 1
        if value > report.rho_upper + tol:
            out.failures.append(
                Failure(
                    trial=ctx.trial,
                    suite=schema.SUITE_SOUNDNESS,
                    check=report.bound,
                    alpha=report.alpha,
                    value=value,
                    reference=report.rho_upper,
                    slack=report.rho_upper - value,
                    detail=(
                        f"subset={report.subset.to_list() if report.subset else None} "
                        f"params={report.params}"
                    ),
                )
            )

    for a in ctx.alphas:
        for report in _all_reports(ctx, a, subsets):
            compare(report)

    half = ctx.spectra.get(0.5) or spectral_radius(ctx.g, 0.5)
    compare(bound_signless_laplacian(ctx.g, spectrum=half))
    return out


def improvement(ctx: TrialContext) -> SuiteResult:
    """Refined bounds never fall below km/n."""
    out = SuiteResult()
    subsets = _random_subsets(ctx)
    g = ctx.g
    avg = g.k * g.m / g.n
    tol = ctx.tolerances.improvement
    for a in ctx.alphas:
        for report in _all_reports(ctx, a, subsets):
            if report.bound not in schema.REFINED_BOUNDS:
                continue
            out.checks += 1
            if report.value < avg - tol:
                out.failures.append(
                    Failure(
                        trial=ctx.trial,
                        suite=schema.SUITE_IMPROVEMENT,
                        check=report.bound,
                        alpha=a,
                        value=report.value,
                        reference=avg,
                        slack=report.value - avg,
                        detail=f"subset={report.subset.to_list() if report.subset else None}",
                    )
                )
    return out


def ordering(ctx: TrialContext) -> SuiteResult:
    """
    bound_subset(S) dominates the square and k-th power forms on the same S, and the
    two printed Delta/delta pair expressions come in the printed order.
    """
    out = SuiteResult()
    g = ctx.g
    tol = ctx.tolerances.improvement
    subsets = _random_subsets(ctx)

    def need(check: str, a: float, bigger: float, smaller: float, detail: str) -> None:
        out.checks += 1
        if bigger < smaller - tol:
            out.failures.append(
                Failure(
                    trial=ctx.trial,
                    suite=schema.SUITE_ORDERING,
                    check=check,
                    alpha=a,
                    value=smaller,
                    reference=bigger,
                    slack=bigger - smaller,
                    detail=detail,
                )
            )

    for a in ctx.alphas:
        ref = ctx.spectra[a]
        for s in subsets:
            general = bound_subset(g, a, s, spectrum=ref).value
            detail = f"subset={s.to_list()}"
            square = bound_square_subset(g, a, s, spectrum=ref).value
            kpower = bound_kpower_subset(g, a, s, spectrum=ref).value
            need("subset>=square_subset", a, general, square, detail)
            need("subset>=kpower_subset", a, general, kpower, detail)

        prof = degree_profile(g)
        if prof.max_degree > prof.min_degree:
            i, j = max_min_vertex_pair(g)
            c = g.k if adjacent(g, i, j) else 1
            first, second = pair_display_forms(
                prof.max_degree, prof.min_degree, g.k, g.n, g.m, a, c
            )
            need("pair_first>=pair_second", a, first, second, f"i={i} j={j} c={c}")
    return out


def _product_partners(k: int) -> list[tuple[str, Hypergraph]]:
    return [(f"K_{k}^{k}", complete(k, k)), (f"complete({k + 1},{k})", complete(k + 1, k))]


def product_transport(ctx: TrialContext) -> SuiteResult:
    """rho_alpha(G x H) = (k-1)! d rho_alpha(G) for connected regular H."""
    out = SuiteResult()
    g = ctx.g
    if g.k < 3:
        out.skipped.append(f"k={g.k} < 3")
        return out
    a = ctx.alphas[ctx.trial % len(ctx.alphas)]
    for name, h in _product_partners(g.k):
        if g.n * h.n > VERIFY.product_max_vertices:
            out.skipped.append(f"{name}: product has {g.n * h.n} vertices")
            continue
        report = check_product_rho(g, h, a, ctx.tolerances.product)
        out.checks += 1
        if not report.passed:
            out.failures.append(
                Failure(
                    trial=ctx.trial,
                    suite=schema.SUITE_PRODUCT,
                    check=f"product_rho[{name}]",
                    alpha=a,
                    value=report.product_value,
                    reference=report.expected,
                    slack=-(report.difference or 0.0),
                    detail="; ".join(report.failures),
                )
            )
    return out


def _random_regular_like(g: Hypergraph, rng: np.random.Generator) -> Hypergraph:
    n = max(g.k + 1, min(g.n, VERIFY.regular_max_n))
    most = max(1, min(2, math.comb(n, g.k) // n))
    cycles = 1 + int(rng.integers(most))
    return random_regular(n, g.k, cycles, int(rng.integers(2**31 - 1)))


def laplacian_transport(ctx: TrialContext) -> SuiteResult:
    """
    L-eigenpairs of G move to G x K_k^k with eigenvalue scaled by (k-1)!: the pair
    (0, all-ones) of the trial instance, then both (0, all-ones) and the adjacency-derived
    pair of a seeded random regular hypergraph of similar order.
    """
    out = SuiteResult()
    g = ctx.g
    h = complete(g.k, g.k)
    regular = _random_regular_like(g, ctx.rng)
    lam, u = laplacian_pair_from_adjacency(regular)
    cases = [
        ("ones_pair", g, 0.0, KVector.ones(g.n, g.k)),
        ("regular_ones_pair", regular, 0.0, KVector.ones(regular.n, g.k)),
        ("adjacency_pair", regular, lam, u),
    ]
    for check, source, value, vec in cases:
        out.checks += 1
        try:
            report = check_laplacian_transport(source, h, value, vec, ctx.tolerances.product)
        except PreconditionViolated as e:
            out.failures.append(
                Failure(ctx.trial, schema.SUITE_LAPLACIAN, check, None, value, None, None, str(e))
            )
            continue
        if not report.passed:
            out.failures.append(
                Failure(
                    trial=ctx.trial,
                    suite=schema.SUITE_LAPLACIAN,
                    check=check,
                    alpha=None,
                    value=report.residual,
                    reference=10.0 * ctx.tolerances.product,
                    slack=10.0 * ctx.tolerances.product - report.residual,
                    detail="; ".join(report.failures),
                )
            )
    return out


def regular_equality(ctx: TrialContext) -> SuiteResult:
    """On a complete hypergraph rho_alpha = C(n-1, k-1) and every bound meets it."""
    out = SuiteResult()
    k = ctx.g.k
    reg = complete(max(k + 1, min(ctx.g.n, VERIFY.regular_max_n)), k)
    d = math.comb(reg.n - 1, k - 1)
    tol = ctx.tolerances.regular

    def equal(check: str, a: float, value: float, reference: float) -> None:
        out.checks += 1
        diff = abs(value - reference)
        if diff > tol:
            out.failures.append(
                Failure(
                    trial=ctx.trial,
                    suite=schema.SUITE_REGULAR,
                    check=check,
                    alpha=a,
                    value=value,
                    reference=reference,
                    slack=-diff,
                    detail=f"complete({reg.n},{k})",
                )
            )

    for a in ctx.alphas:
        res = spectral_radius(reg, a)
        equal("rho", a, res.rho, float(d))
        for report in best_bound(reg, a, spectrum=res).reports:
            if report.bound == schema.BOUND_CHROMATIC:
                continue
            equal(report.bound, a, report.value, res.rho)
    half = spectral_radius(reg, 0.5)
    q = bound_signless_laplacian(reg, spectrum=half)
    equal(q.bound, 0.5, q.value, 2.0 * half.rho)
    return out


def variational_fuzz(ctx: TrialContext) -> SuiteResult:
    """
    x^T(A_alpha x) <= rho_alpha for random nonnegative unit-k-norm x, including the
    projected gradient maximizer (its agreement with rho is tested on fixed instances).
    """
    out = SuiteResult()
    g = ctx.g
    tol = ctx.tolerances.fuzz
    vectors = ctx.rng.random((VERIFY.fuzz_vectors, g.n))
    for a in ctx.alphas:
        upper = ctx.spectra[a].upper
        for row in vectors:
            x = KVector(row, g.k).normalized()
            value = rayleigh(g, a, x, compensated=True)
            out.checks += 1
            if value > upper + tol:
                out.failures.append(
                    Failure(
                        trial=ctx.trial,
                        suite=schema.SUITE_FUZZ,
                        check="rayleigh<=rho",
                        alpha=a,
                        value=value,
                        reference=upper,
                        slack=upper - value,
                        detail=f"x={[round(float(v), 12) for v in x.entries]}",
                    )
                )
        estimate = variational_estimate(
            g,
            a,
            starts=VERIFY.oracle_starts,
            seed=int(ctx.rng.integers(2**31 - 1)),
            max_steps=VERIFY.oracle_max_steps,
        )
        out.checks += 1
        if estimate > upper + tol:
            out.failures.append(
                Failure(
                    trial=ctx.trial,
                    suite=schema.SUITE_FUZZ,
                    check="variational_estimate",
                    alpha=a,
                    value=estimate,
                    reference=upper,
                    slack=upper - estimate,
                    detail=f"starts={VERIFY.oracle_starts}",
                )
            )
    return out


SUITES: dict[str, Callable[[TrialContext], SuiteResult]] = {
    schema.SUITE_SOUNDNESS: soundness,
    schema.SUITE_IMPROVEMENT: improvement,
    schema.SUITE_ORDERING: ordering,
    schema.SUITE_PRODUCT: product_transport,
    schema.SUITE_LAPLACIAN: laplacian_transport,
    schema.SUITE_REGULAR: regular_equality,
    schema.SUITE_FUZZ: variational_fuzz,
}


def run_suite(name: str, ctx: TrialContext) -> SuiteResult:
    """Run one suite; a library error inside it becomes a failure record, not a crash."""
    try:
        return SUITES[name](ctx)
    except HyperalphaError as e:
        logging.warning(f"[VERIFY] trial={ctx.trial} suite={name} raised {type(e).__name__}: {e}")
        return SuiteResult(
            checks=1,
            failures=[
                Failure(
                    ctx.trial, name, "error", None, None, None, None, f"{type(e).__name__}: {e}"
                )
            ],
        )
