from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from .. import schema
from ..config import BOUNDS, SEARCH, VERIFY
from ..errors import InfeasibleRequest, PreconditionViolated, TooLarge
from ..hypergraph import Hypergraph, min_connected_edges, random_connected
from ..reports.registry import CampaignFile
from ..spectral import spectral_radius
from ..tensor_ops import as_alpha
from ..utils.progress import Progress
from .suites import Failure, Tolerances, TrialContext, run_suite


@dataclass(frozen=True)
class VerifySettings:
    seed: int
    trials: int = VERIFY.trials
    n_range: tuple[int, int] = (VERIFY.n_min, VERIFY.n_max)
    ks: tuple[int, ...] = VERIFY.ks
    m_range: tuple[int, int] | None = None
    alphas: tuple[float, ...] = VERIFY.alphas
    suites: tuple[str, ...] = VERIFY.suites
    tolerances: Tolerances = field(
        default_factory=lambda: Tolerances(
            soundness=BOUNDS.soundness_tol,
            improvement=BOUNDS.improvement_tol,
            product=BOUNDS.product_tol,
        )
    )
    inflate: dict[str, float] = field(default_factory=dict)

    def with_campaign(self, campaign: CampaignFile) -> VerifySettings:
        """Fill fields from a campaign file; command-line flags are applied on top afterwards."""
        tol = self.tolerances
        return replace(
            self,
            seed=campaign.seed if campaign.seed is not None else self.seed,
            trials=campaign.trials if campaign.trials is not None else self.trials,
            n_range=campaign.n_range or self.n_range,
            m_range=campaign.m_range or self.m_range,
            ks=campaign.ks or self.ks,
            alphas=campaign.alphas or self.alphas,
            suites=campaign.suites or self.suites,
            tolerances=Tolerances(
                soundness=campaign.soundness_tol or tol.soundness,
                improvement=campaign.improvement_tol or tol.improvement,
                product=campaign.product_tol or tol.product,
            ),
        )

    def validate(self) -> None:
        if self.seed < 0:
            raise PreconditionViolated(f"seed must be nonnegative (got {self.seed})")
        if self.trials < 1:
            raise PreconditionViolated(f"trials must be >= 1 (got {self.trials})")
        lo, hi = self.n_range
        if lo > hi:
            raise PreconditionViolated(f"empty n range {lo}-{hi}")
        cap = min(SEARCH.independence_cap, SEARCH.chromatic_cap, SEARCH.cut_cap)
        if hi > cap:
            raise TooLarge(f"verify instances need n <= {cap} for the exact solvers (got {hi})")
        if not self.ks or any(k < 3 for k in self.ks):
            raise PreconditionViolated(f"verify needs every k >= 3 (got {list(self.ks)})")
        if any(lo < k for k in self.ks):
            raise PreconditionViolated(
                f"n must be >= k for every k (n_min={lo}, ks={list(self.ks)})"
            )
        if not self.alphas:
            raise PreconditionViolated("at least one alpha is required")
        for a in self.alphas:
            as_alpha(a)
        unknown = [s for s in self.suites if s not in schema.ALL_SUITES]
        if unknown:
            raise PreconditionViolated(f"unknown suites {unknown}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "family": {
                "n": list(self.n_range),
                "k": list(self.ks),
                "m": list(self.m_range) if self.m_range else None,
            },
            "alphas": list(self.alphas),
            "suites": list(self.suites),
            "tolerances": {
                "soundness": self.tolerances.soundness,
                "improvement": self.tolerances.improvement,
                "product": self.tolerances.product,
                "regular": self.tolerances.regular,
                "fuzz": self.tolerances.fuzz,
            },
        }


@dataclass
class TrialSummary:
    trial: int
    n: int
    k: int
    m: int
    graph_seed: int
    edges: list[list[int]]
    rho: dict[str, float]
    checks: dict[str, int]
    skipped: dict[str, list[str]]
    failures: list[Failure]

    def to_dict(self) -> dict[str, Any]:
        return {
            "trial": self.trial,
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "graph_seed": self.graph_seed,
            "edges": self.edges,
            "rho": dict(self.rho),
            "checks": dict(self.checks),
            "skipped": {k: list(v) for k, v in self.skipped.items() if v},
            "failures": len(self.failures),
        }


@dataclass
class VerifyRun:
    settings: VerifySettings
    results: list[TrialSummary] = field(default_factory=list)

    @property
    def failures(self) -> list[Failure]:
        return [f for r in self.results for f in r.failures]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.settings.to_dict(),
            "passed": self.passed,
            "checks": sum(sum(r.checks.values()) for r in self.results),
            "results": [r.to_dict() for r in self.results],
            "failures": [f.to_dict() for f in self.failures],
        }


def _draw_instance(settings: VerifySettings, rng: np.random.Generator) -> tuple[Hypergraph, int]:
    k = int(settings.ks[int(rng.integers(len(settings.ks)))])
    lo_n, hi_n = settings.n_range
    n = int(rng.integers(max(lo_n, k), hi_n + 1))
    lo_m = min_connected_edges(n, k)
    hi_m = math.comb(n, k)
    if settings.m_range is not None:
        m_lo, m_hi = max(lo_m, settings.m_range[0]), min(hi_m, settings.m_range[1])
        if m_lo > m_hi:
            raise InfeasibleRequest(
                f"m range {list(settings.m_range)} is infeasible for n={n} k={k} "
                f"(connected needs {lo_m}..{hi_m})"
            )
        m = int(rng.integers(m_lo, m_hi + 1))
    else:
        headroom = int(VERIFY.m_headroom_fraction * (hi_m - lo_m))
        m = lo_m + int(rng.integers(0, headroom + 1))
    graph_seed = int(rng.integers(2**31 - 1))
    return random_connected(n, k, m, graph_seed), graph_seed


def run_trial(settings: VerifySettings, trial: int) -> TrialSummary:
    rng = np.random.default_rng([settings.seed, trial])
    g, graph_seed = _draw_instance(settings, rng)
    spectra = {a: spectral_radius(g, a) for a in settings.alphas}
    summary = TrialSummary(
        trial=trial,
        n=g.n,
        k=g.k,
        m=g.m,
        graph_seed=graph_seed,
        edges=[list(e) for e in g.edges],
        rho={f"{a:g}": spectra[a].rho for a in settings.alphas},
        checks={},
        skipped={},
        failures=[],
    )
    for index, name in enumerate(settings.suites):
        ctx = TrialContext(
            trial=trial,
            g=g,
            alphas=settings.alphas,
            spectra=spectra,
            tolerances=settings.tolerances,
            rng=np.random.default_rng([settings.seed, trial, index]),
            inflate=dict(settings.inflate),
        )
        result = run_suite(name, ctx)
        summary.checks[name] = result.checks
        summary.skipped[name] = result.skipped
        summary.failures.extend(result.failures)
    if summary.failures:
        logging.warning(
            f"[VERIFY] trial={trial} n={g.n} k={g.k} m={g.m}: "
            f"{len(summary.failures)} failure(s)"
        )
    return summary


def run_verify(settings: VerifySettings, *, workers: int = 1) -> VerifyRun:
    """
    Run every trial (concurrently when workers > 1). Trials draw from independent seeded
    streams and results are ordered by trial index, so output does not depend on `workers`.
    """
    settings.validate()
    run = VerifyRun(settings=settings)
    progress = Progress(label="VERIFY", total=settings.trials)
    logging.info(
        f"[VERIFY] seed={settings.seed} trials={settings.trials} "
        f"suites={','.join(settings.suites)} workers={workers}"
    )

    results: list[TrialSummary] = []
    if workers <= 1:
        for t in range(settings.trials):
            results.append(run_trial(settings, t))
            progress.maybe_log(len(results))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_trial, settings, t) for t in range(settings.trials)]
            for fut in futures:
                results.append(fut.result())
                progress.maybe_log(len(results))

    run.results = sorted(results, key=lambda r: r.trial)
    logging.info(
        f"[VERIFY] done: {sum(sum(r.checks.values()) for r in run.results)} checks, "
        f"{len(run.failures)} failure(s)"
    )
    return run
