"""
Degree-based lower bounds on rho_alpha.

With q = k/(k-1) and p = (2k-1)/(k-1), a vertex set S and a cardinality substitute s
(normally |S|), the evaluators share the two degree expressions

    T1(S) = s * sum_S d^p / sum_S d^q - sum_S d
    T2(S) = s^(1/k) * (sum_S d^q)^((k-1)/k) - sum_S d

Both vanish when all degrees in S are equal. Every evaluator returns a BoundReport that
carries the certified rho_alpha bracket it was compared against.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import schema
from .combinatorics import (
    SubsetKind,
    VertexSubset,
    is_strong_independent,
    max_clique_of_complement,
    max_strong_independent,
    max_weak_independent,
    vertex_connectivity,
    weak_chromatic_number,
)
from .config import BOUNDS
from .errors import HyperalphaError, KTooSmall, NotConnected, PreconditionViolated
from .hypergraph import Hypergraph, adjacent, degree_profile, is_connected
from .spectral import SpectralResult, spectral_radius, spectral_radius_any
from .tensor_ops import AlphaLike, as_alpha


@dataclass(frozen=True)
class BoundReport:
    bound: str
    alpha: float
    subset: VertexSubset | None
    params: dict[str, Any]
    value: float
    rho_lower: float
    rho_upper: float
    slack: float
    holds: bool

    def to_dict(self) -> dict[str, Any]:
        row = {
            "bound": self.bound,
            "alpha": self.alpha,
            "subset": self.subset.to_list() if self.subset is not None else None,
            "params": dict(self.params),
            "value": self.value,
            "rho_lower": self.rho_lower,
            "rho_upper": self.rho_upper,
            "slack": self.slack,
            "holds": self.holds,
        }
        return {k: row[k] for k in schema.BOUND_REPORT_FIELDS}


# ----------------------------
# Scalar helpers
# ----------------------------


def frac_pow(d: float, num: int, den: int) -> float:
    """d^(num/den) for d >= 0, polished with one Newton step on y^den = d^num for integer d."""
    if d < 0:
        raise PreconditionViolated(f"degree must be nonnegative (got {d})")
    if d == 0:
        return 0.0
    y = math.exp(num / den * math.log(d))
    if float(d).is_integer() and num * math.log10(d) < 300:
        target = float(int(d) ** num)
        y -= (y**den - target) / (den * y ** (den - 1))
    return y


def _q(d: float, k: int) -> float:
    return frac_pow(d, k, k - 1)


def _p(d: float, k: int) -> float:
    return frac_pow(d, 2 * k - 1, k - 1)


def t1(degrees: Sequence[float], s: float, k: int) -> float:
    sq = math.fsum(_q(d, k) for d in degrees)
    if sq == 0:
        return 0.0
    sp = math.fsum(_p(d, k) for d in degrees)
    return s * sp / sq - math.fsum(degrees)


def t2(degrees: Sequence[float], s: float, k: int) -> float:
    sq = math.fsum(_q(d, k) for d in degrees)
    if sq == 0:
        return 0.0
    return s ** (1.0 / k) * sq ** ((k - 1) / k) - math.fsum(degrees)


def square_term(degrees: Sequence[float], s: float, k: int) -> float:
    """sum_S d_i * (sqrt(s d_i^q / sum_S d^q) - 1)^2"""
    sq = math.fsum(_q(d, k) for d in degrees)
    if sq == 0:
        return 0.0
    return math.fsum(d * (math.sqrt(s * _q(d, k) / sq) - 1.0) ** 2 for d in degrees)


def kpower_term(degrees: Sequence[float], s: float, k: int) -> float:
    """sum_S d_i * (((s d_i^q / sum_S d^q)^(1/k) + k - 1)^k - k^k)"""
    sq = math.fsum(_q(d, k) for d in degrees)
    if sq == 0:
        return 0.0
    kk = float(k**k)
    return math.fsum(d * (((s * _q(d, k) / sq) ** (1.0 / k) + k - 1) ** k - kk) for d in degrees)


def _pair_increment(di: float, dj: float, k: int, n: int, a: float, c: float) -> float:
    """Two-vertex bracket over c*n; c=1, c=k and c=2 give the three pair variants."""
    pair = [di, dj]
    return (a * t1(pair, 2, k) + (1.0 - a) * k * t2(pair, 2, k)) / (c * n)


def pair_display_forms(
    di: float, dj: float, k: int, n: int, m: int, alpha: AlphaLike, c: float
) -> tuple[float, float]:
    """
    Both printed right-hand sides of the pair bound (plus km/n). The second replaces
    the mean (d_i^q + d_j^q) / 2 in the alpha term by d_i^q, so first >= second when
    d_i >= d_j.
    """
    a = as_alpha(alpha).value
    base = k * m / n
    first = base + _pair_increment(di, dj, k, n, a, c)
    sp = _p(di, k) + _p(dj, k)
    qi = _q(di, k)
    loose_alpha = (sp / qi - (di + dj)) if qi > 0 else 0.0
    second = base + (a * loose_alpha + (1.0 - a) * k * t2([di, dj], 2, k)) / (c * n)
    return first, second


# ----------------------------
# Report plumbing
# ----------------------------


def _require_connected_k3(g: Hypergraph, name: str) -> None:
    if g.k < 3:
        raise KTooSmall(f"{name} needs k >= 3 (got k={g.k})")
    if not is_connected(g)[0]:
        raise NotConnected(f"{name} needs a connected hypergraph")


def _spectrum(g: Hypergraph, a: float, spectrum: SpectralResult | None) -> SpectralResult:
    if spectrum is not None:
        if abs(spectrum.alpha - a) > 1e-15:
            raise PreconditionViolated(
                f"spectrum was computed for alpha={spectrum.alpha}, bound asks alpha={a}"
            )
        return spectrum
    if is_connected(g)[0]:
        return spectral_radius(g, a)
    return spectral_radius_any(g, a)


def _report(
    name: str,
    a: float,
    value: float,
    ref: SpectralResult,
    *,
    subset: VertexSubset | None = None,
    params: dict[str, Any] | None = None,
    scale: float = 1.0,
) -> BoundReport:
    value = float(value)
    lower, upper = float(scale * ref.lower), float(scale * ref.upper)
    holds = bool(value <= upper + BOUNDS.soundness_tol)
    if not holds:
        logging.warning(f"[BOUNDS] {name} value {value:.12g} exceeds rho upper {upper:.12g}")
    return BoundReport(
        bound=name,
        alpha=a,
        subset=subset,
        params=dict(params or {}),
        value=value,
        rho_lower=lower,
        rho_upper=upper,
        slack=lower - value,
        holds=holds,
    )


def _degrees_of(g: Hypergraph, subset: VertexSubset) -> list[int]:
    return [g.degree(v) for v in subset.members]


def _average(g: Hypergraph) -> float:
    return float(Fraction(g.k * g.m, g.n))


def _strong_value(g: Hypergraph, a: float, degs: Sequence[float], s: float) -> float:
    k = g.k
    return _average(g) + (a * t1(degs, s, k) + (1.0 - a) * k * t2(degs, s, k)) / g.n


def _subset_value(g: Hypergraph, a: float, degs: Sequence[float], s: float) -> float:
    k = g.k
    return _average(g) + (a * t1(degs, s, k) + (1.0 - a) * k * t2(degs, s, k)) / (k * g.n)


def _as_subset(g: Hypergraph, subset: VertexSubset | Sequence[int]) -> VertexSubset:
    if isinstance(subset, VertexSubset):
        return VertexSubset.of(g, subset.members, subset.kind, optimal=subset.optimal)
    return VertexSubset.of(g, subset)


# ----------------------------
# Bounds
# ----------------------------


def bound_average_degree(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    a = as_alpha(alpha).value
    return _report(schema.BOUND_AVERAGE_DEGREE, a, _average(g), _spectrum(g, a, spectrum))


def bound_strong_set(
    g: Hypergraph,
    alpha: AlphaLike,
    subset: VertexSubset | Sequence[int],
    *,
    spectrum: SpectralResult | None = None,
) -> BoundReport:
    a = as_alpha(alpha).value
    members = subset.members if isinstance(subset, VertexSubset) else subset
    s = VertexSubset.of(g, members, SubsetKind.STRONG_INDEPENDENT)
    value = _strong_value(g, a, _degrees_of(g, s), len(s))
    return _report(
        schema.BOUND_STRONG_SET, a, value, _spectrum(g, a, spectrum), subset=s, params={"s": len(s)}
    )


def bound_subset(
    g: Hypergraph,
    alpha: AlphaLike,
    subset: VertexSubset | Sequence[int],
    *,
    spectrum: SpectralResult | None = None,
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_subset")
    s = _as_subset(g, subset)
    value = _subset_value(g, a, _degrees_of(g, s), len(s))
    return _report(
        schema.BOUND_SUBSET, a, value, _spectrum(g, a, spectrum), subset=s, params={"s": len(s)}
    )


def bound_full_vertex_set(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_full_vertex_set")
    k, n = g.k, g.n
    degs = [int(d) for d in g.degrees]
    sq = math.fsum(_q(d, k) for d in degs)
    sp = math.fsum(_p(d, k) for d in degs)
    ratio = sp / sq if sq > 0 else 0.0
    value = (a / k) * ratio + (1.0 - a) * (sq / n) ** ((k - 1) / k) + a * (k - 1) * g.m / n
    return _report(schema.BOUND_FULL_VERTEX_SET, a, value, _spectrum(g, a, spectrum))


def _pair_report(
    g: Hypergraph,
    a: float,
    name: str,
    i: int,
    j: int,
    spectrum: SpectralResult | None,
) -> BoundReport:
    di, dj = g.degree(i), g.degree(j)
    c = g.k if adjacent(g, i, j) else 1
    value = _average(g) + _pair_increment(di, dj, g.k, g.n, a, c)
    return _report(
        name,
        a,
        value,
        _spectrum(g, a, spectrum),
        subset=VertexSubset.of(g, [i, j]),
        params={"i": i, "j": j, "d_i": di, "d_j": dj, "c": c},
    )


def bound_vertex_pair(
    g: Hypergraph, alpha: AlphaLike, i: int, j: int, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_vertex_pair")
    for v in (i, j):
        if v < 1 or v > g.n:
            raise PreconditionViolated(f"vertex {v} outside 1..{g.n}")
    if not g.degree(i) > g.degree(j):
        raise PreconditionViolated(
            f"vertex pair bound needs d_i > d_j (got d_{i}={g.degree(i)}, d_{j}={g.degree(j)})"
        )
    return _pair_report(g, a, schema.BOUND_VERTEX_PAIR, i, j, spectrum)


def max_min_vertex_pair(g: Hypergraph) -> tuple[int, int]:
    """A (Delta, delta) vertex pair, non-adjacent if one exists, else the first adjacent pair."""
    prof = degree_profile(g)
    if prof.max_degree == prof.min_degree:
        raise PreconditionViolated("hypergraph is regular: no pair with Delta > delta")
    tops = [v for v in g.vertices() if g.degree(v) == prof.max_degree]
    bottoms = [v for v in g.vertices() if g.degree(v) == prof.min_degree]
    pairs = [(i, j) for i in tops for j in bottoms]
    for i, j in pairs:
        if not adjacent(g, i, j):
            return i, j
    return pairs[0]


def bound_max_min_vertex_pair(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_max_min_vertex_pair")
    i, j = max_min_vertex_pair(g)
    return _pair_report(g, a, schema.BOUND_MAX_MIN_VERTEX_PAIR, i, j, spectrum)


def bound_max_min_pair(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    """Delta/delta bound with the universal 1/(2n) factor; no connectivity required."""
    a = as_alpha(alpha).value
    if g.m == 0:
        raise PreconditionViolated("bound_max_min_pair needs at least one edge")
    prof = degree_profile(g)
    big, small = prof.max_degree, prof.min_degree
    value = _average(g) + _pair_increment(big, small, g.k, g.n, a, 2)
    return _report(
        schema.BOUND_MAX_MIN_PAIR,
        a,
        value,
        _spectrum(g, a, spectrum),
        params={"Delta": big, "delta": small},
    )


def bound_weak_independence(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_weak_independence")
    s = max_weak_independent(g)
    value = _subset_value(g, a, _degrees_of(g, s), len(s))
    return _report(
        schema.BOUND_WEAK_INDEPENDENCE,
        a,
        value,
        _spectrum(g, a, spectrum),
        subset=s,
        params={"alpha_G": len(s)},
    )


def bound_chromatic(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    """Weak-independence bound with s replaced by n/chi (chi * alpha >= n)."""
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_chromatic")
    s = max_weak_independent(g)
    chi = weak_chromatic_number(g)
    value = _subset_value(g, a, _degrees_of(g, s), g.n / chi)
    return _report(
        schema.BOUND_CHROMATIC,
        a,
        value,
        _spectrum(g, a, spectrum),
        subset=s,
        params={"chi": chi, "s": g.n / chi},
    )


def bound_clique_complement(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_clique_complement")
    s = max_clique_of_complement(g)
    value = _subset_value(g, a, _degrees_of(g, s), len(s))
    return _report(
        schema.BOUND_CLIQUE_COMPLEMENT,
        a,
        value,
        _spectrum(g, a, spectrum),
        subset=s,
        params={"omega_complement": len(s)},
    )


def bound_vertex_cut(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    """Minimum vertex cut S; c = 1 when S is strong independent, else c = k."""
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_vertex_cut")
    nu, s = vertex_connectivity(g)
    degs = _degrees_of(g, s)
    strong = is_strong_independent(g, s.members)
    value = _strong_value(g, a, degs, nu) if strong else _subset_value(g, a, degs, nu)
    return _report(
        schema.BOUND_VERTEX_CUT,
        a,
        value,
        _spectrum(g, a, spectrum),
        subset=s,
        params={"nu": nu, "c": 1 if strong else g.k},
    )


def bound_square_subset(
    g: Hypergraph,
    alpha: AlphaLike,
    subset: VertexSubset | Sequence[int],
    *,
    spectrum: SpectralResult | None = None,
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_square_subset")
    s = _as_subset(g, subset)
    degs = _degrees_of(g, s)
    k = g.k
    value = _average(g) + (a * square_term(degs, len(s), k) + k * t2(degs, len(s), k)) / (k * g.n)
    return _report(
        schema.BOUND_SQUARE_SUBSET,
        a,
        value,
        _spectrum(g, a, spectrum),
        subset=s,
        params={"s": len(s)},
    )


def bound_kpower_subset(
    g: Hypergraph,
    alpha: AlphaLike,
    subset: VertexSubset | Sequence[int],
    *,
    spectrum: SpectralResult | None = None,
) -> BoundReport:
    a = as_alpha(alpha).value
    _require_connected_k3(g, "bound_kpower_subset")
    s = _as_subset(g, subset)
    degs = _degrees_of(g, s)
    k, n = g.k, g.n
    value = (
        _average(g)
        + a / (k**k * n) * kpower_term(degs, len(s), k)
        + (1.0 - a) / n * t2(degs, len(s), k)
    )
    return _report(
        schema.BOUND_KPOWER_SUBSET,
        a,
        value,
        _spectrum(g, a, spectrum),
        subset=s,
        params={"s": len(s)},
    )


def bound_power_mean(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    """rho_0 >= ((1/n) sum d^q)^((k-1)/k); adjacency only."""
    a = as_alpha(alpha).value
    if a != 0.0:
        raise PreconditionViolated(f"power-mean bound applies to alpha = 0 only (got {a})")
    _require_connected_k3(g, "bound_power_mean")
    k = g.k
    sq = math.fsum(_q(int(d), k) for d in g.degrees)
    value = (sq / g.n) ** ((k - 1) / k)
    return _report(schema.BOUND_POWER_MEAN, a, value, _spectrum(g, a, spectrum))


def bound_signless_laplacian(
    g: Hypergraph, *, spectrum: SpectralResult | None = None
) -> BoundReport:
    """
    rho(Q) = 2 * rho_{1/2}
        >= (1/(kn)) sum d (sqrt(n d^q / sum d^q) - 1)^2 + 2 ((1/n) sum d^q)^((k-1)/k).
    The report's bracket is on the rho(Q) scale.
    """
    _require_connected_k3(g, "bound_signless_laplacian")
    k, n = g.k, g.n
    degs = [int(d) for d in g.degrees]
    sq = math.fsum(_q(d, k) for d in degs)
    value = square_term(degs, n, k) / (k * n) + 2.0 * (sq / n) ** ((k - 1) / k)
    return _report(
        schema.BOUND_SIGNLESS_LAPLACIAN,
        0.5,
        value,
        _spectrum(g, 0.5, spectrum),
        params={"target": "rho(Q)"},
        scale=2.0,
    )


@dataclass
class BestBounds:
    alpha: float
    spectrum: SpectralResult
    reports: list[BoundReport] = field(default_factory=list)
    skipped: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": self.alpha,
            "rho": self.spectrum.to_dict(include_eigvec=False),
            "bounds": [r.to_dict() for r in self.reports],
            "skipped": dict(self.skipped),
        }


def best_bound(
    g: Hypergraph, alpha: AlphaLike, *, spectrum: SpectralResult | None = None
) -> BestBounds:
    """
    Every applicable bound, sorted by value descending. The subsets and invariants the
    bounds need come from the exact solvers. Bounds whose hypothesis fails on G (regular G
    for the vertex pair, complete G for the vertex cut, alpha != 0 for the power mean, edgeless
    G for the chromatic number) are listed in `skipped` with the reason.
    """
    a = as_alpha(alpha).value
    _require_connected_k3(g, "best_bound")
    ref = _spectrum(g, a, spectrum)
    full = VertexSubset.of(g, g.vertices())

    out = BestBounds(alpha=a, spectrum=ref)
    strong = max_strong_independent(g)
    evaluators = [
        (schema.BOUND_AVERAGE_DEGREE, lambda: bound_average_degree(g, a, spectrum=ref)),
        (schema.BOUND_STRONG_SET, lambda: bound_strong_set(g, a, strong, spectrum=ref)),
        (schema.BOUND_SUBSET, lambda: bound_subset(g, a, strong, spectrum=ref)),
        (schema.BOUND_FULL_VERTEX_SET, lambda: bound_full_vertex_set(g, a, spectrum=ref)),
        (schema.BOUND_MAX_MIN_VERTEX_PAIR, lambda: bound_max_min_vertex_pair(g, a, spectrum=ref)),
        (schema.BOUND_MAX_MIN_PAIR, lambda: bound_max_min_pair(g, a, spectrum=ref)),
        (schema.BOUND_WEAK_INDEPENDENCE, lambda: bound_weak_independence(g, a, spectrum=ref)),
        (schema.BOUND_CHROMATIC, lambda: bound_chromatic(g, a, spectrum=ref)),
        (schema.BOUND_CLIQUE_COMPLEMENT, lambda: bound_clique_complement(g, a, spectrum=ref)),
        (schema.BOUND_VERTEX_CUT, lambda: bound_vertex_cut(g, a, spectrum=ref)),
        (schema.BOUND_SQUARE_SUBSET, lambda: bound_square_subset(g, a, full, spectrum=ref)),
        (schema.BOUND_KPOWER_SUBSET, lambda: bound_kpower_subset(g, a, full, spectrum=ref)),
        (schema.BOUND_POWER_MEAN, lambda: bound_power_mean(g, a, spectrum=ref)),
    ]
    for name, evaluate in evaluators:
        try:
            out.reports.append(evaluate())
        except HyperalphaError as e:
            out.skipped[name] = str(e)
    out.reports.sort(key=lambda r: (-r.value, r.bound))
    return out
