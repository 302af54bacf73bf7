"""
A_alpha spectral radius with certified brackets, plus the direct-product transport checks.

The iteration is the shifted NQZ scheme: with T'x = A_alpha x + s * x^[k-1],

    y = T'x,   bracket = [min_i y_i / x_i^(k-1), max_i y_i / x_i^(k-1)] - s,
    x <- y^[1/(k-1)] normalized to unit k-norm.

For a positive x every bracket contains rho_alpha (Collatz-Wielandt), so the reported
bracket is the intersection of all brackets seen so far.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .config import BOUNDS, SPECTRAL
from .errors import KTooSmall, NoConvergence, NotConnected, PreconditionViolated
from .hypergraph import (
    Hypergraph,
    components,
    direct_product,
    induced_on,
    is_connected,
    is_regular,
)
from .tensor_ops import (
    AlphaLike,
    KVector,
    TensorKind,
    _adjacency,
    _degree,
    as_alpha,
    eig_residual,
    rayleigh,
)


@dataclass(frozen=True)
class SpectralResult:
    alpha: float
    rho: float
    lower: float
    upper: float
    eigvec: KVector
    residual: float
    iterations: int
    converged: bool

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_dict(self, *, include_eigvec: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "alpha": self.alpha,
            "rho": self.rho,
            "lower": self.lower,
            "upper": self.upper,
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }
        if include_eigvec:
            out["eigvec"] = [float(v) for v in self.eigvec.entries]
        return out


@dataclass(frozen=True)
class ComponentSpectrum:
    vertices: list[int]
    result: SpectralResult


def _a_alpha_apply(g: Hypergraph, a: float, x: np.ndarray) -> np.ndarray:
    return a * _degree(g, x) + (1.0 - a) * _adjacency(g, x)


def _trivial_result(g: Hypergraph, a: float) -> SpectralResult:
    return SpectralResult(
        alpha=a,
        rho=0.0,
        lower=0.0,
        upper=0.0,
        eigvec=KVector.uniform_unit(g.n, g.k),
        residual=0.0,
        iterations=0,
        converged=True,
    )


def spectral_radius(
    g: Hypergraph,
    alpha: AlphaLike,
    tol: float = SPECTRAL.tol,
    max_iter: int = SPECTRAL.max_iter,
    *,
    shift: float = SPECTRAL.shift,
    strict: bool = False,
) -> SpectralResult:
    """
    rho_alpha(G) of a connected hypergraph.

    When `max_iter` is hit the best bracket is returned with converged=False; pass
    strict=True to raise NoConvergence instead.
    """
    a = as_alpha(alpha).value
    if tol <= 0:
        raise PreconditionViolated(f"tol must be positive (got {tol})")
    if max_iter < 1:
        raise PreconditionViolated(f"max_iter must be >= 1 (got {max_iter})")
    connected, parts = is_connected(g)
    if not connected:
        raise NotConnected(f"hypergraph has {len(parts)} components; use spectral_radius_any")
    if g.m == 0:
        return _trivial_result(g, a)

    k = g.k
    x = np.full(g.n, g.n ** (-1.0 / k))
    lower, upper = -math.inf, math.inf
    measured = x
    iterations = 0
    converged = False

    for it in range(1, max_iter + 1):
        iterations = it
        xk1 = x ** (k - 1)
        y = _a_alpha_apply(g, a, x) + shift * xk1
        ratios = y / xk1
        lower = max(lower, float(np.min(ratios)) - shift)
        upper = min(upper, float(np.max(ratios)) - shift)
        measured = x
        if upper - lower <= tol:
            converged = True
            break
        x = y ** (1.0 / (k - 1))
        x = x / np.sum(x**k) ** (1.0 / k)
        if SPECTRAL.log_every_n and it % SPECTRAL.log_every_n == 0:
            logging.debug(f"[SPECTRAL] it={it} bracket=[{lower:.12g}, {upper:.12g}]")

    rho = 0.5 * (lower + upper)
    eigvec = KVector(measured, k)
    result = SpectralResult(
        alpha=a,
        rho=rho,
        lower=lower,
        upper=upper,
        eigvec=eigvec,
        residual=eig_residual(g, TensorKind.A_ALPHA, rho, eigvec, alpha=a),
        iterations=iterations,
        converged=converged,
    )
    if not converged:
        msg = (
            f"no convergence after {max_iter} iterations "
            f"(n={g.n} m={g.m} alpha={a}): bracket width {upper - lower:.3e} > tol {tol:.3e}"
        )
        if strict:
            raise NoConvergence(msg, result=result)
        logging.warning(f"[SPECTRAL] {msg}")
    return result


def spectral_by_component(
    g: Hypergraph,
    alpha: AlphaLike,
    tol: float = SPECTRAL.tol,
    max_iter: int = SPECTRAL.max_iter,
    *,
    strict: bool = False,
) -> list[ComponentSpectrum]:
    a = as_alpha(alpha).value
    out: list[ComponentSpectrum] = []
    for part in components(g):
        sub = induced_on(g, part)
        if sub.m == 0:
            res = _trivial_result(sub, a)
        else:
            res = spectral_radius(sub, a, tol, max_iter, strict=strict)
        out.append(ComponentSpectrum(vertices=part, result=res))
    return out


def spectral_radius_any(
    g: Hypergraph,
    alpha: AlphaLike,
    tol: float = SPECTRAL.tol,
    max_iter: int = SPECTRAL.max_iter,
    *,
    strict: bool = False,
) -> SpectralResult:
    """
    rho_alpha of an arbitrary hypergraph: the maximum over components. The eigenvector is
    the Perron vector of the best component, zero elsewhere.
    """
    a = as_alpha(alpha).value
    if g.m == 0:
        return _trivial_result(g, a)
    return combine_components(g, a, spectral_by_component(g, a, tol, max_iter, strict=strict))


def combine_components(
    g: Hypergraph, alpha: AlphaLike, parts: list[ComponentSpectrum]
) -> SpectralResult:
    """Whole-hypergraph result from `spectral_by_component` output for the same G and alpha."""
    a = as_alpha(alpha).value
    if g.m == 0 or not parts:
        return _trivial_result(g, a)
    if len(parts) == 1:
        return parts[0].result

    best = max(parts, key=lambda c: (c.result.rho, -c.vertices[0]))
    vec = np.zeros(g.n)
    for pos, v in enumerate(best.vertices):
        vec[v - 1] = best.result.eigvec.entries[pos]
    eigvec = KVector(vec, g.k)
    rho = best.result.rho
    return SpectralResult(
        alpha=a,
        rho=rho,
        lower=max(c.result.lower for c in parts),
        upper=max(c.result.upper for c in parts),
        eigvec=eigvec,
        residual=eig_residual(g, TensorKind.A_ALPHA, rho, eigvec, alpha=a),
        iterations=sum(c.result.iterations for c in parts),
        converged=all(c.result.converged for c in parts),
    )


# ----------------------------
# Independent variational estimate
# ----------------------------


def variational_estimate(
    g: Hypergraph,
    alpha: AlphaLike,
    *,
    starts: int = SPECTRAL.oracle_starts,
    seed: int = 0,
    max_steps: int = SPECTRAL.oracle_max_steps,
    grad_tol: float = SPECTRAL.oracle_grad_tol,
) -> float:
    """
    Multi-start projected gradient ascent of x^T(A_alpha x) over nonnegative unit k-norm
    vectors.

    Each step moves along the gradient component tangent to the unit k-sphere,
    d = A_alpha x - (<A_alpha x, c> / <c, c>) c with c = x^[k-1], which vanishes exactly at
    H-eigenvectors. Trial steps come from the Barzilai-Borwein ratio (capped at
    SPECTRAL.oracle_max_step) and are halved until the Armijo condition holds. A start
    ends when max |d_i| <= grad_tol or when no step above oracle_min_step improves.
    Shares no code path with the power iteration beyond the tensor apply.
    """
    a = as_alpha(alpha).value
    if starts < 1 or max_steps < 1:
        raise PreconditionViolated("variational_estimate needs starts >= 1 and max_steps >= 1")
    if g.m == 0:
        return 0.0
    k = g.k
    rng = np.random.default_rng(seed)

    def project(v: np.ndarray) -> np.ndarray | None:
        v = np.maximum(v, 0.0)
        norm = float(np.sum(v**k)) ** (1.0 / k)
        return v / norm if norm > 0 else None

    def tangent(v: np.ndarray) -> np.ndarray:
        grad = _a_alpha_apply(g, a, v)
        c = v ** (k - 1)
        return grad - (float(grad @ c) / float(c @ c)) * c

    best = -math.inf
    for start in range(starts):
        raw = np.ones(g.n) if start == 0 else rng.random(g.n) + 1e-3
        x = project(raw)
        assert x is not None
        f = rayleigh(g, a, x)
        d = tangent(x)
        step = 1.0
        for _ in range(max_steps):
            if float(np.max(np.abs(d))) <= grad_tol:
                break
            gain = SPECTRAL.oracle_armijo * k * float(d @ d)
            cand, f_new = None, -math.inf
            while step >= SPECTRAL.oracle_min_step:
                cand = project(x + step * d)
                if cand is not None:
                    f_new = rayleigh(g, a, cand)
                    if f_new >= f + step * gain:
                        break
                step *= 0.5
            if step < SPECTRAL.oracle_min_step or cand is None:
                break
            d_new = tangent(cand)
            dx, dd = cand - x, d_new - d
            curvature = float(dx @ dd)
            step = (
                min(SPECTRAL.oracle_max_step, float(dx @ dx) / -curvature)
                if curvature < 0
                else SPECTRAL.oracle_max_step
            )
            x, f, d = cand, f_new, d_new
        best = max(best, f)
    return best


# ----------------------------
# Direct-product transport checks
# ----------------------------


@dataclass(frozen=True)
class ProductCheck:
    """Outcome of a transport check; `failures` names every violated comparison."""

    kind: str
    alpha: float | None
    k: int
    d: int
    factor: int
    source_value: float
    expected: float
    product_value: float | None
    difference: float | None
    residual: float
    tol: float
    passed: bool
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "alpha": self.alpha,
            "k": self.k,
            "d": self.d,
            "factor": self.factor,
            "source_value": self.source_value,
            "expected": self.expected,
            "product_value": self.product_value,
            "difference": self.difference,
            "residual": self.residual,
            "tol": self.tol,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def _regular_degree(h: Hypergraph, *, require_connected: bool) -> int:
    regular, d = is_regular(h)
    if not regular or d is None:
        raise PreconditionViolated("H must be regular (all vertex degrees equal)")
    if d == 0:
        raise PreconditionViolated("H must have at least one edge")
    if require_connected and not is_connected(h)[0]:
        raise PreconditionViolated("H must be connected")
    return d


def check_product_rho(
    g: Hypergraph,
    h: Hypergraph,
    alpha: AlphaLike,
    tol: float = BOUNDS.product_tol,
) -> ProductCheck:
    """
    rho_alpha(G x H) = (k-1)! * d * rho_alpha(G) for connected G and connected d-regular H,
    with u (x) e an eigenvector of the product (u the Perron vector of G).
    """
    a = as_alpha(alpha).value
    if g.k != h.k:
        raise PreconditionViolated(f"G and H must have equal arity (got {g.k} and {h.k})")
    if g.k < 3:
        raise KTooSmall(f"product transport needs k >= 3 (got k={g.k})")
    if not is_connected(g)[0]:
        raise PreconditionViolated("G must be connected")
    d = _regular_degree(h, require_connected=True)

    spectral_tol = min(SPECTRAL.tol, tol)
    base = spectral_radius(g, a, spectral_tol)
    product = direct_product(g, h)
    prod_res = spectral_radius(product, a, spectral_tol)

    factor = math.factorial(g.k - 1) * d
    expected = factor * base.rho
    scale = 1.0 + prod_res.rho
    difference = abs(prod_res.rho - expected)
    residual = eig_residual(
        product, TensorKind.A_ALPHA, expected, base.eigvec.tensor_with_ones(h.n), alpha=a
    )

    failures: list[str] = []
    if difference > tol * scale:
        failures.append(f"|rho(GxH) - (k-1)!*d*rho(G)| = {difference:.3e} > {tol * scale:.3e}")
    if residual > tol * scale:
        failures.append(f"u(x)e residual {residual:.3e} > {tol * scale:.3e}")
    return ProductCheck(
        kind="a_alpha",
        alpha=a,
        k=g.k,
        d=d,
        factor=factor,
        source_value=base.rho,
        expected=expected,
        product_value=prod_res.rho,
        difference=difference,
        residual=residual,
        tol=tol,
        passed=not failures,
        failures=failures,
    )


def check_laplacian_transport(
    g: Hypergraph,
    h: Hypergraph,
    lam: float,
    u: KVector | np.ndarray,
    tol: float = BOUNDS.product_tol,
) -> ProductCheck:
    """
    If L(G)u = lam * u^[k-1] and H is d-regular then (k-1)! * d * lam is an eigenvalue of
    L(G x H) with eigenvector u (x) e. Only the transported eigenpair is checked, not that
    it is the Laplacian spectral radius of the product.
    """
    if g.k != h.k:
        raise PreconditionViolated(f"G and H must have equal arity (got {g.k} and {h.k})")
    vec = u if isinstance(u, KVector) else KVector(u, g.k)
    source_residual = eig_residual(g, TensorKind.L, lam, vec)
    if source_residual > tol:
        raise PreconditionViolated(
            f"(lambda={lam}, u) is not an L-eigenpair of G: "
            f"residual {source_residual:.3e} > {tol:.3e}"
        )
    d = _regular_degree(h, require_connected=False)
    factor = math.factorial(g.k - 1) * d
    expected = factor * lam
    residual = eig_residual(direct_product(g, h), TensorKind.L, expected, vec.tensor_with_ones(h.n))
    limit = 10.0 * tol
    failures = [] if residual <= limit else [f"transported residual {residual:.3e} > {limit:.3e}"]
    return ProductCheck(
        kind="laplacian",
        alpha=None,
        k=g.k,
        d=d,
        factor=factor,
        source_value=lam,
        expected=expected,
        product_value=None,
        difference=None,
        residual=residual,
        tol=tol,
        passed=not failures,
        failures=failures,
    )


def laplacian_pair_from_adjacency(
    g: Hypergraph, tol: float = SPECTRAL.tol
) -> tuple[float, KVector]:
    """For connected d'-regular G, (d' - rho_0(G), Perron vector) is an L-eigenpair."""
    regular, d = is_regular(g)
    if not regular or d is None:
        raise PreconditionViolated("G must be regular to derive an L-eigenpair from A")
    res = spectral_radius(g, 0.0, tol)
    return float(d) - res.rho, res.eigvec
