from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SpectralConfig:
    tol: float = 1e-10
    max_iter: int = 100_000
    # Added to the diagonal so the iteration converges on weakly irreducible but imprimitive
    # tensors (alpha = 0 on bipartite-like hypergraphs). Subtracted again on output.
    shift: float = 1.0
    # Log a DEBUG line every this many iterations.
    log_every_n: int = 10_000
    # Multi-start projected gradient ascent used as an independent estimate.
    oracle_starts: int = 32
    oracle_max_steps: int = 4_000
    oracle_min_step: float = 1e-14
    oracle_max_step: float = 10.0
    oracle_armijo: float = 1e-4
    # Stop a start once the tangent gradient is this small (sup norm).
    oracle_grad_tol: float = 1e-10
    oracle_agreement: float = 1e-6


@dataclass(frozen=True)
class SearchConfig:
    independence_cap: int = 24
    chromatic_cap: int = 16
    cut_cap: int = 16


@dataclass(frozen=True)
class BoundsConfig:
    soundness_tol: float = 1e-8
    improvement_tol: float = 1e-12
    product_tol: float = 1e-6


@dataclass(frozen=True)
class GeneratorConfig:
    max_connect_attempts: int = 10_000
    # Above this many candidate k-sets the sampler draws edges one by one instead of
    # enumerating all combinations.
    enumerate_limit: int = 200_000


@dataclass(frozen=True)
class VerifyConfig:
    trials: int = 50
    n_min: int = 4
    n_max: int = 9
    ks: tuple[int, ...] = (3, 4)
    alphas: tuple[float, ...] = (0.0, 0.25, 0.5, 0.75, 0.99)
    # Extra edges drawn above the connectivity minimum, as a fraction of the headroom.
    m_headroom_fraction: float = 0.5
    fuzz_vectors: int = 50
    # Starts for the variational cross-check inside the fuzz suite.
    oracle_starts: int = 2
    oracle_max_steps: int = 500
    random_subsets: int = 3
    # Products above this vertex count are skipped by the transport suite.
    product_max_vertices: int = 40
    regular_max_n: int = 7
    suites: tuple[str, ...] = (
        "soundness",
        "improvement",
        "ordering",
        "product_transport",
        "laplacian_transport",
        "regular_equality",
        "variational_fuzz",
    )


@dataclass(frozen=True)
class CLIConfig:
    threads_env: str = "HYPERALPHA_THREADS"
    max_workers: int = 8
    progress_every_n: int = 10
    progress_min_interval_s: float = 30.0


SPECTRAL = SpectralConfig()
SEARCH = SearchConfig()
BOUNDS = BoundsConfig()
GENERATOR = GeneratorConfig()
VERIFY = VerifyConfig()
CLI = CLIConfig()
