from __future__ import annotations

# -----------------------------------------------------------------------------
# Stable identifiers shared by the library, the CLI and the JSON reports
# -----------------------------------------------------------------------------

SCHEMA_VERSION = "hyperalpha/1"

# Report kinds (top-level "kind" key next to "schema").
KIND_SPECTRAL = "spectral"
KIND_BOUNDS = "bounds"
KIND_VERIFY = "verify"
KIND_PRODUCT = "product"
KIND_INFO = "info"

# Field order of a serialized BoundReport. Golden tests rely on these names.
BOUND_REPORT_FIELDS = (
    "bound",
    "alpha",
    "subset",
    "params",
    "value",
    "rho_lower",
    "rho_upper",
    "slack",
    "holds",
)

SPECTRAL_RESULT_FIELDS = (
    "alpha",
    "rho",
    "lower",
    "upper",
    "residual",
    "iterations",
    "converged",
    "eigvec",
)

# Bound identifiers.
BOUND_AVERAGE_DEGREE = "average_degree"
BOUND_STRONG_SET = "strong_set"
BOUND_SUBSET = "subset"
BOUND_FULL_VERTEX_SET = "full_vertex_set"
BOUND_VERTEX_PAIR = "vertex_pair"
BOUND_MAX_MIN_VERTEX_PAIR = "max_min_vertex_pair"
BOUND_WEAK_INDEPENDENCE = "weak_independence"
BOUND_CHROMATIC = "chromatic"
BOUND_CLIQUE_COMPLEMENT = "clique_complement"
BOUND_VERTEX_CUT = "vertex_cut"
BOUND_SQUARE_SUBSET = "square_subset"
BOUND_KPOWER_SUBSET = "kpower_subset"
BOUND_MAX_MIN_PAIR = "max_min_pair"
BOUND_POWER_MEAN = "power_mean"
BOUND_SIGNLESS_LAPLACIAN = "signless_laplacian"

# Bounds whose value must not fall below km/n (refinements of the average-degree bound).
REFINED_BOUNDS = (
    BOUND_STRONG_SET,
    BOUND_SUBSET,
    BOUND_MAX_MIN_PAIR,
    BOUND_KPOWER_SUBSET,
    BOUND_SQUARE_SUBSET,
    BOUND_FULL_VERTEX_SET,
    BOUND_WEAK_INDEPENDENCE,
    BOUND_CLIQUE_COMPLEMENT,
    BOUND_VERTEX_CUT,
    BOUND_VERTEX_PAIR,
    BOUND_MAX_MIN_VERTEX_PAIR,
)

# Verify suites.
SUITE_SOUNDNESS = "soundness"
SUITE_IMPROVEMENT = "improvement"
SUITE_ORDERING = "ordering"
SUITE_PRODUCT = "product_transport"
SUITE_LAPLACIAN = "laplacian_transport"
SUITE_REGULAR = "regular_equality"
SUITE_FUZZ = "variational_fuzz"

ALL_SUITES = (
    SUITE_SOUNDNESS,
    SUITE_IMPROVEMENT,
    SUITE_ORDERING,
    SUITE_PRODUCT,
    SUITE_LAPLACIAN,
    SUITE_REGULAR,
    SUITE_FUZZ,
)

# Exit codes.
EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_USAGE = 2
