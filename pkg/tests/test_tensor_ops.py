from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st


def _g1():
    from hyperalpha.hypergraph import build

    return build(4, 3, [[1, 2, 3], [1, 2, 4]])


def _dense_adjacency_apply(g, x: np.ndarray) -> np.ndarray:
    """Reference contraction over the materialized order-k tensor (small n only)."""
    import itertools

    k = g.k
    tensor = np.zeros((g.n,) * k)
    for e in g.edges:
        for perm in itertools.permutations(v - 1 for v in e):
            tensor[perm] = 1.0 / math.factorial(k - 1)
    out = tensor
    for _ in range(k - 1):
        out = out @ x
    return out


def test_adjacency_of_all_ones_is_the_degree_vector() -> None:
    from hyperalpha.tensor_ops import apply_adjacency

    out = apply_adjacency(_g1(), np.ones(4))
    np.testing.assert_allclose(out.entries, [2, 2, 1, 1])


def test_adjacency_contraction_by_hand() -> None:
    from hyperalpha.tensor_ops import apply_adjacency

    out = apply_adjacency(_g1(), [1.0, 2.0, 3.0, 4.0])
    # vertex 1: x2*x3 + x2*x4
    assert out.entries[0] == pytest.approx(14.0)
    assert out.entries[2] == pytest.approx(2.0)


def test_degree_tensor_scales_powers() -> None:
    from hyperalpha.tensor_ops import apply_degree

    out = apply_degree(_g1(), [1.0, 2.0, 3.0, 4.0])
    np.testing.assert_allclose(out.entries, [2.0, 8.0, 9.0, 16.0])


def test_a_alpha_and_laplacians_on_ones() -> None:
    from hyperalpha.tensor_ops import TensorKind, apply_a_alpha, apply_tensor

    g = _g1()
    ones = np.ones(4)
    np.testing.assert_allclose(apply_a_alpha(g, 0.5, ones).entries, [2, 2, 1, 1])
    np.testing.assert_allclose(apply_tensor(g, TensorKind.L, ones).entries, 0.0)
    np.testing.assert_allclose(apply_tensor(g, "Q", ones).entries, [4, 4, 2, 2])


def test_zero_entries_use_the_exact_leave_one_out_path() -> None:
    from hyperalpha.tensor_ops import apply_adjacency

    out = apply_adjacency(_g1(), [1.0, 2.0, 0.0, 4.0])
    np.testing.assert_allclose(out.entries, [8.0, 4.0, 2.0, 2.0])


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.lists(st.floats(min_value=-3, max_value=3), min_size=5, max_size=5))
def test_edge_list_kernel_matches_dense_tensor(values: list[float]) -> None:
    from hyperalpha.hypergraph import build
    from hyperalpha.tensor_ops import apply_adjacency

    g = build(5, 3, [[1, 2, 3], [1, 4, 5], [2, 3, 5], [3, 4, 5]])
    x = np.array(values)
    np.testing.assert_allclose(
        apply_adjacency(g, x).entries, _dense_adjacency_apply(g, x), rtol=1e-9, atol=1e-9
    )


def test_rayleigh_quotients() -> None:
    from hyperalpha.tensor_ops import KVector, rayleigh

    g = _g1()
    u = KVector.uniform_unit(4, 3)
    assert u.is_unit()
    assert rayleigh(g, 0.0, u) == pytest.approx(1.5)
    assert rayleigh(g, 0.7, u, compensated=True) == pytest.approx(1.5)

    x = np.array([1.0, 1.0, 1.0, 0.0]) / 3 ** (1 / 3)
    assert rayleigh(g, 0.0, x) == pytest.approx(1.0)


def test_rayleigh_equals_x_dot_a_alpha_x() -> None:
    from hyperalpha.tensor_ops import apply_a_alpha, rayleigh

    g = _g1()
    x = np.array([0.3, 0.5, 0.2, 0.9])
    assert rayleigh(g, 0.4, x) == pytest.approx(float(x @ apply_a_alpha(g, 0.4, x).entries))


def test_eig_residual() -> None:
    from hyperalpha.hypergraph import complete
    from hyperalpha.tensor_ops import KVector, TensorKind, eig_residual

    g = _g1()
    assert eig_residual(g, TensorKind.A, 1.0, np.ones(4)) == pytest.approx(1.0)
    assert eig_residual(g, TensorKind.L, 0.0, np.ones(4)) == 0.0
    k53 = complete(5, 3)
    u = KVector.uniform_unit(5, 3)
    assert eig_residual(k53, TensorKind.A_ALPHA, 6.0, u, alpha=0.3) < 1e-12


def test_alpha_range_and_vector_checks() -> None:
    from hyperalpha.errors import DimensionMismatch, PreconditionViolated, ZeroVector
    from hyperalpha.tensor_ops import KVector, TensorKind, apply_adjacency, apply_tensor, as_alpha

    assert as_alpha(0.0).value == 0.0
    for bad in (-0.1, 1.0, float("nan")):
        with pytest.raises(PreconditionViolated):
            as_alpha(bad)
    with pytest.raises(DimensionMismatch):
        apply_adjacency(_g1(), np.ones(3))
    with pytest.raises(ZeroVector):
        KVector(np.zeros(4), 3).normalized()
    with pytest.raises(PreconditionViolated):
        apply_tensor(_g1(), TensorKind.A_ALPHA, np.ones(4))


def test_kvector_norms() -> None:
    from hyperalpha.tensor_ops import KVector

    v = KVector([3.0, 4.0], 2)
    assert v.k_norm == pytest.approx(5.0)
    assert v.sup_norm == 4.0
    assert v.normalized().is_unit()
    assert KVector([1.0, -2.0], 3).power(2).tolist() == [1.0, 4.0]


@settings(max_examples=40, deadline=None, derandomize=True)
@given(
    st.lists(st.floats(min_value=0.0, max_value=2.0), min_size=4, max_size=4),
    st.floats(min_value=0.1, max_value=5.0),
    st.sampled_from([0.0, 0.3, 0.9]),
)
def test_a_alpha_apply_is_homogeneous(values: list[float], t: float, alpha: float) -> None:
    from hyperalpha.tensor_ops import apply_a_alpha

    g = _g1()
    x = np.array(values)
    scaled = apply_a_alpha(g, alpha, t * x).entries
    np.testing.assert_allclose(
        scaled, t ** (g.k - 1) * apply_a_alpha(g, alpha, x).entries, rtol=1e-9, atol=1e-12
    )


def test_subnormal_entries_do_not_break_leave_one_out_products() -> None:
    from hyperalpha.tensor_ops import apply_adjacency

    out = apply_adjacency(_g1(), [1.0, 1.5, 5e-324, 0.0])
    # vertices 3 and 4 see x1*x2 regardless of their own tiny or zero value
    assert out.entries[2] == 1.5
    assert out.entries[3] == 1.5
    assert out.entries[0] == pytest.approx(0.0, abs=1e-300)


def test_laplacian_identities_on_arbitrary_vectors() -> None:
    from hyperalpha.hypergraph import random_connected
    from hyperalpha.tensor_ops import (
        apply_a_alpha,
        apply_degree,
        apply_laplacian,
        apply_signless_laplacian,
    )

    rng = np.random.default_rng(5)
    for seed, k in ((1, 3), (2, 4)):
        g = random_connected(7, k, 9, seed)
        x = rng.normal(size=g.n)
        q = apply_signless_laplacian(g, x).entries
        np.testing.assert_allclose(2 * apply_a_alpha(g, 0.5, x).entries, q, rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(
            apply_laplacian(g, x).entries + q,
            2 * apply_degree(g, x).entries,
            rtol=1e-12,
            atol=1e-12,
        )
