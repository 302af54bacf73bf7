from __future__ import annotations

import math

import numpy as np
import pytest


def _g1():
    from hyperalpha.hypergraph import build

    return build(4, 3, [[1, 2, 3], [1, 2, 4]])


@pytest.mark.parametrize("n, k", [(5, 3), (6, 3), (6, 4), (3, 3)])
@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.5, 0.7])
def test_complete_hypergraphs_have_rho_equal_to_the_degree(n: int, k: int, alpha: float) -> None:
    from hyperalpha.hypergraph import complete
    from hyperalpha.spectral import spectral_radius

    res = spectral_radius(complete(n, k), alpha)
    expected = math.comb(n - 1, k - 1)
    assert res.converged
    assert res.lower <= expected + 1e-12
    assert res.upper >= expected - 1e-12
    assert res.rho == pytest.approx(expected, abs=1e-9)
    assert res.residual < 1e-9


def test_g1_adjacency_radius_is_the_cube_root_of_four() -> None:
    from hyperalpha.spectral import spectral_radius

    res = spectral_radius(_g1(), 0.0)
    assert res.rho == pytest.approx(4 ** (1 / 3), abs=1e-9)
    assert res.width <= 1e-10
    assert res.eigvec.is_positive()
    assert res.eigvec.is_unit(1e-9)
    # symmetric vertices share entries
    e = res.eigvec.entries
    assert e[0] == pytest.approx(e[1])
    assert e[2] == pytest.approx(e[3])


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.9])
def test_bracket_contains_the_rayleigh_quotient_of_the_eigvec(alpha: float) -> None:
    from hyperalpha.spectral import spectral_radius
    from hyperalpha.tensor_ops import rayleigh

    g = _g1()
    res = spectral_radius(g, alpha)
    r = rayleigh(g, alpha, res.eigvec.normalized())
    assert res.lower - 1e-9 <= r <= res.upper + 1e-9


def test_rho_lies_between_average_and_max_degree() -> None:
    from hyperalpha.spectral import spectral_radius

    g = _g1()
    for a in (0.0, 0.2, 0.4, 0.6, 0.8):
        rho = spectral_radius(g, a).rho
        assert 1.5 - 1e-12 <= rho <= 2.0 + 1e-12


def test_variational_estimate_agrees_with_the_power_iteration() -> None:
    from hyperalpha.spectral import spectral_radius, variational_estimate

    assert variational_estimate(_g1(), 0.0) == pytest.approx(4 ** (1 / 3), abs=1e-9)
    for alpha in (0.3, 0.7):
        rho = spectral_radius(_g1(), alpha).rho
        assert variational_estimate(_g1(), alpha, starts=4) == pytest.approx(rho, abs=1e-9)


@pytest.mark.parametrize("m, seed", [(0, 0), (3, 11), (4, 12), (6, 13), (8, 14)])
@pytest.mark.parametrize("alpha", [0.0, 0.5, 0.9])
def test_variational_estimate_matches_random_instances(m: int, seed: int, alpha: float) -> None:
    from hyperalpha.config import SPECTRAL
    from hyperalpha.hypergraph import random_connected
    from hyperalpha.spectral import spectral_radius, variational_estimate

    g = _g1() if m == 0 else random_connected(6, 3, m, seed)
    res = spectral_radius(g, alpha)
    est = variational_estimate(g, alpha, starts=8, seed=seed)
    assert est <= res.upper + 1e-9
    assert abs(est - res.rho) <= SPECTRAL.oracle_agreement


def test_disconnected_input_needs_spectral_radius_any() -> None:
    from hyperalpha.errors import NotConnected
    from hyperalpha.hypergraph import complete, disjoint_union
    from hyperalpha.spectral import (
        combine_components,
        spectral_by_component,
        spectral_radius,
        spectral_radius_any,
    )

    g = disjoint_union(complete(3, 3), complete(4, 3))
    with pytest.raises(NotConnected):
        spectral_radius(g, 0.0)

    parts = spectral_by_component(g, 0.0)
    assert [p.vertices for p in parts] == [[1, 2, 3], [4, 5, 6, 7]]
    assert parts[0].result.rho == pytest.approx(1.0, abs=1e-9)

    res = spectral_radius_any(g, 0.0)
    assert res.rho == pytest.approx(3.0, abs=1e-9)
    np.testing.assert_allclose(res.eigvec.entries[:3], 0.0)
    assert np.all(res.eigvec.entries[3:] > 0)

    combined = combine_components(g, 0.0, parts)
    assert combined.to_dict() == res.to_dict()


def test_edgeless_and_isolated_vertices() -> None:
    from hyperalpha.hypergraph import build, empty
    from hyperalpha.spectral import spectral_radius, spectral_radius_any

    res = spectral_radius_any(empty(4, 3), 0.5)
    assert res.rho == 0.0
    assert res.converged

    one = spectral_radius(empty(1, 3), 0.2)
    assert one.rho == 0.0

    padded = spectral_radius_any(build(5, 3, [[1, 2, 3]]), 0.0)
    assert padded.rho == pytest.approx(1.0, abs=1e-9)


def test_unconverged_runs_report_or_raise() -> None:
    from hyperalpha.errors import NoConvergence
    from hyperalpha.spectral import spectral_radius

    g = _g1()
    res = spectral_radius(g, 0.0, tol=1e-14, max_iter=3)
    assert not res.converged
    assert res.iterations == 3
    assert res.lower <= 4 ** (1 / 3) <= res.upper

    with pytest.raises(NoConvergence) as exc:
        spectral_radius(g, 0.0, tol=1e-14, max_iter=3, strict=True)
    assert exc.value.result is not None
    assert not exc.value.result.converged


def test_invalid_parameters() -> None:
    from hyperalpha.errors import PreconditionViolated
    from hyperalpha.spectral import spectral_radius

    with pytest.raises(PreconditionViolated):
        spectral_radius(_g1(), 1.0)
    with pytest.raises(PreconditionViolated):
        spectral_radius(_g1(), 0.0, tol=0.0)
    with pytest.raises(PreconditionViolated):
        spectral_radius(_g1(), 0.0, max_iter=0)


def test_to_dict_fields() -> None:
    from hyperalpha import schema
    from hyperalpha.spectral import spectral_radius

    row = spectral_radius(_g1(), 0.25).to_dict()
    assert set(schema.SPECTRAL_RESULT_FIELDS) <= set(row)
    assert len(row["eigvec"]) == 4
    assert "eigvec" not in spectral_radius(_g1(), 0.25).to_dict(include_eigvec=False)


@pytest.mark.slow
def test_random_unit_vectors_never_beat_the_upper_bracket() -> None:
    from hyperalpha.hypergraph import min_connected_edges, random_connected
    from hyperalpha.spectral import spectral_radius
    from hyperalpha.tensor_ops import rayleigh

    rng = np.random.default_rng(99)
    for seed in range(10):
        n, k = 5 + seed % 4, 3 + seed % 2
        g = random_connected(n, k, min_connected_edges(n, k) + seed, seed)
        for alpha in (0.0, 0.5, 0.9):
            upper = spectral_radius(g, alpha).upper
            for _ in range(1000):
                x = rng.random(g.n)
                x /= np.sum(x**k) ** (1 / k)
                assert rayleigh(g, alpha, x) <= upper + 1e-10
