from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st


def _g1():
    from hyperalpha.hypergraph import build

    return build(4, 3, [[1, 2, 3], [1, 2, 4]])


def test_build_canonicalizes_edges_and_degrees() -> None:
    from hyperalpha.hypergraph import build

    g = build(4, 3, [[4, 2, 1], [3, 2, 1]])
    assert g.edges == ((1, 2, 3), (1, 2, 4))
    assert g.m == 2
    assert g.degrees.tolist() == [2, 2, 1, 1]
    assert g.degree(3) == 1
    assert g.has_edge([2, 4, 1])
    assert not g.has_edge([2, 3, 4])


@pytest.mark.parametrize(
    "edges, error",
    [
        ([[1, 2]], "EdgeWrongArity"),
        ([[1, 1, 2]], "EdgeWrongArity"),
        ([[1, 2, 5]], "VertexOutOfRange"),
        ([[0, 1, 2]], "VertexOutOfRange"),
        ([[1, 2, 3], [3, 2, 1]], "DuplicateEdge"),
    ],
)
def test_build_rejects_malformed_edges(edges, error: str) -> None:
    from hyperalpha import errors
    from hyperalpha.hypergraph import build

    with pytest.raises(getattr(errors, error)):
        build(4, 3, edges)


def test_build_rejects_bad_dimensions() -> None:
    from hyperalpha.errors import InvalidDimensions
    from hyperalpha.hypergraph import build, complete

    with pytest.raises(InvalidDimensions):
        build(0, 3, [])
    with pytest.raises(InvalidDimensions):
        build(4, 1, [])
    with pytest.raises(InvalidDimensions):
        complete(2, 3)


def test_errors_are_value_errors() -> None:
    from hyperalpha.errors import HyperalphaError, KTooSmall, PreconditionViolated

    assert issubclass(HyperalphaError, ValueError)
    assert issubclass(KTooSmall, PreconditionViolated)


def test_complete_and_complement() -> None:
    from hyperalpha.hypergraph import complement, complete, empty

    k53 = complete(5, 3)
    assert k53.m == 10
    assert set(k53.degrees.tolist()) == {6}
    assert complement(k53).m == 0
    assert complement(empty(5, 3)).edges == k53.edges

    comp = complement(_g1())
    assert comp.edges == ((1, 3, 4), (2, 3, 4))


def test_degree_profile_and_regularity() -> None:
    from fractions import Fraction

    from hyperalpha.hypergraph import complete, degree_profile, is_regular

    prof = degree_profile(_g1())
    assert prof.max_degree == 2
    assert prof.min_degree == 1
    assert prof.average_degree == Fraction(3, 2)
    assert not prof.is_regular
    assert is_regular(_g1()) == (False, None)
    assert is_regular(complete(6, 4)) == (True, 10)


def test_components_and_adjacency() -> None:
    from hyperalpha.hypergraph import adjacent, build, components, disjoint_union, is_connected

    g = _g1()
    assert is_connected(g) == (True, [[1, 2, 3, 4]])
    assert adjacent(g, 3, 1)
    assert not adjacent(g, 3, 4)
    assert not adjacent(g, 2, 2)

    two = disjoint_union(g, build(3, 3, [[1, 2, 3]]))
    assert two.n == 7
    assert two.edges[-1] == (5, 6, 7)
    assert components(two) == [[1, 2, 3, 4], [5, 6, 7]]

    lonely = build(5, 3, [[1, 2, 3]])
    assert components(lonely) == [[1, 2, 3], [4], [5]]


def test_disjoint_union_needs_equal_arity() -> None:
    from hyperalpha.errors import ArityMismatch
    from hyperalpha.hypergraph import complete, disjoint_union

    with pytest.raises(ArityMismatch):
        disjoint_union(complete(4, 3), complete(4, 4))


def test_remove_vertices_relabels_in_order() -> None:
    from hyperalpha.hypergraph import induced_on, remove_vertices

    g = _g1()
    rest = remove_vertices(g, [3])
    assert rest.n == 3
    assert rest.edges == ((1, 2, 3),)
    assert remove_vertices(g, [1]).m == 0
    assert induced_on(g, [1, 2, 4]).edges == ((1, 2, 3),)


def test_random_connected_is_deterministic_and_connected() -> None:
    from hyperalpha.hypergraph import is_connected, random_connected

    a = random_connected(8, 3, 6, seed=11)
    b = random_connected(8, 3, 6, seed=11)
    assert a == b
    assert a.m == 6
    assert is_connected(a)[0]


def test_random_connected_rejects_infeasible_counts() -> None:
    from hyperalpha.errors import InfeasibleRequest
    from hyperalpha.hypergraph import complete, random_connected

    with pytest.raises(InfeasibleRequest):
        random_connected(9, 3, 3, seed=0)
    with pytest.raises(InfeasibleRequest):
        random_connected(5, 3, 11, seed=0)
    assert random_connected(5, 3, 10, seed=0) == complete(5, 3)


@st.composite
def _triple_systems(draw):
    from hyperalpha.hypergraph import build

    n = draw(st.integers(min_value=3, max_value=6))
    pool = list(itertools.combinations(range(1, n + 1), 3))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return build(n, 3, edges)


@settings(max_examples=50, deadline=None, derandomize=True)
@given(_triple_systems())
def test_complement_is_an_involution(g) -> None:
    from hyperalpha.hypergraph import complement

    c = complement(g)
    assert c.m + g.m == math.comb(g.n, 3)
    assert not set(c.edges) & set(g.edges)
    assert complement(c).edges == g.edges


def _reachability(g) -> np.ndarray:
    """Transitive closure of the vertex-sharing relation, by repeated boolean squaring."""
    reach = np.eye(g.n, dtype=bool)
    for e in g.edges:
        for u in e:
            for v in e:
                reach[u - 1, v - 1] = True
    while True:
        grown = (reach.astype(int) @ reach.astype(int)) > 0
        if (grown == reach).all():
            return reach
        reach = grown


@settings(max_examples=80, deadline=None, derandomize=True)
@given(st.data())
def test_is_connected_matches_the_transitive_closure(data) -> None:
    from hyperalpha.hypergraph import build, components, is_connected

    n = data.draw(st.integers(min_value=3, max_value=6))
    pool = list(itertools.combinations(range(1, n + 1), 3))
    edges = data.draw(st.lists(st.sampled_from(pool), unique=True, max_size=4))
    g = build(n, 3, edges)
    reach = _reachability(g)

    assert is_connected(g)[0] == bool(reach.all())
    classes = {tuple(int(v) + 1 for v in np.flatnonzero(row)) for row in reach}
    assert sorted(tuple(sorted(p)) for p in components(g)) == sorted(classes)


@pytest.mark.parametrize("n, k, cycles", [(5, 3, 1), (5, 3, 2), (7, 3, 2), (6, 4, 1), (8, 4, 3)])
def test_random_regular_is_connected_regular_and_seeded(n: int, k: int, cycles: int) -> None:
    from hyperalpha.hypergraph import is_connected, is_regular, random_regular

    g = random_regular(n, k, cycles, seed=4)
    assert g.m == cycles * n
    assert is_regular(g) == (True, cycles * k)
    assert is_connected(g)[0]
    assert random_regular(n, k, cycles, seed=4).edges == g.edges


def test_random_regular_rejects_impossible_requests() -> None:
    from hyperalpha.errors import InfeasibleRequest
    from hyperalpha.hypergraph import random_regular

    with pytest.raises(InfeasibleRequest):
        random_regular(3, 3, 1, seed=0)
    with pytest.raises(InfeasibleRequest):
        random_regular(5, 3, 3, seed=0)
    with pytest.raises(InfeasibleRequest):
        random_regular(6, 3, 0, seed=0)
