"""
k-uniform hypergraphs: construction, structural queries and the direct product.

Vertices are 1-based in every public signature and 0-based in the cached numpy arrays.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from .config import GENERATOR
from .errors import (
    ArityMismatch,
    DuplicateEdge,
    EdgeWrongArity,
    InfeasibleRequest,
    InvalidDimensions,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """
    Immutable k-uniform hypergraph on vertices 1..n.

    `edges` holds each edge sorted ascending and the edge list sorted lexicographically.
    Instances are normally created through `build` (validated) or the constructors in this
    module, which produce canonical edge lists by construction.
    """

    n: int
    k: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """(m, k) array of 0-based vertex indices."""
        if not self.edges:
            return np.zeros((0, self.k), dtype=np.int64)
        arr = np.asarray(self.edges, dtype=np.int64) - 1
        arr.setflags(write=False)
        return arr

    @cached_property
    def degrees(self) -> np.ndarray:
        out = np.bincount(self.edge_array.ravel(), minlength=self.n).astype(np.int64)
        out.setflags(write=False)
        return out

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex (0-based) tuple of edge indices containing that vertex."""
        buckets: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                buckets[v - 1].append(idx)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return int(self.degrees[v - 1])

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return tuple(sorted(vertices)) in self.edge_set

    def vertices(self) -> range:
        return range(1, self.n + 1)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    average_degree: Fraction

    @property
    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree


# ----------------------------
# Construction
# ----------------------------


def _canonical(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(edges))


def build(n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and canonicalize an edge list into a Hypergraph."""
    if n < 1:
        raise InvalidDimensions(f"n must be >= 1 (got {n})")
    if k < 2:
        raise InvalidDimensions(f"k must be >= 2 (got {k})")

    seen: set[Edge] = set()
    out: list[Edge] = []
    for pos, raw in enumerate(edges):
        verts = [int(v) for v in raw]
        if len(verts) != k or len(set(verts)) != k:
            raise EdgeWrongArity(f"edge #{pos + 1} {verts} is not a set of {k} distinct vertices")
        bad = [v for v in verts if v < 1 or v > n]
        if bad:
            raise VertexOutOfRange(f"edge #{pos + 1} {verts} has vertices outside 1..{n}: {bad}")
        e = tuple(sorted(verts))
        if e in seen:
            raise DuplicateEdge(f"edge #{pos + 1} {list(e)} appears more than once")
        seen.add(e)
        out.append(e)
    return Hypergraph(n=n, k=k, edges=_canonical(out))


def empty(n: int, k: int) -> Hypergraph:
    return build(n, k, [])


def complete(n: int, k: int) -> Hypergraph:
    if k < 2:
        raise InvalidDimensions(f"k must be >= 2 (got {k})")
    if n < k:
        raise InvalidDimensions(f"complete hypergraph needs n >= k (got n={n}, k={k})")
    return Hypergraph(n=n, k=k, edges=tuple(itertools.combinations(range(1, n + 1), k)))


def complement(g: Hypergraph) -> Hypergraph:
    edges = tuple(e for e in itertools.combinations(range(1, g.n + 1), g.k) if e not in g.edge_set)
    return Hypergraph(n=g.n, k=g.k, edges=edges)


def disjoint_union(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Vertices of `h` are shifted by `g.n`."""
    if g.k != h.k:
        raise ArityMismatch(f"cannot join a {g.k}-uniform and a {h.k}-uniform hypergraph")
    shifted = [tuple(v + g.n for v in e) for e in h.edges]
    return Hypergraph(n=g.n + h.n, k=g.k, edges=_canonical(list(g.edges) + shifted))


def remove_vertices(g: Hypergraph, removed: Iterable[int]) -> Hypergraph:
    """
    Delete `removed` and every edge touching it; remaining vertices are relabelled
    1..n-|removed| keeping their relative order.
    """
    gone = set(int(v) for v in removed)
    keep = [v for v in g.vertices() if v not in gone]
    if not keep:
        raise InvalidDimensions("cannot remove every vertex")
    relabel = {v: i + 1 for i, v in enumerate(keep)}
    edges = [tuple(relabel[v] for v in e) for e in g.edges if not gone.intersection(e)]
    return Hypergraph(n=len(keep), k=g.k, edges=_canonical(edges))


def induced_on(g: Hypergraph, vertices: Sequence[int]) -> Hypergraph:
    """Sub-hypergraph induced on `vertices` (relabelled in the given order)."""
    return remove_vertices(g, set(g.vertices()) - set(vertices))


def product_index(i: int, j: int, n_g: int) -> int:
    """1-based flattened index of product vertex (i, j)."""
    return (j - 1) * n_g + i


def direct_product(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """
    Direct product G x H: every edge e of G is paired with every edge f of H under all k!
    alignments of e's vertices against f's sorted vertices.
    """
    if g.k != h.k:
        raise ArityMismatch(f"direct product needs equal arity (got {g.k} and {h.k})")
    k = g.k
    edges: set[Edge] = set()
    for e in g.edges:
        for f in h.edges:
            for perm in itertools.permutations(e):
                edges.add(tuple(sorted(product_index(i, j, g.n) for i, j in zip(perm, f))))
    return Hypergraph(n=g.n * h.n, k=k, edges=_canonical(edges))


# ----------------------------
# Structural queries
# ----------------------------


def degree_profile(g: Hypergraph) -> DegreeProfile:
    degs = tuple(int(d) for d in g.degrees)
    return DegreeProfile(
        degrees=degs,
        max_degree=max(degs),
        min_degree=min(degs),
        average_degree=Fraction(g.k * g.m, g.n),
    )


def is_regular(g: Hypergraph) -> tuple[bool, int | None]:
    prof = degree_profile(g)
    if prof.is_regular:
        return True, prof.max_degree
    return False, None


def two_section(g: Hypergraph) -> nx.Graph:
    """Graph on 1..n joining consecutive vertices of every edge (same components as G)."""
    out = nx.Graph()
    out.add_nodes_from(g.vertices())
    for e in g.edges:
        out.add_edges_from(zip(e, e[1:]))
    return out


def components(g: Hypergraph) -> list[list[int]]:
    """Vertex partition into components, each sorted, ordered by smallest member."""
    parts = [sorted(c) for c in nx.connected_components(two_section(g))]
    return sorted(parts, key=lambda c: c[0])


def is_connected(g: Hypergraph) -> tuple[bool, list[list[int]]]:
    """A single-vertex hypergraph counts as connected."""
    parts = components(g)
    return len(parts) == 1, parts


def adjacent(g: Hypergraph, i: int, j: int) -> bool:
    if i == j:
        return False
    return any(j in g.edges[idx] for idx in g.incidence[i - 1])


# ----------------------------
# Random generation
# ----------------------------


def min_connected_edges(n: int, k: int) -> int:
    return math.ceil((n - 1) / (k - 1))


def _sample_edge_set(n: int, k: int, m: int, rng: np.random.Generator) -> list[Edge]:
    total = math.comb(n, k)
    if total <= GENERATOR.enumerate_limit:
        pool = list(itertools.combinations(range(1, n + 1), k))
        picks = rng.choice(total, size=m, replace=False)
        return [pool[int(i)] for i in picks]

    chosen: set[Edge] = set()
    out: list[Edge] = []
    while len(out) < m:
        e = tuple(sorted(int(v) + 1 for v in rng.choice(n, size=k, replace=False)))
        if e in chosen:
            continue
        chosen.add(e)
        out.append(e)
    return out


def random_connected(n: int, k: int, m: int, seed: int) -> Hypergraph:
    """
    Uniform draw of m distinct k-sets, redrawn until the result is connected.
    Deterministic for a given seed.
    """
    if k < 2 or n < k:
        raise InfeasibleRequest(f"need 2 <= k <= n (got n={n}, k={k})")
    lo = min_connected_edges(n, k)
    hi = math.comb(n, k)
    if m < lo:
        raise InfeasibleRequest(f"{m} edges cannot connect {n} vertices with k={k} (need >= {lo})")
    if m > hi:
        raise InfeasibleRequest(
            f"only {hi} distinct {k}-sets exist on {n} vertices (asked for {m})"
        )
    if m == hi:
        return complete(n, k)

    rng = np.random.default_rng(seed)
    for attempt in range(1, GENERATOR.max_connect_attempts + 1):
        g = Hypergraph(n=n, k=k, edges=_canonical(_sample_edge_set(n, k, m, rng)))
        if is_connected(g)[0]:
            if attempt > 1:
                logging.debug(f"[GEN] connected draw after {attempt} attempts (n={n} k={k} m={m})")
            return g
    raise InfeasibleRequest(
        f"no connected draw after {GENERATOR.max_connect_attempts} attempts (n={n} k={k} m={m})"
    )


def _tight_cycle(order: Sequence[int], k: int) -> list[Edge]:
    n = len(order)
    return [tuple(sorted(order[(i + t) % n] for t in range(k))) for i in range(n)]


def random_regular(n: int, k: int, cycles: int, seed: int) -> Hypergraph:
    """
    Connected (cycles * k)-regular hypergraph: the edge-disjoint union of `cycles` tight
    cycles, each laid along a random vertex ordering. Deterministic for a given seed.
    """
    if k < 2 or n <= k:
        raise InfeasibleRequest(f"tight cycles need 2 <= k < n (got n={n}, k={k})")
    if cycles < 1:
        raise InfeasibleRequest(f"cycles must be >= 1 (got {cycles})")
    if cycles * n > math.comb(n, k):
        raise InfeasibleRequest(
            f"{cycles} tight cycles need {cycles * n} edges; only {math.comb(n, k)} "
            f"{k}-sets exist on {n} vertices"
        )

    rng = np.random.default_rng(seed)
    for attempt in range(1, GENERATOR.max_connect_attempts + 1):
        edges: set[Edge] = set()
        for _ in range(cycles):
            order = [int(v) + 1 for v in rng.permutation(n)]
            cycle = _tight_cycle(order, k)
            if edges.intersection(cycle):
                break
            edges.update(cycle)
        else:
            if attempt > 1:
                logging.debug(f"[GEN] regular draw after {attempt} attempts (n={n} k={k})")
            return Hypergraph(n=n, k=k, edges=_canonical(edges))
    raise InfeasibleRequest(
        f"no edge-disjoint union of {cycles} tight cycles after "
        f"{GENERATOR.max_connect_attempts} attempts (n={n} k={k})"
    )
