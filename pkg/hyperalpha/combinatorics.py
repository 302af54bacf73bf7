"""
Exact small-instance solvers for the vertex subsets that parameterize the degree bounds.

Maximum searches are include-first depth-first branch and bound in vertex order, pruning
a branch only when it cannot strictly beat the incumbent. The first maximum found is
therefore the lexicographically smallest one.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

import networkx as nx

from .config import SEARCH
from .errors import InvalidDimensions, NoCutExists, NotConnected, PreconditionViolated, TooLarge
from .hypergraph import Hypergraph, complement, is_connected, remove_vertices


class SubsetKind(str, Enum):
    ARBITRARY = "arbitrary"
    STRONG_INDEPENDENT = "strong_independent"
    WEAK_INDEPENDENT = "weak_independent"
    CLIQUE = "clique"
    VERTEX_CUT = "vertex_cut"


@dataclass(frozen=True)
class VertexSubset:
    """
    Sorted vertex ids tagged with the structure they form.

    Build through `VertexSubset.of`, which checks the kind's predicate against a
    hypergraph. `optimal=False` marks heuristic output.
    """

    members: tuple[int, ...]
    kind: SubsetKind = SubsetKind.ARBITRARY
    optimal: bool = True

    def __post_init__(self) -> None:
        if list(self.members) != sorted(set(self.members)):
            raise PreconditionViolated(f"members must be sorted and distinct: {list(self.members)}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @classmethod
    def of(
        cls,
        g: Hypergraph,
        members: Iterable[int],
        kind: SubsetKind | str = SubsetKind.ARBITRARY,
        *,
        optimal: bool = True,
        allow_empty: bool = False,
    ) -> VertexSubset:
        kind = SubsetKind(kind)
        verts = tuple(sorted(set(int(v) for v in members)))
        if not verts and not allow_empty:
            raise PreconditionViolated("vertex subset must be nonempty")
        bad = [v for v in verts if v < 1 or v > g.n]
        if bad:
            raise PreconditionViolated(f"vertices outside 1..{g.n}: {bad}")
        check = _PREDICATES.get(kind)
        if check is not None and not check(g, verts):
            raise PreconditionViolated(f"{list(verts)} is not a {kind.value.replace('_', ' ')} set")
        return cls(members=verts, kind=kind, optimal=optimal)

    def to_list(self) -> list[int]:
        return list(self.members)


def _check_cap(g: Hypergraph, cap: int, what: str) -> None:
    if g.n > cap:
        raise TooLarge(f"{what}: n={g.n} exceeds the exact-search cap {cap}")


# ----------------------------
# Predicates
# ----------------------------


def is_strong_independent(g: Hypergraph, subset: Iterable[int]) -> bool:
    s = set(subset)
    return all(len(s.intersection(e)) <= 1 for e in g.edges)


def is_weak_independent(g: Hypergraph, subset: Iterable[int]) -> bool:
    s = set(subset)
    return not any(s.issuperset(e) for e in g.edges)


def is_clique(g: Hypergraph, subset: Iterable[int]) -> bool:
    """Every k-subset of S is an edge; vacuously true when |S| < k."""
    s = sorted(set(subset))
    return all(e in g.edge_set for e in itertools.combinations(s, g.k))


def is_vertex_cut(g: Hypergraph, subset: Iterable[int]) -> bool:
    """G - S is disconnected; a single remaining vertex counts as connected."""
    s = set(subset)
    if not s or len(s) >= g.n:
        return False
    return not is_connected(remove_vertices(g, s))[0]


_PREDICATES: dict[SubsetKind, Callable[[Hypergraph, tuple[int, ...]], bool]] = {
    SubsetKind.STRONG_INDEPENDENT: is_strong_independent,
    SubsetKind.WEAK_INDEPENDENT: is_weak_independent,
    SubsetKind.CLIQUE: is_clique,
    SubsetKind.VERTEX_CUT: is_vertex_cut,
}


def shadow_graph(g: Hypergraph) -> nx.Graph:
    """Two vertices are joined iff some edge contains both."""
    out = nx.Graph()
    out.add_nodes_from(g.vertices())
    for e in g.edges:
        out.add_edges_from(itertools.combinations(e, 2))
    return out


# ----------------------------
# Independent sets
# ----------------------------


def _max_strong(g: Hypergraph) -> tuple[int, ...]:
    shadow = shadow_graph(g)
    neighbors = {v: set(shadow.adj[v]) for v in g.vertices()}
    best: list[int] = []

    def search(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for pos, v in enumerate(candidates):
            rest = candidates[pos + 1 :]
            if len(chosen) + 1 + len(rest) <= len(best):
                return
            chosen.append(v)
            search(chosen, [w for w in rest if w not in neighbors[v]])
            chosen.pop()

    search([], list(g.vertices()))
    return tuple(best)


def max_strong_independent(g: Hypergraph) -> VertexSubset:
    _check_cap(g, SEARCH.independence_cap, "max_strong_independent")
    members = _max_strong(g)
    logging.debug(f"[SEARCH] alpha_s={len(members)} set={list(members)}")
    return VertexSubset.of(g, members, SubsetKind.STRONG_INDEPENDENT)


def _max_weak(g: Hypergraph) -> tuple[int, ...]:
    n = g.n
    best: list[int] = []
    chosen: list[int] = []
    inside: set[int] = set()

    def closes_edge(v: int) -> bool:
        for idx in g.incidence[v - 1]:
            if all(w == v or w in inside for w in g.edges[idx]):
                return True
        return False

    def search(v: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if v > n or len(chosen) + (n - v + 1) <= len(best):
            return
        if not closes_edge(v):
            chosen.append(v)
            inside.add(v)
            search(v + 1)
            chosen.pop()
            inside.discard(v)
        if len(chosen) + (n - v) > len(best):
            search(v + 1)

    search(1)
    return tuple(best)


def max_weak_independent(g: Hypergraph) -> VertexSubset:
    _check_cap(g, SEARCH.independence_cap, "max_weak_independent")
    members = _max_weak(g)
    logging.debug(f"[SEARCH] alpha={len(members)} set={list(members)}")
    return VertexSubset.of(g, members, SubsetKind.WEAK_INDEPENDENT)


def greedy_strong_independent(g: Hypergraph) -> VertexSubset:
    """Smallest shadow degree first; not necessarily maximum."""
    shadow = shadow_graph(g)
    chosen: set[int] = set()
    blocked: set[int] = set()
    for v in sorted(g.vertices(), key=lambda u: (shadow.degree[u], u)):
        if v in blocked:
            continue
        chosen.add(v)
        blocked.update(shadow.adj[v])
    return VertexSubset.of(g, chosen, SubsetKind.STRONG_INDEPENDENT, optimal=False)


def greedy_weak_independent(g: Hypergraph) -> VertexSubset:
    """Smallest degree first, skipping any vertex that would complete an edge."""
    chosen: set[int] = set()
    for v in sorted(g.vertices(), key=lambda u: (g.degree(u), u)):
        rests = ([w for w in g.edges[idx] if w != v] for idx in g.incidence[v - 1])
        if not any(chosen.issuperset(rest) for rest in rests):
            chosen.add(v)
    return VertexSubset.of(g, chosen, SubsetKind.WEAK_INDEPENDENT, optimal=False)


# ----------------------------
# Cliques of the complement
# ----------------------------


def clique_number_of_complement(g: Hypergraph) -> int:
    """omega(complement of G), computed as alpha(G)."""
    return len(max_weak_independent(g))


def max_clique_of_complement(g: Hypergraph) -> VertexSubset:
    """
    A maximum clique of the complement. Sets smaller than k are cliques vacuously, so an
    edgeless complement still has cliques of size up to k-1.
    """
    weak = max_weak_independent(g)
    return VertexSubset.of(complement(g), weak.members, SubsetKind.CLIQUE)


# ----------------------------
# Vertex connectivity
# ----------------------------


def _is_complete(g: Hypergraph) -> bool:
    return g.m == math.comb(g.n, g.k)


def vertex_connectivity(g: Hypergraph) -> tuple[int, VertexSubset]:
    """
    Minimum |S| with G - S disconnected, by size-ascending enumeration; the cut returned
    is the lexicographically first of that size.
    """
    _check_cap(g, SEARCH.cut_cap, "vertex_connectivity")
    connected, parts = is_connected(g)
    if not connected:
        raise NotConnected(f"hypergraph has {len(parts)} components")
    if _is_complete(g):
        raise NoCutExists(
            f"the complete {g.k}-uniform hypergraph on {g.n} vertices has no vertex cut"
        )
    for size in range(1, g.n - 1):
        for cand in itertools.combinations(g.vertices(), size):
            if is_vertex_cut(g, cand):
                logging.debug(f"[SEARCH] nu={size} cut={list(cand)}")
                return size, VertexSubset.of(g, cand, SubsetKind.VERTEX_CUT)
    raise NoCutExists(f"no vertex cut found (n={g.n})")


# ----------------------------
# Weak coloring
# ----------------------------


def _color_with(g: Hypergraph, r: int) -> list[int] | None:
    """Backtracking r-coloring with no monochromatic edge; colors are 0..r-1."""
    n = g.n
    colors = [-1] * n

    def ok(v: int) -> bool:
        c = colors[v - 1]
        for idx in g.incidence[v - 1]:
            if all(colors[w - 1] == c for w in g.edges[idx]):
                return False
        return True

    def place(v: int, used: int) -> bool:
        if v > n:
            return True
        # Symmetry breaking: vertex v may open at most one new color.
        for c in range(min(used + 1, r)):
            colors[v - 1] = c
            if ok(v) and place(v + 1, max(used, c + 1)):
                return True
        colors[v - 1] = -1
        return False

    return list(colors) if place(1, 0) else None


def weak_coloring(g: Hypergraph) -> tuple[int, dict[int, int]]:
    """(chi, vertex -> color) with the fewest colors; colors are 1-based."""
    _check_cap(g, SEARCH.chromatic_cap, "weak_coloring")
    if g.m == 0:
        raise InvalidDimensions("weak chromatic number needs at least one edge")
    for r in range(2, g.n + 1):
        found = _color_with(g, r)
        if found is not None:
            return r, {v: found[v - 1] + 1 for v in g.vertices()}
    raise InvalidDimensions(f"no weak coloring of n={g.n} vertices")  # pragma: no cover


def weak_chromatic_number(g: Hypergraph) -> int:
    return weak_coloring(g)[0]
