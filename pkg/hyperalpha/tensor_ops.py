"""
Tensor-times-vector contractions for the adjacency, Laplacian, signless Laplacian and A_alpha
tensors of a uniform hypergraph.

No tensor is ever materialized: every apply is an O(k*m) pass over the edge list. For an
edge e containing vertex i the contribution to (A x)_i is the product of x over e minus i;
the 1/(k-1)! entries of A cancel against the (k-1)! orderings of the remaining vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .errors import DimensionMismatch, PreconditionViolated, ZeroVector
from .hypergraph import Hypergraph


class TensorKind(str, Enum):
    A = "A"
    L = "L"
    Q = "Q"
    A_ALPHA = "A_alpha"


@dataclass(frozen=True)
class Alpha:
    value: float

    def __post_init__(self) -> None:
        v = float(self.value)
        if not math.isfinite(v) or v < 0.0 or v >= 1.0:
            raise PreconditionViolated(f"alpha must satisfy 0 <= alpha < 1 (got {self.value})")
        object.__setattr__(self, "value", v)

    def __float__(self) -> float:
        return self.value


AlphaLike = Union[Alpha, float]


def as_alpha(alpha: AlphaLike) -> Alpha:
    return alpha if isinstance(alpha, Alpha) else Alpha(float(alpha))


class KVector:
    """
    Real vector paired with the tensor order k, with k-norm bookkeeping.

    Entries are stored as a read-only float64 array.
    """

    def __init__(self, entries: Sequence[float] | np.ndarray, k: int) -> None:
        arr = np.array(entries, dtype=np.float64).reshape(-1)
        if not np.all(np.isfinite(arr)):
            raise PreconditionViolated("vector entries must be finite")
        arr.setflags(write=False)
        self.entries = arr
        self.k = int(k)

    def __len__(self) -> int:
        return int(self.entries.shape[0])

    def __repr__(self) -> str:
        return f"KVector(k={self.k}, entries={self.entries.tolist()})"

    @classmethod
    def uniform_unit(cls, n: int, k: int) -> KVector:
        return cls(np.full(n, n ** (-1.0 / k)), k)

    @classmethod
    def ones(cls, n: int, k: int) -> KVector:
        return cls(np.ones(n), k)

    @cached_property
    def k_norm(self) -> float:
        return float(np.sum(np.abs(self.entries) ** self.k) ** (1.0 / self.k))

    @property
    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.entries))) if len(self) else 0.0

    def is_unit(self, tol: float = 1e-12) -> bool:
        return abs(float(np.sum(np.abs(self.entries) ** self.k)) - 1.0) <= tol

    def is_positive(self) -> bool:
        return bool(np.min(self.entries) > 0.0) if len(self) else False

    def is_nonnegative(self) -> bool:
        return bool(np.min(self.entries) >= 0.0) if len(self) else True

    def power(self, p: float) -> np.ndarray:
        """Componentwise x^[p] (sign-preserving for integer p)."""
        if float(p).is_integer():
            return self.entries ** int(p)
        return np.sign(self.entries) * np.abs(self.entries) ** p

    def normalized(self) -> KVector:
        norm = self.k_norm
        if norm == 0.0:
            raise ZeroVector("cannot normalize the zero vector")
        return KVector(self.entries / norm, self.k)

    def tensor_with_ones(self, r: int) -> KVector:
        """u (x) e_r under the direct product's flattening (i, j) -> (j-1)*n + i."""
        return KVector(np.tile(self.entries, r), self.k)


def as_kvector(x: KVector | Sequence[float] | np.ndarray, g: Hypergraph) -> KVector:
    vec = x if isinstance(x, KVector) else KVector(x, g.k)
    if len(vec) != g.n:
        raise DimensionMismatch(f"vector has dimension {len(vec)}, hypergraph has n={g.n}")
    return vec


# ----------------------------
# Edge-list contraction kernel
# ----------------------------


def _leave_one_out_products(g: Hypergraph, x: np.ndarray) -> np.ndarray:
    """(m, k) array: entry [e, t] is the product of x over edge e without its t-th vertex."""
    vals = x[g.edge_array]
    ones = np.ones((vals.shape[0], 1))
    before = np.cumprod(np.hstack([ones, vals[:, :-1]]), axis=1)
    after = np.cumprod(np.hstack([ones, vals[:, :0:-1]]), axis=1)[:, ::-1]
    return before * after


def _adjacency(g: Hypergraph, x: np.ndarray) -> np.ndarray:
    if g.m == 0:
        return np.zeros(g.n)
    loo = _leave_one_out_products(g, x)
    return np.bincount(g.edge_array.ravel(), weights=loo.ravel(), minlength=g.n)


def _degree(g: Hypergraph, x: np.ndarray) -> np.ndarray:
    return g.degrees * x ** (g.k - 1)


def apply_adjacency(g: Hypergraph, x: KVector | Sequence[float] | np.ndarray) -> KVector:
    vec = as_kvector(x, g)
    return KVector(_adjacency(g, vec.entries), g.k)


def apply_degree(g: Hypergraph, x: KVector | Sequence[float] | np.ndarray) -> KVector:
    vec = as_kvector(x, g)
    return KVector(_degree(g, vec.entries), g.k)


def apply_a_alpha(
    g: Hypergraph, alpha: AlphaLike, x: KVector | Sequence[float] | np.ndarray
) -> KVector:
    a = as_alpha(alpha).value
    vec = as_kvector(x, g)
    out = a * _degree(g, vec.entries) + (1.0 - a) * _adjacency(g, vec.entries)
    return KVector(out, g.k)


def apply_laplacian(g: Hypergraph, x: KVector | Sequence[float] | np.ndarray) -> KVector:
    vec = as_kvector(x, g)
    return KVector(_degree(g, vec.entries) - _adjacency(g, vec.entries), g.k)


def apply_signless_laplacian(g: Hypergraph, x: KVector | Sequence[float] | np.ndarray) -> KVector:
    vec = as_kvector(x, g)
    return KVector(_degree(g, vec.entries) + _adjacency(g, vec.entries), g.k)


def apply_tensor(
    g: Hypergraph,
    kind: TensorKind | str,
    x: KVector | Sequence[float] | np.ndarray,
    *,
    alpha: AlphaLike | None = None,
) -> KVector:
    kind = TensorKind(kind)
    if kind is TensorKind.A:
        return apply_adjacency(g, x)
    if kind is TensorKind.L:
        return apply_laplacian(g, x)
    if kind is TensorKind.Q:
        return apply_signless_laplacian(g, x)
    if alpha is None:
        raise PreconditionViolated("A_alpha apply needs an alpha")
    return apply_a_alpha(g, alpha, x)


def rayleigh(
    g: Hypergraph,
    alpha: AlphaLike,
    x: KVector | Sequence[float] | np.ndarray,
    *,
    compensated: bool = False,
) -> float:
    """alpha * sum_i d_i x_i^k + (1 - alpha) * sum_e k x^e."""
    a = as_alpha(alpha).value
    vec = as_kvector(x, g).entries
    diag = g.degrees * vec ** g.k
    per_edge = np.prod(vec[g.edge_array], axis=1) if g.m else np.zeros(0)
    if compensated:
        return a * math.fsum(diag.tolist()) + (1.0 - a) * g.k * math.fsum(per_edge.tolist())
    return float(a * np.sum(diag) + (1.0 - a) * g.k * np.sum(per_edge))


def eig_residual(
    g: Hypergraph,
    kind: TensorKind | str,
    lam: float,
    x: KVector | Sequence[float] | np.ndarray,
    *,
    alpha: AlphaLike | None = None,
) -> float:
    """max_i |(T x)_i - lam * x_i^(k-1)| / max(1, ||x||_inf^(k-1))."""
    vec = as_kvector(x, g)
    if not np.any(vec.entries != 0.0):
        raise ZeroVector("eigen-residual of the zero vector is undefined")
    tx = apply_tensor(g, kind, vec, alpha=alpha).entries
    diff = np.abs(tx - lam * vec.entries ** (g.k - 1))
    scale = max(1.0, vec.sup_norm ** (g.k - 1))
    return float(np.max(diff) / scale) if len(diff) else 0.0
