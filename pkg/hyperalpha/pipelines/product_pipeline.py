from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from ..config import BOUNDS
from ..hypergraph import Hypergraph, is_regular
from ..spectral import (
    ProductCheck,
    check_laplacian_transport,
    check_product_rho,
    laplacian_pair_from_adjacency,
)
from ..tensor_ops import AlphaLike, KVector, as_alpha


@dataclass(frozen=True)
class ProductRun:
    n_g: int
    n_h: int
    k: int
    checks: list[ProductCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "n_G": self.n_g,
            "n_H": self.n_h,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def run_product(
    g: Hypergraph,
    h: Hypergraph,
    alpha: AlphaLike,
    *,
    laplacian: bool = False,
    tol: float = BOUNDS.product_tol,
) -> ProductRun:
    """
    A_alpha transport check for G x H, plus (with `laplacian`) L-eigenpair transport of
    (0, all-ones) and, when G is regular, of the adjacency-derived pair.
    """
    a = as_alpha(alpha).value
    checks = [check_product_rho(g, h, a, tol)]
    if laplacian:
        checks.append(check_laplacian_transport(g, h, 0.0, KVector.ones(g.n, g.k), tol))
        if is_regular(g)[0]:
            lam, u = laplacian_pair_from_adjacency(g)
            checks.append(check_laplacian_transport(g, h, lam, u, tol))
        else:
            logging.info("[PRODUCT] G is not regular: skipping the adjacency-derived L-eigenpair")
    for c in checks:
        status = "ok" if c.passed else "FAILED"
        logging.info(
            f"[PRODUCT] {c.kind}: expected={c.expected:.12g} residual={c.residual:.3e} {status}"
        )
    return ProductRun(n_g=g.n, n_h=h.n, k=g.k, checks=checks)
