"""Minimum distance of C_l(D, k, eta, v) from the subset criterion.

The code has distance n-k or n-k+1.  It drops to n-k exactly when some
k-subset S of D satisfies

    eta * sigma_{k-1-l}(S) = (-1)^(l+1) * sigma_k(S).

Subsets with sigma_{k-1-l}(S) = 0 can never satisfy this since sigma_k(S)
is a product of nonzero points.  For l = k-1 the condition reads
eta = (-1)^k prod S, a subset product problem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .algebra import elementary_symmetric_all
from .codes import TgrsParams
from .dual import twisted_dual_eta
from .errors import TooLarge
from .subset_product import subset_product_solve

MDS = "MDS"
ALMOST_MDS = "AlmostMDS"
NEAR_MDS = "NearMDS"

# general-l search enumerates every k-subset
SEARCH_LIMIT = 1 << 24


@dataclass(frozen=True)
class DistanceReport:
    n: int
    k: int
    d: int
    cls: str
    witness: Optional[tuple[int, ...]] = None
    dual_witness: Optional[tuple[int, ...]] = None

    def to_json(self, D) -> dict:
        F = D.field

        def pts(pos):
            return None if pos is None else [F.element_json(D.points[i]) for i in pos]

        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "class": self.cls,
            "witness": pts(self.witness),
            "witness_positions": None if self.witness is None else list(self.witness),
            "dual_witness": pts(self.dual_witness),
            "dual_witness_positions": None if self.dual_witness is None else list(self.dual_witness),
        }


def _sign(F, e: int, x: int) -> int:
    return F.neg(x) if e % 2 else x


def criterion_search(params: TgrsParams) -> Optional[tuple[int, ...]]:
    """First k-subset (by positions) meeting the criterion, by enumeration."""
    F = params.field
    D, k, l, eta = params.D, params.k, params.l, params.eta
    if math.comb(D.n, k) > SEARCH_LIMIT:
        raise TooLarge(f"C({D.n},{k}) subsets exceed the search limit")
    for pos in combinations(range(D.n), k):
        sig = elementary_symmetric_all(F, [D.points[i] for i in pos])
        low = sig[k - 1 - l]
        if low == 0:
            continue
        if eta == _sign(F, l + 1, F.div(sig[k], low)):
            return pos
    return None


def classify_distance(params: TgrsParams, method: str = "auto") -> DistanceReport:
    """``method="search"`` forces the generic subset criterion even for l = k-1."""
    F = params.field
    n, k, l = params.n, params.k, params.l
    top = l == k - 1
    if top and method != "search":
        witness = subset_product_solve(params.D, k, _sign(F, k, params.eta),
                                       method="auto" if method == "auto" else method)
    else:
        witness = criterion_search(params)
    dual_w = None
    if top:
        eta_dual = twisted_dual_eta(params)
        dual_w = subset_product_solve(params.D, n - k, _sign(F, n - k, eta_dual))
    if witness is None:
        return DistanceReport(n, k, n - k + 1, MDS, None, dual_w)
    return DistanceReport(n, k, n - k, NEAR_MDS if top else ALMOST_MDS, witness, dual_w)


def grs_report(n: int, k: int) -> DistanceReport:
    """GRS codes are MDS."""
    return DistanceReport(n, k, n - k + 1, MDS)
