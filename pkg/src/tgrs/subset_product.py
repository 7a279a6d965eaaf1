"""Size-constrained subset products in F_q^*.

Taking discrete logs turns prod_{s in S} s = t into sum_{s in S} log s = log t
in Z/(q-1).  Three solvers are provided: direct enumeration,
meet-in-the-middle, and a suffix-reachability dynamic programme for
instances where both of the former are out of reach.  Each returns the
lexicographically first solution, comparing sorted position tuples.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Optional, Sequence

from .codes import EvaluationSet
from .errors import InvalidParams, InvalidTarget, TooLarge

ENUMERATION_LIMIT = 1 << 20
MITM_HALF_LIMIT = 1 << 20


def _check(D: EvaluationSet, k: int, target: int) -> None:
    if target == 0:
        raise InvalidTarget("target must be nonzero")
    if not 1 <= k <= D.n:
        raise InvalidParams(f"need 1 <= k <= n, got k={k}, n={D.n}")


def solve_by_enumeration(logs: Sequence[int], k: int, t: int, modulus: int) -> Optional[tuple[int, ...]]:
    for combo in combinations(range(len(logs)), k):
        if sum(logs[i] for i in combo) % modulus == t:
            return combo
    return None


def solve_by_mitm(logs: Sequence[int], k: int, t: int, modulus: int) -> Optional[tuple[int, ...]]:
    # halves by index parity; for a fixed left part the lex-smallest right part
    # gives the lex-smallest union, so one right combination per key suffices
    even = list(range(0, len(logs), 2))
    odd = list(range(1, len(logs), 2))
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for b in range(min(k, len(odd)) + 1):
        for R in combinations(odd, b):
            table.setdefault((sum(logs[i] for i in R) % modulus, b), R)
    best: Optional[tuple[int, ...]] = None
    for a in range(max(0, k - len(odd)), min(k, len(even)) + 1):
        for L in combinations(even, a):
            R = table.get(((t - sum(logs[i] for i in L)) % modulus, k - a))
            if R is not None:
                cand = tuple(sorted(L + R))
                if best is None or cand < best:
                    best = cand
    return best


def solve_by_dp(logs: Sequence[int], k: int, t: int, modulus: int) -> Optional[tuple[int, ...]]:
    n = len(logs)
    full = (1 << modulus) - 1

    def rot(mask: int, s: int) -> int:
        s %= modulus
        return ((mask << s) | (mask >> (modulus - s))) & full if s else mask

    # reach[i][r]: bitmask of residues reachable with r picks among positions i..n-1
    reach = [[0] * (k + 1) for _ in range(n + 1)]
    reach[n][0] = 1
    for i in range(n - 1, -1, -1):
        nxt, cur = reach[i + 1], reach[i]
        cur[0] = 1
        for r in range(1, k + 1):
            cur[r] = nxt[r] | rot(nxt[r - 1], logs[i])
    if not reach[0][k] >> t & 1:
        return None
    out, r, s = [], k, t
    for i in range(n):
        if r == 0:
            break
        need = (s - logs[i]) % modulus
        if reach[i + 1][r - 1] >> need & 1:
            out.append(i)
            r -= 1
            s = need
    return tuple(out)


SOLVERS = {"enumerate": solve_by_enumeration, "mitm": solve_by_mitm, "dp": solve_by_dp}


def choose_method(n: int, k: int) -> str:
    if math.comb(n, k) <= ENUMERATION_LIMIT:
        return "enumerate"
    if 1 << ((n + 1) // 2) <= MITM_HALF_LIMIT:
        return "mitm"
    return "dp"


def subset_product_solve(D: EvaluationSet, k: int, target: int,
                         method: str = "auto") -> Optional[tuple[int, ...]]:
    """Positions of a size-k subset of D whose product is ``target``, or None."""
    F = D.field
    target = F.coerce(target)
    _check(D, k, target)
    if method == "auto":
        method = choose_method(D.n, k)
    if method not in SOLVERS:
        raise ValueError(f"unknown method {method!r}")
    if method == "enumerate" and math.comb(D.n, k) > 1 << 30:
        raise TooLarge(f"C({D.n},{k}) subsets is too many to enumerate")
    logs = [F.log(a) for a in D.points]
    return SOLVERS[method](logs, k, F.log(target), F.q - 1)


def subset_product(D: EvaluationSet, positions: Sequence[int]) -> int:
    F = D.field
    acc = 1
    for i in positions:
        acc = F.mul(acc, D.points[i])
    return acc
