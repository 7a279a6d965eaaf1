"""Exhaustive oracles: brute-force distance, weight enumerator, MDS minors,
and the subcode inclusion chain.

Codeword enumeration is vectorised with numpy.  Messages are split into an
inner block of rows whose full span is materialised once and an outer block
iterated in Python; each outer step is one vectorised field addition.
"""

from __future__ import annotations

import itertools
import math
import os
from typing import Optional

import numpy as np

from .algebra import Matrix, rank, span_contains
from .codes import GRS, TGRS, LinearCode, TgrsParams, grs_generator, grs_rows, tgrs_generator
from .errors import TooLarge

DEFAULT_GUARD_BITS = 26
INNER_LIMIT = 1 << 17
COLUMN_TEST_LIMIT = 1 << 20


def guard_bits() -> int:
    """Brute-force guard exponent; ``TGRS_GUARD_BITS`` overrides the default 26."""
    return int(os.environ.get("TGRS_GUARD_BITS", DEFAULT_GUARD_BITS))


def within_guard(q: int, k: int, bits: Optional[int] = None) -> bool:
    return k * math.log2(q) <= (guard_bits() if bits is None else bits) + 1e-9


def _vector_add(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    p, m = field.p, field.m
    if p == 2:
        return np.bitwise_xor(a, b)
    if m == 1:
        return (a + b) % p
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    w = 1
    for _ in range(m):
        out += ((a // w + b // w) % p) * w
        w *= p
    return out


def _codeword_blocks(code: LinearCode):
    """Yield arrays of codewords covering the whole code exactly once.

    The first block starts with the zero codeword.
    """
    F = code.field
    q, n, k = F.q, code.n, code.k
    G = code.G.rows
    # scaled[i][c] = c * G_i
    scaled = [np.array([[F.mul(c, x) for x in row] for c in range(q)], dtype=np.int64) for row in G]
    inner = 1
    while inner < k and q ** (inner + 1) <= INNER_LIMIT:
        inner += 1
    block = scaled[0]
    for i in range(1, inner):
        block = _vector_add(F, block[:, None, :], scaled[i][None, :, :]).reshape(-1, n)
    outer = list(range(inner, k))
    base = np.zeros(n, dtype=np.int64)
    if not outer:
        yield block
        return
    for coeffs in itertools.product(range(q), repeat=len(outer)):
        offset = base
        for i, c in zip(outer, coeffs):
            if c:
                offset = _vector_add(F, offset, scaled[i][c])
        yield _vector_add(F, block, offset[None, :])


def _guard(code: LinearCode) -> None:
    if not within_guard(code.field.q, code.k):
        raise TooLarge(f"q^k = {code.field.q}^{code.k} exceeds 2^{guard_bits()}")


def min_distance_bruteforce(code: LinearCode, stop_at: Optional[int] = -1) -> int:
    """Minimum nonzero codeword weight by exhaustive enumeration.

    For GRS and twisted codes the enumeration stops as soon as a codeword of
    weight n-k is seen, since no lighter codeword exists; pass ``stop_at=None``
    to disable this or an explicit weight to override it.
    """
    _guard(code)
    if stop_at == -1:
        stop_at = code.n - code.k if code.provenance in (GRS, TGRS) else None
    best = code.n + 1
    first = True
    for block in _codeword_blocks(code):
        w = np.count_nonzero(block, axis=1)
        if first:
            w = w[1:]
            first = False
        if w.size:
            best = min(best, int(w.min()))
        if stop_at is not None and best <= stop_at:
            break
    return best


def weight_distribution(code: LinearCode) -> list[int]:
    """[A_0, ..., A_n]: number of codewords of each Hamming weight."""
    _guard(code)
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in _codeword_blocks(code):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=code.n + 1)
    return [int(c) for c in counts]


def mds_column_test(code: LinearCode) -> bool:
    """True iff every k columns of G are linearly independent."""
    n, k = code.n, code.k
    if math.comb(n, k) > COLUMN_TEST_LIMIT:
        raise TooLarge(f"C({n},{k}) column subsets exceed the limit")
    G = code.G
    return all(rank(G.columns(cols)) == k for cols in itertools.combinations(range(n), k))


def inclusion_chain_check(params: TgrsParams) -> bool:
    """GRS(D, l, v) < C_l(D, k, eta, v) < GRS(D, k+1, v/alpha), both strict."""
    F = params.field
    D, k, l = params.D, params.k, params.l
    C = tgrs_generator(params).G
    v_over_a = tuple(F.div(vi, a) for vi, a in zip(params.v, D.points))
    upper = grs_generator(D, k + 1, v_over_a).G if k + 1 <= D.n else None
    if l >= 1:
        lower = Matrix._raw(F, grs_rows(D, range(l), params.v), D.n)
    else:
        lower = Matrix._raw(F, [], D.n)
    lower_rank = rank(lower) if lower.nrows else 0
    ok_lower = span_contains(C, lower) and lower_rank < rank(C)
    ok_upper = upper is not None and span_contains(upper, C) and rank(C) < rank(upper)
    return ok_lower and ok_upper
