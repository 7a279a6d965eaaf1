"""Explicit parity-check matrices of twisted GRS codes."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .algebra import Matrix, Poly, mat_mul, monomial, null_space, poly_eval, rank, same_row_span
from .codes import TGRS, LinearCode, TgrsParams, grs_rows, tgrs_generator
from .errors import BoundaryCase, InternalInconsistency, InvalidParams


@dataclass(frozen=True)
class DualWitness:
    """Coefficients b_0..b_{k-l-1}, the constant b and f(x), plus H.

    ``boundary`` is set when k = n-1 and H consists of the f-row alone.
    """

    b: tuple[int, ...]
    b_const: int
    f: Poly
    H: Matrix
    boundary: bool = False


def dual_denominators(params: TgrsParams) -> tuple[int, int]:
    """(sum u_i alpha_i^(n-1), sum u_i alpha_i^(-1)); both are nonzero."""
    D = params.D
    top, inv = D.power_sum(D.n - 1), D.power_sum(-1)
    if top == 0 or inv == 0:
        raise InternalInconsistency("vanishing power-sum denominator")
    return top, inv


def twisted_dual_eta(params: TgrsParams) -> int:
    """-(sum u_i alpha_i^(n-1)) / (eta * sum u_i alpha_i^(-1))."""
    F = params.field
    top, inv = dual_denominators(params)
    return F.neg(F.div(top, F.mul(params.eta, inv)))


def dual_scaling(params: TgrsParams) -> tuple[int, ...]:
    """u / v * alpha, componentwise."""
    F = params.field
    return tuple(F.mul(F.div(ui, vi), a) for ui, vi, a in zip(params.D.u, params.v, params.D.points))


def dual_witness(params: TgrsParams, allow_boundary: bool = False) -> DualWitness:
    F = params.field
    D, n, k, l = params.D, params.n, params.k, params.l
    if k == n - 1 and not allow_boundary:
        raise BoundaryCase("k = n-1 leaves no GRS block in the parity-check matrix")
    top, _ = dual_denominators(params)

    # b_j = -(sum_{r<j} b_r S_{n+j-1-r}) / S_{n-1}, with S_t = sum u_i alpha_i^t
    sums = {t: D.power_sum(t) for t in range(n, n + k - l - 1)}
    b = [1]
    for j in range(1, k - l):
        acc = 0
        for r in range(j):
            acc = F.add(acc, F.mul(b[r], sums[n + j - 1 - r]))
        b.append(F.neg(F.div(acc, top)))
    b_const = twisted_dual_eta(params)

    f = Poly(F, ())
    for j, bj in enumerate(b):
        f = f + monomial(F, n - l - 1 - j, bj)
    f = f + Poly(F, (b_const,))

    uv = [F.div(ui, vi) for ui, vi in zip(D.u, params.v)]
    rows = [[F.mul(w, poly_eval(f, a)) for w, a in zip(uv, D.points)]]
    # G_{n-k-1}(D, u/v * alpha): exponents 1..n-k-1 on the u/v scaling
    rows += grs_rows(D, range(1, n - k), uv)
    H = Matrix._raw(F, rows, n)

    G = tgrs_generator(params).G
    if not mat_mul(G, H.T).is_zero():
        raise InternalInconsistency("G H^T != 0 for the computed parity-check matrix")
    if rank(H) != n - k:
        raise InternalInconsistency(f"parity-check matrix has rank {rank(H)}, expected {n - k}")
    boundary = k == n - 1
    if boundary:
        warnings.warn("k = n-1: parity-check matrix is the f-row alone", stacklevel=2)
    return DualWitness(tuple(b), b_const, f, H, boundary)


def dual_as_tgrs(params: TgrsParams) -> tuple[TgrsParams, LinearCode]:
    """For l = k-1 the dual is C_{n-k-1}(D, n-k, eta', u/v*alpha)."""
    n, k = params.n, params.k
    if params.l != k - 1:
        raise InvalidParams("the dual is a twisted code of this family only for l = k-1")
    if not 2 <= n - k <= n - 1:
        raise InvalidParams(f"dual dimension n-k={n - k} is outside [2, n-1]")
    dual = TgrsParams(params.D, n - k, n - k - 1, twisted_dual_eta(params), dual_scaling(params))
    code = tgrs_generator(dual)
    if not same_row_span(code.G, null_space(tgrs_generator(params).G)):
        raise InternalInconsistency("twisted dual does not span the null space of G")
    return dual, LinearCode(code.G, TGRS, dual)
