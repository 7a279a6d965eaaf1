"""Self-duality of C_{k-1}(D, k, eta, v) for n = 2k, and its char-2 synthesis.

The two conditions (a common ratio lambda = v_i^2 / (u_i alpha_i) and
eta^2 = -sum u alpha^(n-1) / sum u alpha^(-1)) are sufficient for every k.
They are also necessary once k >= 3.  For k = 2 they are not: over GF(5)
with D = (3, 1, 4, 2), eta = 2, v = (2, 3, 1, 1) the code is self-dual while
the ratios are (4, 1, 4, 1).  Certificates record this in ``complete``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import mat_mul
from .codes import EvaluationSet, LinearCode, TgrsParams, tgrs_generator
from .dual import dual_denominators
from .errors import InvalidDimension, InvalidParams, OddLength, WrongCharacteristic

LENGTH_NOT_TWICE_DIM = "LengthNotTwiceDim"
CONDITION_1 = "condition-1"
CONDITION_2 = "condition-2"


@dataclass(frozen=True)
class SelfDualCertificate:
    holds: bool
    lam: Optional[int]
    eta_sq_required: int
    failure_reason: Optional[str] = None
    # False when a negative verdict is not conclusive (k = 2)
    complete: bool = True

    def to_json(self, field) -> dict:
        return {
            "holds": self.holds,
            "lambda": None if self.lam is None else field.element_json(self.lam),
            "eta_sq_required": field.element_json(self.eta_sq_required),
            "failure_reason": self.failure_reason,
            "complete": self.complete,
        }


def required_eta_square(params: TgrsParams) -> int:
    """-(sum u_i alpha_i^(n-1)) / (sum u_i alpha_i^(-1))."""
    F = params.field
    top, inv = dual_denominators(params)
    return F.neg(F.div(top, inv))


def scaling_ratios(params: TgrsParams) -> list[int]:
    """lambda_i = v_i^2 / (u_i alpha_i)."""
    F = params.field
    return [F.div(F.mul(vi, vi), F.mul(ui, a))
            for vi, ui, a in zip(params.v, params.D.u, params.D.points)]


def self_dual_check(params: TgrsParams) -> SelfDualCertificate:
    if params.l != params.k - 1:
        raise InvalidParams("self-duality is characterised only for l = k-1")
    F = params.field
    req = required_eta_square(params)
    if params.n != 2 * params.k:
        return SelfDualCertificate(False, None, req, LENGTH_NOT_TWICE_DIM)
    complete = params.k >= 3
    ratios = scaling_ratios(params)
    lam = ratios[0] if all(r == ratios[0] for r in ratios) else None
    if lam is None:
        return SelfDualCertificate(False, None, req, CONDITION_1, complete)
    if F.mul(params.eta, params.eta) != req:
        return SelfDualCertificate(False, lam, req, CONDITION_2, complete)
    return SelfDualCertificate(True, lam, req)


def is_self_orthogonal(code: LinearCode) -> bool:
    """Direct oracle: G G^T = 0."""
    return mat_mul(code.G, code.G.T).is_zero()


def is_self_dual_direct(params: TgrsParams) -> bool:
    """G G^T = 0 and n = 2k (the generator always has rank k)."""
    return params.n == 2 * params.k and is_self_orthogonal(tgrs_generator(params))


def self_dual_build_char2(D: EvaluationSet) -> TgrsParams:
    """v_i = sqrt(u_i alpha_i), eta = sqrt(sum u alpha^(n-1) / sum u alpha^(-1))."""
    F = D.field
    if F.p != 2:
        raise WrongCharacteristic(f"synthesis needs characteristic 2, got {F.p}")
    n = D.n
    if n % 2:
        raise OddLength(f"n={n} is odd")
    if n < 4:
        raise InvalidDimension(f"n={n} gives k={n // 2} < 2")
    v = tuple(F.sqrt(F.mul(ui, a)) for ui, a in zip(D.u, D.points))
    eta = F.sqrt(F.div(D.power_sum(n - 1), D.power_sum(-1)))
    return TgrsParams(D, n // 2, n // 2 - 1, eta, v)
