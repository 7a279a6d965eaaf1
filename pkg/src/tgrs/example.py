"""Self-dual codes with D = F_q^* inside GF(q^2), q odd.

With k = (q-1)/2, l = k-1, eta a square root of -1 and v_i = sqrt(u_i alpha_i)
the code C_l(F_q^*, k, eta, v) over GF(q^2) is self-dual; it is MDS for
q = 3 (mod 4) and near-MDS for q = 1 (mod 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .codes import EvaluationSet, TgrsParams, tgrs_generator
from .distance import MDS, NEAR_MDS, DistanceReport, classify_distance
from .errors import InternalInconsistency, InvalidParams
from .gf import FieldSpec, field_make, prime_power
from .oracles import COLUMN_TEST_LIMIT, mds_column_test, min_distance_bruteforce, within_guard
from .selfdual import SelfDualCertificate, is_self_orthogonal, self_dual_check
from .subset_product import subset_product

MAX_Q = 127


@dataclass(frozen=True)
class ExampleReport:
    q: int
    field: FieldSpec
    params: TgrsParams
    zeta: int                      # primitive element of F_q used to index D
    power_sums_equal: bool         # sum u alpha^(n-1) == sum u alpha^(-1)
    certificate: SelfDualCertificate
    self_orthogonal: bool          # G G^T = 0
    report: DistanceReport
    expected_class: str
    exponent_witness: Optional[tuple[int, ...]]  # exponent set, q = 1 (mod 4)
    exponent_sum_ok: Optional[bool]              # sum = 3(q-1)/4 (mod q-1)
    exponent_witness_valid: Optional[bool]       # a genuine witness, see below
    oracle: str                    # "bruteforce", "columns" or "skipped"
    oracle_d: Optional[int]

    @property
    def ok(self) -> bool:
        checks = [self.power_sums_equal, self.certificate.holds, self.self_orthogonal,
                  self.report.cls == self.expected_class]
        if self.exponent_witness is not None:
            checks += [self.exponent_sum_ok, self.exponent_witness_valid]
        if self.oracle_d is not None:
            checks.append(self.oracle_d == self.report.d)
        return all(checks)


def example_exponent_set(q: int) -> tuple[int, ...]:
    """{1, ..., (q-1)/2} for q = 5 (mod 8), {0, ..., (q-3)/2} for q = 1 (mod 8)."""
    if q % 8 == 5:
        return tuple(range(1, (q - 1) // 2 + 1))
    if q % 8 == 1:
        return tuple(range(0, (q - 3) // 2 + 1))
    raise InvalidParams(f"no exponent witness for q={q}")


def example_params(q: int) -> tuple[TgrsParams, int]:
    """The example code for odd q, and the primitive element of F_q indexing D."""
    pm = prime_power(q)
    if pm is None or q % 2 == 0 or not 5 <= q <= MAX_Q:
        raise InvalidParams(f"q must be an odd prime power with 5 <= q <= {MAX_Q}, got {q}")
    p, a = pm
    F = field_make(p, 2 * a)
    Z = F.primitive_element()
    # F_q^* = elements of order dividing q-1 = powers of zeta = Z^(q+1)
    zeta = F.pow(Z, q + 1)
    D = EvaluationSet(F, tuple(F.pow(zeta, j) for j in range(q - 1)))
    k = (q - 1) // 2
    v = []
    for ui, alpha in zip(D.u, D.points):
        r = F.sqrt(F.mul(ui, alpha))
        if r is None:
            raise InternalInconsistency("u_i alpha_i is not a square in GF(q^2)")
        v.append(r)
    eta = F.pow(Z, (F.q - 1) // 4)
    return TgrsParams(D, k, k - 1, eta, tuple(v)), zeta


def _oracle_distance(params: TgrsParams) -> tuple[str, Optional[int]]:
    code = tgrs_generator(params)
    F, n, k = params.field, params.n, params.k
    if within_guard(F.q, k):
        return "bruteforce", min_distance_bruteforce(code)
    if math.comb(n, k) <= COLUMN_TEST_LIMIT:
        # distance is n-k or n-k+1 because the code sits inside an [n, k+1] MDS code
        return "columns", n - k + 1 if mds_column_test(code) else n - k
    return "skipped", None


def run_example(q: int, oracle: bool = True) -> ExampleReport:
    params, zeta = example_params(q)
    F, D, k = params.field, params.D, params.k
    n = params.n
    sums_equal = D.power_sum(n - 1) == D.power_sum(-1)
    cert = self_dual_check(params)
    code = tgrs_generator(params)
    report = classify_distance(params)
    expected = MDS if q % 4 == 3 else NEAR_MDS

    exps = sum_ok = valid = None
    if q % 4 == 1:
        exps = example_exponent_set(q)
        sum_ok = sum(exps) % (q - 1) == 3 * (q - 1) // 4
        # prod zeta^s = zeta^(3(q-1)/4) = -eta; against the primitive element
        # zeta^-1 the same exponents give eta = (-1)^k prod S (k is even here)
        # D[j] = zeta^j, so position -s holds (zeta^-1)^s
        positions = sorted({(-s) % (q - 1) for s in exps})
        target = F.neg(params.eta) if k % 2 else params.eta
        valid = len(positions) == k and subset_product(D, positions) == target
    kind, od = _oracle_distance(params) if oracle else ("skipped", None)
    return ExampleReport(q, F, params, zeta, sums_equal, cert, is_self_orthogonal(code), report,
                         expected, exps, sum_ok, valid, kind, od)
