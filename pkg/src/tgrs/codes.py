"""GRS and twisted GRS codes: parameters and generator matrices."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Optional, Sequence

from .algebra import Matrix, poly_derivative, poly_eval, poly_from_roots, rank
from .errors import InternalInconsistency, InvalidDimension, InvalidParams
from .gf import ElementLike, FieldSpec

GRS = "GRS"
TGRS = "TGRS"
DUAL = "dual"
RAW = "raw"


@dataclass(frozen=True)
class EvaluationSet:
    """Ordered, pairwise distinct, nonzero evaluation points."""

    field: FieldSpec
    points: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(self.field.coerce(a) for a in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise InvalidParams("evaluation set must be nonempty")
        if 0 in pts:
            raise InvalidParams("evaluation points must be nonzero")
        if len(set(pts)) != len(pts):
            raise InvalidParams("evaluation points must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> int:
        return self.points[i]

    @cached_property
    def u(self) -> tuple[int, ...]:
        return u_vector(self)

    def power_sum(self, j: int, weights: Optional[Sequence[int]] = None) -> int:
        """sum_i w_i alpha_i^j, with w = u by default; j may be negative."""
        F = self.field
        w = self.u if weights is None else weights
        acc = 0
        for wi, a in zip(w, self.points):
            acc = F.add(acc, F.mul(wi, F.pow(a, j)))
        return acc


def evaluation_set(field: FieldSpec, points: Sequence[ElementLike]) -> EvaluationSet:
    return EvaluationSet(field, tuple(points))


def u_vector(D: EvaluationSet) -> tuple[int, ...]:
    """u_i = 1 / G'(alpha_i) where G(x) = prod_{alpha in D} (x - alpha)."""
    F = D.field
    dG = poly_derivative(poly_from_roots(F, D.points))
    u = tuple(F.inv(poly_eval(dG, a)) for a in D.points)
    # sum_i u_i alpha_i^j vanishes for 0 <= j <= n-2
    for j in range(D.n - 1):
        acc = 0
        for ui, a in zip(u, D.points):
            acc = F.add(acc, F.mul(ui, F.pow(a, j)))
        if acc:
            raise InternalInconsistency(f"power sum of u at j={j} is nonzero")
    return u


@dataclass(frozen=True)
class TgrsParams:
    """The data (D, k, l, eta, v) of the twisted code C_l(D, k, eta, v)."""

    D: EvaluationSet
    k: int
    l: int
    eta: int
    v: tuple[int, ...]

    def __post_init__(self):
        F = self.D.field
        n = self.D.n
        object.__setattr__(self, "eta", F.coerce(self.eta))
        object.__setattr__(self, "v", tuple(F.coerce(x) for x in self.v))
        if not 2 <= self.k <= n - 1:
            raise InvalidParams(f"need 2 <= k <= n-1, got k={self.k}, n={n}")
        if not 0 <= self.l <= self.k - 1:
            raise InvalidParams(f"need 0 <= l <= k-1, got l={self.l}, k={self.k}")
        if self.eta == 0:
            raise InvalidParams("eta must be nonzero")
        if len(self.v) != n:
            raise InvalidParams(f"scaling vector has length {len(self.v)}, expected {n}")
        if 0 in self.v:
            raise InvalidParams("scaling vector entries must be nonzero")

    @property
    def field(self) -> FieldSpec:
        return self.D.field

    @property
    def n(self) -> int:
        return self.D.n


def make_params(field: FieldSpec, D: Sequence[ElementLike], k: int, l: int,
                eta: ElementLike, v: Optional[Sequence[ElementLike]] = None) -> TgrsParams:
    """Convenience constructor; ``v`` defaults to the all-ones vector."""
    ev = EvaluationSet(field, tuple(D))
    vv = (1,) * ev.n if v is None else tuple(v)
    return TgrsParams(ev, k, l, eta, vv)


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by a full-rank generator matrix."""

    G: Matrix
    provenance: str = RAW
    params: Optional[TgrsParams] = dc_field(default=None, compare=False)

    def __post_init__(self):
        if self.G.nrows < 1:
            raise InvalidDimension("a code needs at least one generator row")
        if rank(self.G) != self.G.nrows:
            raise InvalidParams("generator matrix is not of full row rank")

    @property
    def field(self) -> FieldSpec:
        return self.G.field

    @property
    def n(self) -> int:
        return self.G.ncols

    @property
    def k(self) -> int:
        return self.G.nrows


def grs_rows(D: EvaluationSet, exponents: Sequence[int], v: Sequence[int]) -> list[list[int]]:
    F = D.field
    return [[F.mul(vi, F.pow(a, e)) for vi, a in zip(v, D.points)] for e in exponents]


def grs_generator(D: EvaluationSet, k: int, v: Optional[Sequence[ElementLike]] = None) -> LinearCode:
    """G_k(D, v): rows (v_j alpha_j^i)_j for i = 0..k-1."""
    F = D.field
    if not 1 <= k <= D.n:
        raise InvalidDimension(f"need 1 <= k <= n, got k={k}, n={D.n}")
    vv = (1,) * D.n if v is None else tuple(F.coerce(x) for x in v)
    if len(vv) != D.n or 0 in vv:
        raise InvalidParams("scaling vector must have n nonzero entries")
    G = Matrix._raw(F, grs_rows(D, range(k), vv), D.n)
    return LinearCode(G, GRS)


def twisted_row(params: TgrsParams) -> list[int]:
    """(v_j (alpha_j^l + eta alpha_j^(q-2)))_j."""
    F = params.field
    q, l, eta = F.q, params.l, params.eta
    return [F.mul(vi, F.add(F.pow(a, l), F.mul(eta, F.pow(a, q - 2))))
            for vi, a in zip(params.v, params.D.points)]


def tgrs_generator(params: TgrsParams) -> LinearCode:
    """G_{k,l}(D, eta, v): monomial rows in ascending order, twisted row last."""
    exps = [i for i in range(params.k) if i != params.l]
    rows = grs_rows(params.D, exps, params.v)
    rows.append(twisted_row(params))
    return LinearCode(Matrix._raw(params.field, rows, params.n), TGRS, params)
