"""Dense polynomials and matrices over a :class:`~tgrs.gf.FieldSpec`.

Entries and coefficients are integer field codes (see :mod:`tgrs.gf`).
Row reduction is exact Gauss-Jordan elimination, so pivoting is simply the
first nonzero entry in each column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, IndexOutOfRange, SpecMismatch
from .gf import ElementLike, FieldSpec


def _same_field(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise SpecMismatch(f"{a} vs {b}")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients constant-term first, trailing zeros stripped."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [self.field.coerce(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> Union[int, float]:
        """Degree; ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: ElementLike) -> int:
        return poly_eval(self, x)

    def __add__(self, other: "Poly") -> "Poly":
        _same_field(self.field, other.field)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, tuple(F.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __mul__(self, other: "Poly") -> "Poly":
        _same_field(self.field, other.field)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, tuple(out))

    def format(self, var: str = "x") -> str:
        F = self.field
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                terms.append(F.format_element(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{F.format_element(c)}*{mono}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.format()


def monomial(field: FieldSpec, degree: int, coeff: int = 1) -> Poly:
    return Poly(field, (0,) * degree + (coeff,))


def poly_eval(f: Poly, x: ElementLike) -> int:
    F = f.field
    x = F.coerce(x)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_derivative(f: Poly) -> Poly:
    F = f.field
    # the integer multiplier i acts through the prime subfield
    return Poly(F, tuple(F.mul(i % F.p, f.coeffs[i]) for i in range(1, len(f.coeffs))))


def poly_from_roots(field: FieldSpec, roots: Iterable[ElementLike]) -> Poly:
    """Monic polynomial prod (x - r) over the given roots (repeats allowed)."""
    F = field
    cs = [1]
    for r in roots:
        nr = F.neg(F.coerce(r))
        nxt = [0] * (len(cs) + 1)
        for i, c in enumerate(cs):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.add(nxt[i], F.mul(c, nr))
        cs = nxt
    return Poly(F, tuple(cs))


def elementary_symmetric_all(field: FieldSpec, S: Sequence[ElementLike]) -> list[int]:
    """[sigma_0(S), ..., sigma_|S|(S)] read off the Vieta coefficients."""
    F = field
    f = poly_from_roots(F, S)
    n = len(S)
    out = []
    for l in range(n + 1):
        c = f.coeff(n - l)
        out.append(F.neg(c) if l % 2 else c)
    return out


def elementary_symmetric(field: FieldSpec, S: Sequence[ElementLike], l: int) -> int:
    if not 0 <= l <= len(S):
        raise IndexOutOfRange(f"sigma_{l} undefined for a set of size {len(S)}")
    return elementary_symmetric_all(field, S)[l]


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Row-major matrix of field codes.

    A matrix may have zero rows (e.g. the null space of an invertible
    matrix); the column count is always kept explicitly.
    """

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence[ElementLike]], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if ncols is None:
            if not self.rows:
                raise DimensionMismatch("column count required for a matrix without rows")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix rows")
        self.ncols = ncols

    @classmethod
    def _raw(cls, field: FieldSpec, rows: list[list[int]] | tuple, ncols: int) -> "Matrix":
        # trusted constructor: rows already hold valid codes
        M = cls.__new__(cls)
        M.field = field
        M.rows = tuple(tuple(r) for r in rows)
        M.ncols = ncols
        return M

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls._raw(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(field, [[0] * ncols for _ in range(nrows)], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.field, [[r[j] for j in idx] for r in self.rows], len(idx))

    def stack(self, other: "Matrix") -> "Matrix":
        _same_field(self.field, other.field)
        if self.ncols != other.ncols:
            raise DimensionMismatch(f"cannot stack {self.shape} on {other.shape}")
        return Matrix._raw(self.field, self.rows + other.rows, self.ncols)

    @property
    def T(self) -> "Matrix":
        return mat_transpose(self)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> list:
        F = self.field
        return [[F.element_json(x) for x in r] for r in self.rows]

    def format(self) -> str:
        F = self.field
        return "\n".join("[" + " ".join(F.format_element(x) for x in r) + "]" for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over {self.field}:\n{self.format()})"


def mat_transpose(M: Matrix) -> Matrix:
    return Matrix._raw(M.field, [M.column(j) for j in range(M.ncols)], M.nrows)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _same_field(A.field, B.field)
    if A.ncols != B.nrows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    F = A.field
    add, mul = F.add, F.mul
    cols = [B.column(j) for j in range(B.ncols)]
    out = []
    for r in A.rows:
        row = []
        for c in cols:
            acc = 0
            for x, y in zip(r, c):
                if x and y:
                    acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(row)
    return Matrix._raw(F, out, B.ncols)


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns."""
    F = M.field
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    A = [list(r) for r in M.rows]
    nrows, ncols = len(A), M.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = inv(A[r][c])
        if s != 1:
            A[r] = [mul(s, x) for x in A[r]]
        pr = A[r]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = neg(A[i][c])
                row = A[i]
                A[i] = [add(x, mul(f, y)) if y else x for x, y in zip(row, pr)]
        pivots.append(c)
        r += 1
    return Matrix._raw(F, A, ncols), r, pivots


def rank(M: Matrix) -> int:
    return rref(M)[1]


def null_space(M: Matrix) -> Matrix:
    """Basis of {x : M x^T = 0}, one row per free column in index order."""
    F = M.field
    R, r, pivots = rref(M)
    pivset = set(pivots)
    free = [j for j in range(M.ncols) if j not in pivset]
    basis = []
    for f in free:
        x = [0] * M.ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = F.neg(R.rows[i][f])
        basis.append(x)
    return Matrix._raw(F, basis, M.ncols)


def row_space(M: Matrix) -> Matrix:
    """Canonical basis of the row span: the nonzero rows of the RREF."""
    R, r, _ = rref(M)
    return Matrix._raw(M.field, R.rows[:r], M.ncols)


def row_span_contains(M: Matrix, vector: Sequence[ElementLike]) -> bool:
    F = M.field
    v = [F.coerce(x) for x in vector]
    if len(v) != M.ncols:
        raise DimensionMismatch(f"vector of length {len(v)} vs {M.ncols} columns")
    base = rank(M)
    return rank(M.stack(Matrix._raw(F, [v], M.ncols))) == base


def span_contains(A: Matrix, B: Matrix) -> bool:
    """True iff row-span(B) is a subspace of row-span(A)."""
    if B.nrows == 0:
        return True
    if A.nrows == 0:
        return B.is_zero()
    return rank(A.stack(B)) == rank(A)


def same_row_span(A: Matrix, B: Matrix) -> bool:
    _same_field(A.field, B.field)
    if A.ncols != B.ncols:
        raise DimensionMismatch(f"{A.shape} vs {B.shape}")
    return row_space(A) == row_space(B)
