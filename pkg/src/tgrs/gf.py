"""Finite fields GF(p^m) in an explicit polynomial basis.

Inside the library an element is an integer *code*

    c0 + c1*p + ... + c_{m-1}*p^(m-1),

where (c0, ..., c_{m-1}) are its coordinates on the basis 1, x, ..., x^(m-1)
modulo the field's monic irreducible modulus.  Matrices, polynomials and
code parameters all store codes; :class:`FieldElement` wraps a code together
with its field for interactive arithmetic with the usual operators.

Every field builds exp/log tables for its canonical primitive element at
construction time, so multiplication, inversion, powers and discrete logs
are table lookups.  Addition is XOR in characteristic 2, integer addition
mod p in prime fields and Zech logarithms otherwise.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

from ._moduli import DEFAULT_MODULI
from .errors import (
    DivisionByZero,
    NotPrime,
    NotPrimitive,
    ParseError,
    ReducibleModulus,
    SpecMismatch,
    UnsupportedSize,
)

MAX_DEFAULT_ORDER = 1 << 16
# odd-characteristic square roots: exhaustive scan up to this order
SQRT_SCAN_LIMIT = 1 << 12


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return (p, m) with q = p^m, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
    return None


# ---------------------------------------------------------------------------
# dense polynomials over GF(p), coefficient lists constant term first
# ---------------------------------------------------------------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _ptrim([x % p for x in a])
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _ptrim(a)
    return a


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _ptrim([x % p for x in a])
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    quo = [0] * (len(a) - db)
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        quo[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _ptrim(a)
    return _ptrim(quo), a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim([c % p for c in out])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive factor check: no monic factor of degree 1..m//2 divides."""
    m = len(modulus) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _pmod(modulus, list(low) + [1], p):
                return False
    return True


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, ordering by sum(c_i p^i)."""
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        if low[0] and is_irreducible(low + [1], p):
            return tuple(low + [1])
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class FieldSpec:
    """The finite field GF(p^m) with an explicit modulus.

    Build instances through :func:`field_make`, which validates the input and
    caches one object per (p, m, modulus).  All arithmetic methods take and
    return integer codes.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.q = p**m
        self._pows = [p**i for i in range(m)]
        self.generator = self._find_primitive()
        self._build_tables()

    # -- representation ----------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) > self.m:
            raise ValueError(f"expected at most {self.m} coordinates, got {len(cs)}")
        if any(not 0 <= c < self.p for c in cs):
            raise ValueError(f"coordinates must lie in [0, {self.p})")
        return sum(c * w for c, w in zip(cs, self._pows))

    def lex_key(self, a: int) -> tuple[int, ...]:
        """Sort key: lexicographic order of the coordinate vector (c0 first)."""
        return self.coeffs(a)

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def coerce(self, x: "ElementLike") -> int:
        """Accept a code, a coordinate tuple/list or a FieldElement."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise SpecMismatch(f"element of {x.field} used in {self}")
            return x.code
        if isinstance(x, (tuple, list)):
            return self.from_coeffs(list(x))
        if isinstance(x, int) and not isinstance(x, bool):
            if not 0 <= x < self.q:
                raise ValueError(f"element code {x} out of range for {self}")
            return x
        raise TypeError(f"cannot interpret {x!r} as an element of {self}")

    def __call__(self, x: "ElementLike") -> "FieldElement":
        return FieldElement(self, self.coerce(x))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    # -- raw arithmetic (table free), used to bootstrap and as an oracle ----

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _pmul(list(self.coeffs(a)), list(self.coeffs(b)), self.p)
        rem = _pmod(prod, self.modulus, self.p) if len(prod) > self.m else prod
        return self.from_coeffs(rem)

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _raw_add(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs([(x + y) % self.p for x, y in zip(ca, cb)])

    def _find_primitive(self) -> int:
        order = self.q - 1
        exps = [order // r for r in prime_factors(order)]
        for cs in itertools.product(range(self.p), repeat=self.m):
            a = self.from_coeffs(cs)
            if a and all(self._raw_pow(a, e) != 1 for e in exps):
                return a
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def _times_generator(self) -> "callable":
        # multiplication by the generator is GF(p)-linear; precompute basis images
        images = [self._raw_mul(self._pows[j], self.generator) for j in range(self.m)]
        if self.p == 2:
            def step(a: int) -> int:
                out = 0
                j = 0
                while a:
                    if a & 1:
                        out ^= images[j]
                    a >>= 1
                    j += 1
                return out
            return step
        img_coeffs = [self.coeffs(w) for w in images]
        p, m = self.p, self.m

        def step(a: int) -> int:
            acc = [0] * m
            for j, c in enumerate(self.coeffs(a)):
                if c:
                    for t, w in enumerate(img_coeffs[j]):
                        acc[t] += c * w
            return self.from_coeffs([x % p for x in acc])
        return step

    def _build_tables(self) -> None:
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [-1] * self.q
        step = self._times_generator()
        a = 1
        for i in range(n):
            exp[i] = a
            log[a] = i
            a = step(a)
        if a != 1 or any(log[x] < 0 for x in range(1, self.q)):
            raise AssertionError("exp table does not cover the multiplicative group")
        exp[n:] = exp[:n]
        self._exp = exp
        self._log = log
        self._zech: Optional[list[int]] = None
        if self.p != 2 and self.m > 1:
            # zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0
            p = self.p
            zech = [0] * n
            for d in range(n):
                x = exp[d]
                c0 = x % p
                s = x - c0 + (c0 + 1) % p
                zech[d] = log[s] if s else -1
            self._zech = zech

    # -- field operations on codes -----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.m == 1:
            return self.p - a
        return self._exp[self._log[a] + (self.q - 1) // 2]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def inv_euclid(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm on GF(p)[x] (table free)."""
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        p = self.p
        r0, r1 = list(self.modulus), _ptrim(list(self.coeffs(a)))
        s0, s1 = [], [1]
        while r1:
            quo, rem = _pdivmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quo, s1, p), p)
        # r0 is a nonzero constant
        c = pow(r0[0], -1, p)
        out = _pmod([x * c for x in s0], self.modulus, p) if len(s0) > self.m else [x * c % p for x in s0]
        return self.from_coeffs(out)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log to the canonical base :attr:`generator`."""
        if a == 0:
            raise DivisionByZero("log of 0")
        return self._log[a]

    def exp(self, e: int) -> int:
        return self._exp[e % (self.q - 1)]

    def order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        n = self.q - 1
        return n // math.gcd(self._log[a], n)

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self._log[a] % 2 == 0

    def sqrt(self, a: int) -> Optional[int]:
        """A square root of a, or None.

        Of the two roots r, -r the one with the lexicographically smaller
        coordinate vector is returned.
        """
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if not self.is_square(a):
            return None
        if self.q <= SQRT_SCAN_LIMIT:
            roots = [r for r in self.nonzero() if self.mul(r, r) == a]
        else:
            r = self._tonelli_shanks(a)
            roots = [r, self.neg(r)]
        return min(roots, key=self.lex_key)

    def _tonelli_shanks(self, a: int) -> int:
        # q - 1 = 2^s * t with t odd; the generator is a non-residue
        t, s = self.q - 1, 0
        while t % 2 == 0:
            t //= 2
            s += 1
        z = self.pow(self.generator, t)
        x = self.pow(a, (t + 1) // 2)
        b = self.pow(a, t)
        while b != 1:
            i, bb = 0, b
            while bb != 1:
                bb = self.mul(bb, bb)
                i += 1
            c = z
            for _ in range(s - i - 1):
                c = self.mul(c, c)
            x = self.mul(x, c)
            z = self.mul(c, c)
            b = self.mul(b, z)
            s = i
        return x

    def primitive_element(self) -> int:
        """Lexicographically smallest generator of the multiplicative group."""
        return self.generator

    def dlog(self, a: int, base: int) -> int:
        """Smallest e in [0, q-1) with base^e = a."""
        if a == 0 or base == 0:
            raise DivisionByZero("discrete log involving 0")
        n = self.q - 1
        lb = self._log[base]
        if math.gcd(lb, n) != 1:
            raise NotPrimitive(f"{self.format_element(base)} does not generate the multiplicative group")
        return self._log[a] * pow(lb, -1, n) % n if n > 1 else 0

    # -- text forms ----------------------------------------------------------

    def format_element(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        return "(" + ",".join(map(str, self.coeffs(a))) + ")"

    def element_json(self, a: int) -> Union[int, list[int]]:
        return a if self.m == 1 else list(self.coeffs(a))

    def parse_element(self, text: str) -> int:
        """Parse ``(c0,...)``, ``g^e`` (power of the generator) or a bare integer.

        A bare integer is an element code; below p it is the residue itself.
        """
        s = text.strip().replace(" ", "")
        try:
            if s.startswith("g^"):
                return self.exp(int(s[2:]))
            if s.startswith("(") and s.endswith(")"):
                cs = [int(c) for c in s[1:-1].split(",")]
                if len(cs) != self.m:
                    raise ValueError(f"expected {self.m} coordinates")
                return self.from_coeffs(cs)
            r = int(s)
        except ValueError as exc:
            raise ParseError(f"bad element {text!r} for {self}: {exc}") from None
        if not 0 <= r < self.q:
            raise ParseError(f"element code {r} out of range for {self}")
        return r

    def element_from_json(self, obj) -> int:
        if isinstance(obj, str):
            return self.parse_element(obj)
        if isinstance(obj, list):
            if len(obj) != self.m:
                raise ParseError(f"expected {self.m} coordinates, got {obj!r}")
            try:
                return self.from_coeffs(obj)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        if isinstance(obj, int) and not isinstance(obj, bool) and 0 <= obj < self.q:
            return obj
        raise ParseError(f"bad element {obj!r} for {self}")

    def __str__(self) -> str:
        return f"GF({self.p}^{self.m}; modulus={','.join(map(str, self.modulus))})"

    def __repr__(self) -> str:
        return f"FieldSpec({self})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))


@lru_cache(maxsize=None)
def _make_cached(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def field_make(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Validated GF(p^m).

    ``modulus`` is a coefficient list, constant term first, of a monic
    irreducible polynomial of degree m.  When omitted, the built-in default
    for (p, m) is used; defaults exist for every p^m <= 2^16.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        if p**m > MAX_DEFAULT_ORDER:
            raise UnsupportedSize(f"no default modulus for GF({p}^{m}); supply one")
        modulus = (0, 1) if m == 1 else DEFAULT_MODULI[(p, m)]
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {m}")
    if any(not 0 <= c < p for c in modulus):
        raise ValueError(f"modulus coefficients must lie in [0, {p})")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
    return _make_cached(p, m, modulus)


_FIELD_RE = re.compile(
    r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*modulus\s*=\s*([\d,\s]+))?\)\s*$"
)


def parse_field(text: str) -> FieldSpec:
    """Parse ``GF(p^m; modulus=c0,...,cm)``, ``GF(p^m)`` or ``GF(q)``."""
    mo = _FIELD_RE.match(text)
    if not mo:
        raise ParseError(f"malformed field spec {text!r}")
    base, exp, mod = mo.groups()
    base = int(base)
    if exp is None:
        pm = prime_power(base)
        if pm is None:
            raise ParseError(f"{base} is not a prime power")
        p, m = pm
    else:
        p, m = base, int(exp)
    modulus = None
    if mod is not None:
        try:
            modulus = [int(c) for c in mod.split(",")]
        except ValueError:
            raise ParseError(f"malformed modulus in {text!r}") from None
    return field_make(p, m, modulus)


class FieldElement:
    """An element of a specific field, with arithmetic operators."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise SpecMismatch(f"{self.field} vs {other.field}")
            return other.code
        if isinstance(other, int) and not isinstance(other, bool):
            # integers act through the prime subfield
            return other % self.field.p
        return NotImplemented

    def _wrap(self, code: int) -> "FieldElement":
        return FieldElement(self.field, code)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.code))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.code))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.code))

    def sqrt(self) -> Optional["FieldElement"]:
        r = self.field.sqrt(self.code)
        return None if r is None else self._wrap(r)

    def dlog(self, base: "FieldElement") -> int:
        return self.field.dlog(self.code, self._other(base))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int) and not isinstance(other, bool) and self.field.m == 1:
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __str__(self) -> str:
        return self.field.format_element(self.code)

    def __repr__(self) -> str:
        return f"FieldElement({self.field.format_element(self.code)} in GF({self.field.p}^{self.field.m}))"


ElementLike = Union[int, Sequence[int], FieldElement]


def coerce_all(field: FieldSpec, xs: Iterable[ElementLike]) -> tuple[int, ...]:
    return tuple(field.coerce(x) for x in xs)


def iter_lex(field: FieldSpec) -> Iterator[int]:
    """All elements, in lexicographic order of coordinate vectors."""
    for cs in itertools.product(range(field.p), repeat=field.m):
        yield field.from_coeffs(cs)
