"""Arithmetic in GF(p) and GF(p^m).

Elements are polynomials over GF(p) of degree < m, reduced modulo a fixed
monic irreducible polynomial.  A :class:`FieldElement` stores its coefficient
vector ``(c0, ..., c_{m-1})``; its integer encoding is ``sum(c_i * p**i)``,
which is also the format used in every exported file.

Besides the scalar API there is a vectorized one (``vadd``, ``vmul``, ...)
working on numpy arrays of integer encodings.  It is backed by log/antilog
tables that are built lazily from the scalar arithmetic, so both paths agree
by construction; the test-suite checks this exhaustively on small fields.
"""

from __future__ import annotations

import functools
import itertools
import threading
from collections.abc import Iterable, Sequence

import numpy as np

from gkcodes.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    NotADivisor,
    NotPrime,
)

MAX_DEGREE = 12
# full 2-D addition table only below this order (odd characteristic)
_ADD_TABLE_MAX_ORDER = 2187


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# polynomial helpers on coefficient lists (least-degree first), over GF(p)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a / b over GF(p); b is monic."""
    r = _trim(list(a))
    db = len(b) - 1
    while len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        _trim(r)
    return r


def _monics(p: int, d: int) -> Iterable[tuple[int, ...]]:
    for low in itertools.product(range(p), repeat=d):
        yield low + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for div in _monics(p, d):
            if not _poly_mod(poly, div, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m.

    Candidates are ordered by the tuple ``(c0, ..., c_{m-1})``.
    """
    for low in itertools.product(range(p), repeat=m):
        poly = low + (1,)
        if m == 1 or is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GaloisField:
    """The finite field GF(p^m) in polynomial representation.

    Use :func:`field_create` rather than the constructor so that equal
    parameters share one instance (and one set of lookup tables).
    """

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if not 1 <= m <= MAX_DEGREE:
            raise DegreeOutOfRange(f"extension degree must be in [1, {MAX_DEGREE}], got {m}")
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = smallest_irreducible(p, m)
        self._powers = tuple(p**i for i in range(m))
        self._tables_lock = threading.Lock()
        self._tables: dict[str, np.ndarray] | None = None
        self._primitive: FieldElement | None = None

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def dtype(self):
        return np.uint16 if self.order <= 1 << 16 else np.uint32

    # ----------------------------------------------------------- elements
    def __call__(self, value: int | Sequence[int]) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch(f"element of {value.field} given to {self}")
            return value
        if isinstance(value, (int, np.integer)):
            return self.from_int(int(value))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_int(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise ValueError(f"encoding {value} out of range for {self}")
        coeffs = []
        for _ in range(self.m):
            value, c = divmod(value, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def elements(self) -> list[FieldElement]:
        """All elements, ordered by integer encoding (lexicographic on coeffs)."""
        return [self.from_int(v) for v in range(self.order)]

    @property
    def primitive_element(self) -> FieldElement:
        """Smallest-encoded generator of the multiplicative group."""
        if self._primitive is None:
            n = self.order - 1
            cofactors = [n // r for r in prime_factors(n)] if n > 1 else []
            for v in range(1, self.order):
                e = self.from_int(v)
                if all(e**c != self.one for c in cofactors):
                    self._primitive = e
                    break
        return self._primitive

    # --------------------------------------------------------- scalar ops
    def _mul_coeffs(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        prod = [c % p for c in prod]
        r = _poly_mod(prod, self.modulus, p)
        return tuple(r + [0] * (m - len(r)))

    # ------------------------------------------------------------- tables
    def tables(self) -> dict[str, np.ndarray]:
        """Lookup tables for the vectorized API, built once on first use."""
        if self._tables is None:
            with self._tables_lock:
                if self._tables is None:
                    self._tables = self._build_tables()
        return self._tables

    def _build_tables(self) -> dict[str, np.ndarray]:
        q = self.order
        g = self.primitive_element
        exp = np.zeros(2 * (q - 1) + 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = self.one
        for i in range(q - 1):
            v = int(cur)
            exp[i] = v
            log[v] = i
            cur = cur * g
        exp[q - 1 : 2 * (q - 1)] = exp[: q - 1]
        exp[2 * (q - 1)] = exp[0]
        codes = np.arange(q, dtype=np.int64)
        neg = self._digit_neg(codes)
        tables = {"exp": exp, "log": log, "neg": neg}
        if self.p != 2 and q <= _ADD_TABLE_MAX_ORDER:
            a = np.repeat(codes, q)
            b = np.tile(codes, q)
            tables["add"] = self._digit_add(a, b).reshape(q, q)
        return tables

    def _digit_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._powers:
            out += (((a // w) % p + (b // w) % p) % p) * w
        return out

    def _digit_neg(self, a: np.ndarray) -> np.ndarray:
        p = self.p
        out = np.zeros_like(a)
        for w in self._powers:
            out += ((-((a // w) % p)) % p) * w
        return out

    # ------------------------------------------------------- vector ops
    def asarray(self, values) -> np.ndarray:
        return np.asarray(values, dtype=np.int64)

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        t = self.tables()
        if "add" in t:
            return t["add"][a, b]
        return self._digit_add(a, b)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        return self.tables()["neg"][a]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        t = self.tables()
        log, exp = t["log"], t["exp"]
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        t = self.tables()
        return t["exp"][(self.order - 1 - t["log"][a]) % (self.order - 1)]

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            a = self.vinv(a)
            e = -e
        t = self.tables()
        out = t["exp"][(t["log"][a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def vlog(self, a) -> np.ndarray:
        """Discrete log base the primitive element (undefined at 0, returns 0)."""
        return self.tables()["log"][np.asarray(a, dtype=np.int64)]

    def vexp(self, e) -> np.ndarray:
        return self.tables()["exp"][np.asarray(e, dtype=np.int64) % (self.order - 1)]


class FieldElement:
    """Immutable element of a :class:`GaloisField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GaloisField, coeffs: tuple[int, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other) -> FieldElement:
        if isinstance(other, (int, np.integer)):
            # integers embed through the prime subfield
            return self.field((int(other) % self.field.p,))
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field is not self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __int__(self) -> int:
        return sum(c * w for c, w in zip(self.coeffs, self.field._powers))

    __index__ = __int__

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.m, self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return other.field is self.field and other.coeffs == self.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"{self.field!r}({int(self)})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        # square-and-multiply
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, d: int = 1) -> FieldElement:
        return self ** (self.field.p**d)


@functools.lru_cache(maxsize=None)
def field_create(p: int, m: int) -> GaloisField:
    """Return the (cached) field GF(p^m)."""
    return GaloisField(p, m)


# functional spellings, mirroring the operator overloads


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def in_subfield(e: FieldElement, d: int) -> bool:
    """True iff ``e`` lies in the subfield GF(p^d), i.e. e^(p^d) == e."""
    if d <= 0 or e.field.m % d:
        raise NotADivisor(f"{d} does not divide {e.field.m}")
    return e.frobenius(d) == e


def enumerate_elements(field: GaloisField) -> list[FieldElement]:
    return field.elements()
