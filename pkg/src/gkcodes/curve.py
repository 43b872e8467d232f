"""The GK maximal curve over GF(n^6).

Affine model::

    Z^(n^2-n+1) = Y h(X),     X^n + X = Y^(n+1),
    h(X) = sum_{i=0..n} (-1)^(i+1) X^(i(n-1)).

P0 is the affine point (0, 0, 0) and P_inf the unique point at infinity.
Functions are monomials y^i z^j x^(-k) with 0 <= i <= n, 0 <= j <= n^2-n and
k any integer; their pole orders at P0 and P_inf are linear in (i, j, k).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from gkcodes.errors import (
    ExponentOutOfRange,
    InfinityNotEvaluable,
    NotPrimePower,
    PoleAtPoint,
    PointNotOnCurve,
)
from gkcodes.gf import FieldElement, GaloisField, field_create, is_prime


def prime_power(n: int) -> tuple[int, int]:
    """Return (p, e) with n = p^e, or raise NotPrimePower."""
    if n >= 2:
        for p in range(2, n + 1):
            if n % p == 0:
                if not is_prime(p):
                    break
                e, r = 0, n
                while r % p == 0:
                    r //= p
                    e += 1
                if r == 1:
                    return p, e
                break
    raise NotPrimePower(f"{n} is not a prime power")


class Monomial(NamedTuple):
    """The function y^i z^j / x^k (k may be negative)."""

    i: int
    j: int
    k: int


class PolePair(NamedTuple):
    """Pole orders at (P0, P_inf); a negative entry is a zero of that order."""

    at_p0: int
    at_pinf: int


class Orbit(Enum):
    O1 = "O1"
    O2 = "O2"


@dataclass(frozen=True)
class CurvePoint:
    """A rational point; ``a``, ``b``, ``c`` are None for the point at infinity."""

    kind: str
    a: FieldElement | None = None
    b: FieldElement | None = None
    c: FieldElement | None = None

    @property
    def is_infinity(self) -> bool:
        return self.kind == "infinity"

    def encode(self) -> tuple[int, int, int] | None:
        if self.is_infinity:
            return None
        return int(self.a), int(self.b), int(self.c)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "P_inf"
        return f"P({int(self.a)},{int(self.b)},{int(self.c)})"


INFINITY = CurvePoint("infinity")


class GKCurve:
    """GK curve for a prime power ``n``; use :func:`curve_create`."""

    def __init__(self, n: int):
        p, e = prime_power(n)
        self.n = n
        self.p = p
        self.e = e
        self.q = n**3
        self.field: GaloisField = field_create(p, 6 * e)
        self.genus = (n**5 - 2 * n**3 + n**2) // 2
        # h coefficients in GF(p), index = degree
        h = [0] * (n * (n - 1) + 1)
        for i in range(n + 1):
            h[i * (n - 1)] = (h[i * (n - 1)] + (-1) ** (i + 1)) % p
        self.h_coeffs = tuple(h)
        self.z_exponent = n * n - n + 1
        self._points: list[CurvePoint] | None = None
        self._encoded: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"GKCurve(n={self.n})"

    # counts
    @property
    def expected_point_count(self) -> int:
        n = self.n
        return n**8 - n**6 + n**5 + 1

    @property
    def length(self) -> int:
        """Length of the two-point codes: all rational points but P0, P_inf."""
        return self.expected_point_count - 2

    @property
    def p0(self) -> CurvePoint:
        z = self.field.zero
        return CurvePoint("affine", z, z, z)

    @property
    def p_inf(self) -> CurvePoint:
        return INFINITY

    def h(self, a: FieldElement) -> FieldElement:
        out = self.field.zero
        for d, c in enumerate(self.h_coeffs):
            if c:
                out = out + c * a**d
        return out

    def _vh(self, a: np.ndarray) -> np.ndarray:
        F = self.field
        out = np.zeros_like(a)
        for d, c in enumerate(self.h_coeffs):
            if c:
                out = F.vadd(out, F.vmul(c, F.vpow(a, d)))
        return out

    def on_curve(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        n = self.n
        return (P.a**n + P.a == P.b ** (n + 1)) and (P.c**self.z_exponent == P.b * self.h(P.a))

    # ------------------------------------------------------------ points
    def affine_points_encoded(self) -> np.ndarray:
        """All affine rational points as an (N, 3) int array sorted by (a, b, c)."""
        if self._encoded is None:
            self._encoded = self._enumerate_affine()
        return self._encoded

    def _enumerate_affine(self) -> np.ndarray:
        F, n = self.field, self.n
        elems = np.arange(F.order, dtype=np.int64)
        trace_like = F.vadd(F.vpow(elems, n), elems)  # a -> a^n + a
        norm_like = F.vpow(elems, n + 1)  # b -> b^(n+1)
        cpow = F.vpow(elems, self.z_exponent)
        h_vals = self._vh(elems)
        fiber_a = _fibers(trace_like)
        fiber_c = _fibers(cpow)
        pts = []
        for b in range(F.order):
            for a in fiber_a.get(int(norm_like[b]), ()):
                rhs = int(F.vmul(b, h_vals[a]))
                for c in fiber_c.get(rhs, ()):
                    pts.append((a, b, c))
        arr = np.array(sorted(pts), dtype=np.int64).reshape(-1, 3)
        return arr

    def points(self) -> list[CurvePoint]:
        if self._points is None:
            F = self.field
            out = [INFINITY]
            for a, b, c in self.affine_points_encoded():
                out.append(CurvePoint("affine", F.from_int(int(a)), F.from_int(int(b)), F.from_int(int(c))))
            self._points = out
        return self._points

    def evaluation_set(self) -> np.ndarray:
        """Encoded points of the standard divisor D: everything except P0, P_inf."""
        pts = self.affine_points_encoded()
        keep = ~np.all(pts == 0, axis=1)
        return pts[keep]

    def evaluation_points(self) -> list[CurvePoint]:
        return [P for P in self.points()[1:] if P.encode() != (0, 0, 0)]

    # ------------------------------------------------------- monomials
    def check_monomial(self, mono: Monomial) -> None:
        i, j, _ = mono
        if not (0 <= i <= self.n and 0 <= j <= self.n * self.n - self.n):
            raise ExponentOutOfRange(f"{mono} outside 0<=i<={self.n}, 0<=j<={self.n * self.n - self.n}")

    def monomial_values(self, monos, pts: np.ndarray | None = None) -> np.ndarray:
        """Evaluation matrix: row r holds monomial r evaluated at each point.

        ``pts`` is an (N, 3) array of encoded affine points (default: the
        standard evaluation set).
        """
        F = self.field
        pts = self.evaluation_set() if pts is None else np.asarray(pts, dtype=np.int64)
        monos = list(monos)
        if not monos:
            return np.zeros((0, len(pts)), dtype=np.int64)
        for mo in monos:
            self.check_monomial(Monomial(*mo))
        I, J, K = (np.array(col, dtype=np.int64)[:, None] for col in zip(*monos))
        a, b, c = pts[:, 0][None, :], pts[:, 1][None, :], pts[:, 2][None, :]
        if np.any((a == 0) & (K > 0)):
            raise PoleAtPoint("x^-k with k > 0 evaluated at a point with a = 0")
        expo = I * F.vlog(b) + J * F.vlog(c) - K * F.vlog(a)
        vals = F.vexp(expo)
        zero = ((b == 0) & (I > 0)) | ((c == 0) & (J > 0)) | ((a == 0) & (K < 0))
        return np.where(zero, 0, vals)


def _fibers(values: np.ndarray) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for x, v in enumerate(values.tolist()):
        out.setdefault(v, []).append(x)
    return out


@functools.lru_cache(maxsize=None)
def curve_create(n: int) -> GKCurve:
    return GKCurve(n)


def enumerate_points(C: GKCurve) -> list[CurvePoint]:
    """P_inf first, then affine points ordered by their (a, b, c) encodings."""
    return C.points()


def classify_orbit(C: GKCurve, P: CurvePoint) -> Orbit:
    if not C.on_curve(P):
        raise PointNotOnCurve(repr(P))
    if P.is_infinity or P.c.is_zero():
        return Orbit.O1
    return Orbit.O2


def pole_pair(C: GKCurve, mono: Monomial) -> PolePair:
    C.check_monomial(mono)
    n = C.n
    i, j, k = mono
    return PolePair(
        k * (n**3 + 1) - i * (n * n - n + 1) - j,
        i * (n**3 - n * n + n) + j * n**3 - k * (n**3 + 1),
    )


def evaluate_monomial(C: GKCurve, mono: Monomial, P: CurvePoint) -> FieldElement:
    """b^i c^j a^-k at an affine point."""
    C.check_monomial(mono)
    if P.is_infinity:
        raise InfinityNotEvaluable("monomials are evaluated at affine points only")
    i, j, k = mono
    if k > 0 and P.a.is_zero():
        raise PoleAtPoint(f"{mono} has a pole at {P!r}")
    return P.b**i * P.c**j * P.a ** (-k)
