"""Riemann-Roch spaces L(a1 P0 + a2 P_inf) spanned by monomials.

Dimensions come from the rank of the evaluation matrix on the standard point
set D (all rational points except P0 and P_inf).  This is exact whenever
deg < |D|: a nonzero function in L(G) cannot vanish at more than deg G points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gkcodes import linalg
from gkcodes.curve import GKCurve, Monomial, pole_pair
from gkcodes.errors import DegreeTooLarge, OracleViolation


@dataclass(frozen=True)
class TwoPointDivisor:
    a1: int  # coefficient of P0
    a2: int  # coefficient of P_inf

    def __post_init__(self):
        if self.a1 < 0 or self.a2 < 0:
            raise ValueError(f"only effective divisors are supported, got {self}")

    @property
    def degree(self) -> int:
        return self.a1 + self.a2

    def __iter__(self):
        return iter((self.a1, self.a2))


@dataclass(frozen=True)
class FunctionBasis:
    divisor: TwoPointDivisor
    monomials: tuple[Monomial, ...]
    matrix: np.ndarray  # rows = evaluations of `monomials` at the point set

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def _as_divisor(D) -> TwoPointDivisor:
    return D if isinstance(D, TwoPointDivisor) else TwoPointDivisor(*D)


def _candidates(C: GKCurve, a1: int, a2: int) -> list[Monomial]:
    n = C.n
    N = n**3 + 1
    out = []
    for i in range(n + 1):
        for j in range(n * n - n + 1):
            u = i * (n * n - n + 1) + j  # at_p0 = kN - u <= a1
            w = i * (n**3 - n * n + n) + j * n**3  # at_pinf = w - kN <= a2
            k_lo = -((a2 - w) // N)  # ceil((w - a2) / N)
            k_hi = (a1 + u) // N
            out += [Monomial(i, j, k) for k in range(k_lo, k_hi + 1)]
    out.sort(key=lambda mo: (*pole_pair(C, mo), *mo))
    return out


def candidate_monomials(C: GKCurve, D) -> list[Monomial]:
    """Monomials whose poles at P0 and P_inf are bounded by D."""
    a1, a2 = _as_divisor(D)
    return _candidates(C, a1, a2)


def _check_degree(C: GKCurve, degree: int, npts: int) -> None:
    if degree >= npts:
        raise DegreeTooLarge(f"deg {degree} >= {npts} evaluation points")


def basis(C: GKCurve, D, pts: np.ndarray | None = None) -> FunctionBasis:
    """Greedy maximal independent subset of candidate_monomials(C, D)."""
    D = _as_divisor(D)
    pts = C.evaluation_set() if pts is None else np.asarray(pts, dtype=np.int64)
    _check_degree(C, D.degree, len(pts))
    cands = _candidates(C, D.a1, D.a2)
    M = C.monomial_values(cands, pts)
    keep = linalg.independent_rows(C.field, M)
    return FunctionBasis(D, tuple(cands[r] for r in keep), M[keep])


def ell(C: GKCurve, D, pts: np.ndarray | None = None) -> int:
    return basis(C, D, pts).dimension


def ell_signed(C: GKCurve, a1: int, a2: int, pts: np.ndarray | None = None) -> int:
    """ell for coefficients >= -1.

    A coefficient of -1 means a forced zero at that point: the basis of the
    divisor with the coefficient raised to 0 is computed, and the evaluation
    at the point is appended as one homogeneous condition.
    """
    if a1 < -1 or a2 < -1:
        raise ValueError("coefficients below -1 are not supported")
    if a1 == -1 and a2 == -1:
        return 0
    B = basis(C, TwoPointDivisor(max(a1, 0), max(a2, 0)), pts)
    conditions = []
    if a1 == -1:
        conditions.append([_value_at(C, mo, 0) for mo in B.monomials])
    if a2 == -1:
        conditions.append([_value_at(C, mo, 1) for mo in B.monomials])
    if not conditions:
        return B.dimension
    # kernel dimension of the coefficient map c -> (conditions) c
    return B.dimension - linalg.rank(C.field, np.array(conditions, dtype=np.int64))


def _value_at(C: GKCurve, mono: Monomial, which: int) -> int:
    """Value (encoded) of a monomial regular at P0 (which=0) or P_inf (which=1)."""
    order = pole_pair(C, mono)[which]
    if order > 0:
        raise OracleViolation(f"{mono} has a pole at the evaluation point")
    if order < 0:
        return 0
    # pole order 0 at either point forces the constant monomial
    if mono != Monomial(0, 0, 0):
        raise OracleViolation(f"non-constant {mono} without zero or pole")
    return 1


def pair_in_H_by_rank(C: GKCurve, pair, pts: np.ndarray | None = None) -> bool:
    """Two-point semigroup membership from the dimension criterion.

    (a1, a2) is in H(P0, P_inf) iff both unit decrements lower ell by one.
    """
    a1, a2 = pair
    if a1 < 0 or a2 < 0:
        return False
    if (a1, a2) == (0, 0):
        return True
    npts = C.length if pts is None else len(pts)
    _check_degree(C, a1 + a2, npts)
    full = ell_signed(C, a1, a2, pts)
    return ell_signed(C, a1 - 1, a2, pts) + 1 == full and ell_signed(C, a1, a2 - 1, pts) + 1 == full


def riemann_roch_check(C: GKCurve, D, pts: np.ndarray | None = None) -> int:
    """ell(D), verified against deg D - g + 1 when deg D > 2g - 2."""
    D = _as_divisor(D)
    value = ell(C, D, pts)
    if D.degree > 2 * C.genus - 2 and value != D.degree - C.genus + 1:
        raise OracleViolation(f"ell{tuple(D)} = {value}, but Riemann-Roch gives {D.degree - C.genus + 1}")
    return value

