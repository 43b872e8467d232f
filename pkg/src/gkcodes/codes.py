"""Two-point AG codes C_L(D, G) and C_Omega(D, G) on the GK curve.

D is always the sum of all rational points except P0 and P_inf, in the
canonical point order; G = a1 P0 + a2 P_inf.  C_Omega is built as the dual of
C_L.  Every code carries a :class:`BoundCertificate` saying where its
minimum-distance lower bound comes from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from gkcodes import linalg
from gkcodes.curve import GKCurve
from gkcodes.errors import (
    DegreeOutOfRange,
    DimensionDropMismatch,
    HypothesisFailed,
    OracleViolation,
    TooLarge,
    TooManyCoordinates,
)
from gkcodes.gf import GaloisField
from gkcodes.rrspace import TwoPointDivisor, basis, ell
from gkcodes.semigroup import TwoPointSemigroup

EXHAUSTIVE_CAP = 10**7


@dataclass(frozen=True)
class BoundCertificate:
    value: int
    kind: str  # "goppa", "matthews" or "inherited"
    parameters: tuple = ()

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"distance bound must be >= 1, got {self.value}")


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: GaloisField
    length: int
    dimension: int
    gen_matrix: np.ndarray
    distance_bound: BoundCertificate
    divisor: TwoPointDivisor | None = None
    dual: bool = False
    # generator of the dual code when it is the natural way to get hold of it
    parity_check: np.ndarray | None = field(default=None, repr=False)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.length, self.dimension, self.distance_bound.value

    def __str__(self) -> str:
        n, k, d = self.params
        return f"[{n}, {k}, >={d}] ({self.distance_bound.kind})"

    def rank(self) -> int:
        return linalg.rank(self.field, self.gen_matrix)

    def encode(self, messages) -> np.ndarray:
        msgs = np.atleast_2d(np.asarray(messages, dtype=np.int64))
        return linalg.matmul(self.field, msgs, self.gen_matrix)


def _goppa_dual_bound(C: GKCurve, deg: int) -> int:
    return deg - 2 * C.genus + 2


def build_CL(C: GKCurve, G) -> LinearCode:
    """Evaluation code of L(G) on the standard point set."""
    G = G if isinstance(G, TwoPointDivisor) else TwoPointDivisor(*G)
    n_len = C.length
    if not 0 < G.degree < n_len:
        raise DegreeOutOfRange(f"need 0 < deg G < {n_len}, got {G.degree}")
    B = basis(C, G)
    gen, _ = linalg.rref(C.field, B.matrix)
    k = gen.shape[0]
    if G.degree > 2 * C.genus - 2 and k != G.degree - C.genus + 1:
        raise OracleViolation(f"dim C_L{tuple(G)} = {k}, expected {G.degree - C.genus + 1}")
    bound = BoundCertificate(n_len - G.degree, "goppa", (G.a1, G.a2))
    return LinearCode(C.field, n_len, k, gen.astype(C.field.dtype), bound, G)


def build_COmega(C: GKCurve, G) -> LinearCode:
    """Dual of C_L(D, G), with the designed bound deg G - 2g + 2."""
    G = G if isinstance(G, TwoPointDivisor) else TwoPointDivisor(*G)
    n_len = C.length
    if not 2 * C.genus - 2 < G.degree < n_len:
        raise DegreeOutOfRange(f"need {2 * C.genus - 2} < deg G < {n_len}, got {G.degree}")
    cl = build_CL(C, G)
    gen = linalg.nullspace(C.field, cl.gen_matrix, dtype=C.field.dtype)
    k = gen.shape[0]
    expected = n_len - G.degree + C.genus - 1
    if k != expected:
        raise OracleViolation(f"dim C_Omega = {k}, expected {expected}")
    bound = BoundCertificate(_goppa_dual_bound(C, G.degree), "goppa", (G.a1, G.a2))
    return LinearCode(C.field, n_len, k, gen, bound, G, dual=True, parity_check=cl.gen_matrix)


@dataclass(frozen=True)
class MatthewsCheck:
    """Outcome of the combinatorial hypothesis test for the improved bound."""

    a: tuple[int, int]
    b: tuple[int, int]
    orientation: str
    gap: bool
    dimension: bool
    t_max: int
    failed_t: int | None

    @property
    def passed(self) -> bool:
        return self.gap and self.dimension and self.failed_t is None

    @property
    def failure(self) -> tuple[str, int | None] | None:
        if not self.gap:
            return ("gap", None)
        if not self.dimension:
            return ("dimension", None)
        if self.failed_t is not None:
            return ("b-range", self.failed_t)
        return None


def check_matthews(T: TwoPointSemigroup, a, b, orientation: str = "p0") -> MatthewsCheck:
    """Test the three hypotheses without raising.

    ``orientation="p0"`` takes P0 as the first point of the bound (the
    coordinates of ``a`` and ``b`` are always listed as (P0, P_inf));
    ``"pinf"`` applies the bound with the two points exchanged.
    """
    if orientation == "p0":
        member = T.__contains__
        (a1, a2), (b1, b2) = a, b
    elif orientation == "pinf":
        def member(pair):
            return (pair[1], pair[0]) in T

        (a2, a1), (b2, b1) = a, b
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    g = T.g
    gap = not member((a1, a2))
    # ell(a1 P1 + a2 P2) == ell((a1-1) P1 + a2 P2)  <=>  no (a1, beta) in H, beta <= a2
    dimension = a1 >= 1 and not any(member((a1, beta)) for beta in range(a2 + 1))
    t_max = min(b2 - 1, 2 * g - 1 - (a1 + a2))
    failed = next((t for t in range(t_max + 1) if member((b1, b2 - t - 1))), None)
    return MatthewsCheck(tuple(a), tuple(b), orientation, gap, dimension, t_max, failed)


def apply_matthews(
    code: LinearCode,
    T: TwoPointSemigroup,
    a,
    b,
    *,
    curve: GKCurve | None = None,
    orientation: str = "p0",
) -> LinearCode:
    """Certify deg G - 2g + 3 for a dual code with G = (a1+b1-1, a2+b2-1).

    When ``curve`` is given, the dimension hypothesis is also decided by the
    rank oracle and the two answers must agree.
    """
    (a1, a2), (b1, b2) = a, b
    if min(a1, a2, b1, b2) <= 0:
        raise ValueError("a1, a2, b1, b2 must all be positive")
    G = TwoPointDivisor(a1 + b1 - 1, a2 + b2 - 1)
    if code.divisor != G or not code.dual:
        raise ValueError(f"code was not built as C_Omega(D, {tuple(G)})")
    res = check_matthews(T, (a1, a2), (b1, b2), orientation)
    if curve is not None:
        if orientation == "p0":
            by_rank = ell(curve, (a1, a2)) == ell(curve, (a1 - 1, a2))
        else:
            by_rank = ell(curve, (a1, a2)) == ell(curve, (a1, a2 - 1))
        if by_rank != res.dimension:
            raise OracleViolation(f"dimension hypothesis: closure says {res.dimension}, rank says {by_rank}")
    if not res.passed:
        which, t = res.failure
        raise HypothesisFailed(which, t, f"a={tuple(a)}, b={tuple(b)}")
    if code.dimension == 0:
        return code
    value = G.degree - 2 * T.g + 3
    cert = BoundCertificate(value, "matthews", (a1, b1, a2, b2))
    return replace(code, distance_bound=cert)


def shorten(code: LinearCode, s: int, positions=None) -> LinearCode:
    """Shortened code on ``positions`` (default: the first s coordinates)."""
    if s < 0 or s >= max(code.dimension, 1):
        raise TooManyCoordinates(f"need 0 <= s < k = {code.dimension}, got s = {s}")
    positions = list(range(s)) if positions is None else sorted(positions)
    if len(positions) != s:
        raise ValueError("len(positions) must equal s")
    if s == 0:
        return code
    gen = linalg.shortening_generator(code.field, code.gen_matrix, positions)
    if gen.shape[0] != code.dimension - s:
        raise DimensionDropMismatch(f"shortening dropped dimension to {gen.shape[0]}, expected {code.dimension - s}")
    old = code.distance_bound
    cert = BoundCertificate(old.value, "inherited", (old.kind, *old.parameters, s))
    return LinearCode(
        code.field,
        code.length - s,
        code.dimension - s,
        gen.astype(code.field.dtype),
        cert,
        code.divisor,
        code.dual,
    )


def min_weight_exhaustive(code: LinearCode, cap: int = EXHAUSTIVE_CAP) -> int:
    """Exact minimum distance by enumerating all messages."""
    F, k = code.field, code.dimension
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    if F.order**k > cap:
        raise TooLarge(f"{F.order}^{k} codewords exceed cap {cap}")
    G = np.asarray(code.gen_matrix, dtype=np.int64)
    elems = np.arange(F.order, dtype=np.int64)
    # inner span over the last t rows as a table, outer loop over the rest
    t = k
    while t > 0 and F.order**t > 10**5:
        t -= 1
    inner = np.zeros((1, code.length), dtype=np.int64)
    for row in G[k - t :]:
        inner = F.vadd(inner[:, None, :], F.vmul(elems[None, :, None], row[None, None, :])).reshape(-1, code.length)
    best = code.length
    for coeffs in itertools.product(range(F.order), repeat=k - t):
        outer = np.zeros(code.length, dtype=np.int64)
        for c, row in zip(coeffs, G[: k - t]):
            if c:
                outer = F.vadd(outer, F.vmul(c, row))
        words = F.vadd(inner, outer[None, :])
        weights = np.count_nonzero(words, axis=1)
        if not any(coeffs):
            weights = weights[1:]  # drop the zero word
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def duality_holds(a: LinearCode, b: LinearCode, trials: int = 0) -> bool:
    """a.gen @ b.gen^T == 0 (randomized when trials > 0)."""
    return linalg.product_is_zero(a.field, a.gen_matrix, b.gen_matrix, trials=trials)


def export_matrix(code: LinearCode, path) -> None:
    """Header ``q n k`` then k rows of n encoded elements."""
    path = Path(path)
    lines = [f"{code.field.order} {code.length} {code.dimension}"]
    lines += [" ".join(str(int(v)) for v in row) for row in np.asarray(code.gen_matrix)]
    path.write_text("\n".join(lines) + "\n")


def read_matrix(path) -> tuple[int, np.ndarray]:
    rows = Path(path).read_text().split("\n")
    q, n, k = (int(x) for x in rows[0].split())
    M = np.array([[int(x) for x in r.split()] for r in rows[1 : 1 + k]], dtype=np.int64).reshape(k, n)
    return q, M
