"""Search for two-point dual codes certified by the improved bound.

The hypothesis test runs against the precomputed membership grid: the
dimension hypothesis on (a1, a2) reads off the first member in row a1, and
the range hypothesis on (b1, b2) is a lookup in a table of gap-run lengths.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from gkcodes.codes import LinearCode, apply_matthews, build_COmega, shorten
from gkcodes.curve import GKCurve, curve_create
from gkcodes.errors import DegreeOutOfRange, OracleViolation, SRangeTooLarge
from gkcodes.rrspace import ell
from gkcodes.semigroup import TwoPointSemigroup

Range = tuple[int, int]


@dataclass(frozen=True)
class SearchSpec:
    n: int
    deg_min: int | None = None
    deg_max: int | None = None
    a_box: tuple[Range, Range] | None = None
    b_box: tuple[Range, Range] | None = None
    cross_check: bool = False
    orientation: str = "p0"

    def resolved(self, C: GKCurve) -> SearchSpec:
        """Fill in defaults: deg G in (2g-2, 4g], coordinates in [1, 2g]."""
        g = C.genus
        deg_min = 2 * g - 1 if self.deg_min is None else self.deg_min
        deg_max = min(4 * g, C.length - 1) if self.deg_max is None else self.deg_max
        if not 2 * g - 2 < deg_min <= deg_max < C.length:
            raise DegreeOutOfRange(f"need {2 * g - 2} < deg_min <= deg_max < {C.length}")
        box = ((1, 2 * g), (1, 2 * g))
        return SearchSpec(
            self.n,
            deg_min,
            deg_max,
            self.a_box or box,
            self.b_box or box,
            self.cross_check,
            self.orientation,
        )


@dataclass(frozen=True)
class CodeRecord:
    n_len: int
    k: int
    d_bound: int
    kind: str
    a1: int | None = None
    b1: int | None = None
    a2: int | None = None
    b2: int | None = None
    s: int = 0
    comparator: CodeRecord | None = field(default=None, compare=False)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.n_len, self.k, self.d_bound

    @property
    def divisor(self) -> tuple[int, int]:
        return self.a1 + self.b1 - 1, self.a2 + self.b2 - 1

    def as_json(self) -> dict:
        return {
            "n": self.n_len,
            "k": self.k,
            "d_bound": self.d_bound,
            "kind": self.kind,
            "a1": self.a1,
            "b1": self.b1,
            "a2": self.a2,
            "b2": self.b2,
            "s": self.s,
        }

    def __str__(self) -> str:
        q = "" if self.a1 is None else f" a=({self.a1},{self.a2}) b=({self.b1},{self.b2})"
        s = f" s={self.s}" if self.s else ""
        return f"[{self.n_len}, {self.k}, >={self.d_bound}] {self.kind}{q}{s}"


def one_point_baseline(C: GKCurve, deg: int) -> CodeRecord:
    """Designed-distance record of the one-point dual code C_Omega(D', deg P_inf).

    D' keeps P0, so the length is one more than for the two-point codes.
    """
    n1 = C.length + 1
    if not 2 * C.genus - 2 < deg < n1:
        raise DegreeOutOfRange(f"need {2 * C.genus - 2} < deg < {n1}, got {deg}")
    return CodeRecord(n1, n1 - deg + C.genus - 1, deg - 2 * C.genus + 2, "goppa-one-point")


def _gap_runs(gaps: np.ndarray) -> np.ndarray:
    """runs[r, x] = number of consecutive gaps (r, x), (r, x-1), ... ."""
    runs = np.zeros(gaps.shape, dtype=np.int64)
    runs[:, 0] = gaps[:, 0]
    for x in range(1, gaps.shape[1]):
        runs[:, x] = (runs[:, x - 1] + 1) * gaps[:, x]
    return runs


def search_matthews(
    spec: SearchSpec,
    T: TwoPointSemigroup | None = None,
    *,
    dedupe: bool = False,
    threads: int = 1,
) -> list[CodeRecord]:
    """All quadruples passing the hypothesis test, sorted by (k desc, d desc, params).

    With ``dedupe`` only the first record per (length, dimension) is kept.
    """
    C = curve_create(spec.n)
    spec = spec.resolved(C)
    g = C.genus
    T = T or TwoPointSemigroup.for_curve(C)
    (a1r, a2r), (b1r, b2r) = spec.a_box, spec.b_box
    bound = max(a1r[1], a2r[1], b1r[1], b2r[1], 2 * g) + 1
    grid = T.grid(bound)
    if spec.orientation == "pinf":
        grid = grid.T
        # the bound's first point is P_inf; swap boxes into that frame
        a1r, a2r, b1r, b2r = a2r, a1r, b2r, b1r
    elif spec.orientation != "p0":
        raise ValueError(f"unknown orientation {spec.orientation!r}")
    # first member of each row; every row has one inside a box of size >= 2g
    first_member = np.argmax(grid, axis=1)
    runs = _gap_runs(~grid)

    a_cands = [
        (a1, a2)
        for a1 in range(a1r[0], a1r[1] + 1)
        for a2 in range(a2r[0], a2r[1] + 1)
        if first_member[a1] > a2
    ]
    if spec.cross_check:
        _cross_check(C, a_cands, spec.orientation)

    def stratum(a):
        a1, a2 = a
        t_cap = 2 * g - 1 - (a1 + a2)
        out = []
        for deg in range(spec.deg_min, spec.deg_max + 1):
            total = deg + 2 - a1 - a2  # b1 + b2
            b1 = np.arange(b1r[0], b1r[1] + 1)
            b2 = total - b1
            ok = (b2 >= max(b2r[0], 1)) & (b2 <= b2r[1])
            b1, b2 = b1[ok], b2[ok]
            if not b1.size:
                continue
            need = np.minimum(b2 - 1, t_cap) + 1
            passed = runs[b1, b2 - 1] >= need
            for x1, x2 in zip(b1[passed].tolist(), b2[passed].tolist()):
                out.append(_record(C, deg, a1, a2, x1, x2, spec.orientation))
        return out

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            chunks = list(pool.map(stratum, a_cands))
    else:
        chunks = [stratum(a) for a in a_cands]
    records = sorted(
        (r for chunk in chunks for r in chunk),
        key=lambda r: (-r.k, -r.d_bound, r.a1, r.b1, r.a2, r.b2),
    )
    if dedupe:
        seen = set()
        unique = []
        for r in records:
            if (r.n_len, r.k) not in seen:
                seen.add((r.n_len, r.k))
                unique.append(r)
        records = unique
    return records


def _record(C: GKCurve, deg: int, a1: int, a2: int, b1: int, b2: int, orientation: str) -> CodeRecord:
    if orientation == "pinf":
        a1, a2, b1, b2 = a2, a1, b2, b1
    n_len, g = C.length, C.genus
    return CodeRecord(
        n_len,
        n_len - deg + g - 1,
        deg - 2 * g + 3,
        "matthews",
        a1,
        b1,
        a2,
        b2,
        comparator=one_point_baseline(C, deg),
    )


def _cross_check(C: GKCurve, a_cands, orientation: str) -> None:
    for a1, a2 in a_cands:
        # candidates are in the bound's frame; map back to (P0, P_inf)
        d0 = (a1, a2) if orientation == "p0" else (a2, a1)
        lower = (d0[0] - 1, d0[1]) if orientation == "p0" else (d0[0], d0[1] - 1)
        if ell(C, d0) != ell(C, lower):
            raise OracleViolation(f"dimension filter accepted {d0} but ranks differ")


def expand_by_shortening(records: list[CodeRecord], s_max: int) -> list[CodeRecord]:
    """Input records followed by their shortenings for s = 1..s_max."""
    if records and s_max >= min(r.k for r in records):
        raise SRangeTooLarge(f"s_max = {s_max} must be below every dimension")
    out = list(records)
    for r in records:
        for s in range(1, s_max + 1):
            out.append(
                CodeRecord(
                    r.n_len - s,
                    r.k - s,
                    r.d_bound,
                    "inherited",
                    r.a1,
                    r.b1,
                    r.a2,
                    r.b2,
                    r.s + s,
                    comparator=r.comparator,
                )
            )
    return out


def realize(C: GKCurve, T: TwoPointSemigroup, record: CodeRecord, orientation: str = "p0") -> LinearCode:
    """Rebuild a record's code from scratch and re-certify it."""
    code = build_COmega(C, record.divisor)
    code = apply_matthews(code, T, (record.a1, record.a2), (record.b1, record.b2), orientation=orientation)
    return shorten(code, record.s) if record.s else code


def records_to_json(records: list[CodeRecord]) -> str:
    return json.dumps([r.as_json() for r in records], indent=2)


__all__ = [
    "CodeRecord",
    "SearchSpec",
    "expand_by_shortening",
    "one_point_baseline",
    "realize",
    "records_to_json",
    "search_matthews",
]
