"""One- and two-point Weierstrass semigroups at P0 and P_inf.

H(P0, P_inf) is generated under componentwise maximum (``lub``) by the graph
Gamma of the bijection G(P0) -> G(P_inf) together with the two axes
H(P0) x {0} and {0} x H(P_inf).  Gamma is available in closed form (four
index families of monomials) and by direct enumeration of the monomial sets
T_k; the two routes are compared in the test-suite.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import cached_property, reduce

import numpy as np

from gkcodes.curve import GKCurve, Monomial, pole_pair
from gkcodes.errors import NotCoprimeGenerators, OracleViolation

Pair = tuple[int, int]

# the n = 2 graph, obtained from the ten explicit functions y^i z^j / x^k
GAMMA_N2 = frozenset(
    {(3, 3), (5, 5), (7, 7), (2, 11), (4, 13), (1, 19), (11, 2), (13, 4), (10, 10), (19, 1)}
)


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens or gens[0] <= 0:
            raise NotCoprimeGenerators("generators must be positive")
        if reduce(math.gcd, gens) != 1:
            raise NotCoprimeGenerators(f"gcd{gens} != 1")
        object.__setattr__(self, "generators", gens)

    @cached_property
    def _sieve(self) -> np.ndarray:
        # extend until min(generators) consecutive members appear
        step = self.generators[0]
        limit = 4 * step * self.generators[-1] + 1
        while True:
            mem = np.zeros(limit, dtype=bool)
            mem[0] = True
            for x in range(limit):
                if mem[x]:
                    for g in self.generators:
                        if x + g < limit:
                            mem[x + g] = True
            run = 0
            for x in range(limit):
                run = run + 1 if mem[x] else 0
                if run == step:
                    return mem[: x + 1]
            limit *= 2  # pragma: no cover

    @cached_property
    def conductor(self) -> int:
        mem = self._sieve
        gaps = np.flatnonzero(~mem)
        return int(gaps[-1]) + 1 if gaps.size else 0

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(~self._sieve[: self.conductor]))

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.conductor or bool(self._sieve[x])

    def members(self, upto: int) -> np.ndarray:
        """Boolean membership vector for 0..upto."""
        out = np.ones(upto + 1, dtype=bool)
        c = min(self.conductor, upto + 1)
        out[:c] = self._sieve[:c]
        return out


def gaps(S: NumericalSemigroup) -> tuple[int, ...]:
    return S.gaps


def one_point_semigroup(C: GKCurve) -> NumericalSemigroup:
    """H(P_inf) = H(P0) on the GK curve."""
    n = C.n
    return NumericalSemigroup((n**3 - n * n + n, n**3, n**3 + 1))


@dataclass(frozen=True)
class GammaSet:
    pairs: frozenset[Pair]
    g: int
    families: dict[str, frozenset[Pair]] = field(default_factory=dict, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def validate(self, h_p0: NumericalSemigroup, h_pinf: NumericalSemigroup) -> None:
        """Raise OracleViolation unless this is the graph of a bijection G(P0) -> G(P_inf)."""
        if len(self.pairs) != self.g:
            raise OracleViolation(f"|Gamma| = {len(self.pairs)}, expected {self.g}")
        firsts = sorted(a for a, _ in self.pairs)
        seconds = sorted(b for _, b in self.pairs)
        if firsts != list(h_p0.gaps):
            raise OracleViolation("first coordinates are not G(P0)")
        if seconds != list(h_pinf.gaps):
            raise OracleViolation("second coordinates are not G(P_inf)")


def gamma_pair(n: int, i: int, j: int, k: int) -> Pair:
    return (
        k * (n**3 + 1) - i * (n * n - n + 1) - j,
        i * (n**3 - n * n + n) + j * n**3 - k * (n**3 + 1),
    )


def gamma_closed_form(C: GKCurve) -> GammaSet:
    """Gamma(P0, P_inf) as the union of the four index families.

    The families are stated for n >= 3; for n = 2 the explicit ten-pair set
    is returned.
    """
    n, g = C.n, C.genus
    if n == 2:
        return GammaSet(GAMMA_N2, g, {"explicit": GAMMA_N2})
    top = n * n - n
    fam: dict[str, set[Pair]] = {"gamma1": set(), "gamma2": set(), "gamma3": set(), "gamma4": set()}
    for k in range(1, n):
        for i in range(0, k + 1):
            for j in range(k - i + 1, top + 1):
                fam["gamma1"].add(gamma_pair(n, i, j, k))
        for i in range(k + 1, n + 1):
            for j in range(0, top + 1):
                fam["gamma2"].add(gamma_pair(n, i, j, k))
    for k in range(n, n * n - n - 1):
        for i in range(0, n + 1):
            for j in range(k - i + 1, top + 1):
                fam["gamma3"].add(gamma_pair(n, i, j, k))
    for k in range(n * n - n - 1, n * n):
        for i in range(k - n * n + n + 1, n + 1):
            for j in range(k - i + 1, top + 1):
                fam["gamma4"].add(gamma_pair(n, i, j, k))
    families = {name: frozenset(s) for name, s in fam.items()}
    return GammaSet(frozenset().union(*families.values()), g, families)


def t_families(n: int) -> dict[int, list[Monomial]]:
    """The monomial sets T_k, k = 1..n^2-1, as exponent triples.

    For k <= n-1 the set has two strata (i <= k and i > k); for k >= n the
    lower bound on i is max(0, k - n^2 + n + 1).  For n = 2 this reproduces
    the ten functions listed for that case.
    """
    top = n * n - n
    out: dict[int, list[Monomial]] = {}
    for k in range(1, n * n):
        monos = []
        if k <= n - 1:
            for i in range(0, k + 1):
                monos += [Monomial(i, j, k) for j in range(k - i + 1, top + 1)]
            for i in range(k + 1, n + 1):
                monos += [Monomial(i, j, k) for j in range(0, top + 1)]
        else:
            for i in range(max(0, k - n * n + n + 1), n + 1):
                monos += [Monomial(i, j, k) for j in range(k - i + 1, top + 1)]
        out[k] = monos
    return out


def gamma_brute_force(C: GKCurve) -> GammaSet:
    """Gamma from the pole divisors of the T_k monomials, with every claim checked."""
    S = one_point_semigroup(C)
    gap_set = set(S.gaps)
    pairs: dict[Pair, Monomial] = {}
    for monos in t_families(C.n).values():
        for mono in monos:
            pp = pole_pair(C, mono)
            pair = (pp.at_p0, pp.at_pinf)
            if pair[0] not in gap_set or pair[1] not in gap_set:
                raise OracleViolation(f"{mono} -> {pair} not in G(P0) x G(P_inf)")
            if pair in pairs:
                raise OracleViolation(f"{mono} and {pairs[pair]} share pole divisor {pair}")
            pairs[pair] = mono
    out = GammaSet(frozenset(pairs), C.genus)
    out.validate(S, S)
    return out


def lub(x: Pair, y: Pair) -> Pair:
    return (max(x[0], y[0]), max(x[1], y[1]))


class TwoPointSemigroup:
    """H(P0, P_inf) with membership precomputed on the box [0, B]^2.

    Queries outside the box grow it transparently; the represented set never
    changes, so instances are safe to share.
    """

    def __init__(
        self,
        gamma: GammaSet,
        h_p0: NumericalSemigroup,
        h_pinf: NumericalSemigroup,
        box_bound: int | None = None,
    ):
        gamma.validate(h_p0, h_pinf)
        self.gamma = gamma
        self.h_p0 = h_p0
        self.h_pinf = h_pinf
        self.g = gamma.g
        self._lock = threading.Lock()
        self._grid = _closure_grid(gamma, h_p0, h_pinf, box_bound if box_bound is not None else 2 * self.g)

    @classmethod
    def for_curve(cls, C: GKCurve, box_bound: int | None = None) -> TwoPointSemigroup:
        S = one_point_semigroup(C)
        return cls(gamma_closed_form(C), S, S, box_bound)

    @property
    def box_bound(self) -> int:
        return self._grid.shape[0] - 1

    def grid(self, bound: int | None = None) -> np.ndarray:
        """Membership grid on [0, bound]^2, indexed [alpha, beta]."""
        bound = self.box_bound if bound is None else bound
        self.ensure(bound)
        return self._grid[: bound + 1, : bound + 1].copy()

    def ensure(self, bound: int) -> None:
        if bound > self.box_bound:
            with self._lock:
                if bound > self.box_bound:
                    # at least double so that sweeps do not rebuild repeatedly
                    new = max(bound, 2 * self.box_bound)
                    self._grid = _closure_grid(self.gamma, self.h_p0, self.h_pinf, new)

    def with_bound(self, bound: int) -> TwoPointSemigroup:
        return TwoPointSemigroup(self.gamma, self.h_p0, self.h_pinf, bound)

    def __contains__(self, pair) -> bool:
        a, b = pair
        if a < 0 or b < 0:
            return False
        self.ensure(max(a, b))
        return bool(self._grid[a, b])

    def is_gap_pair(self, pair) -> bool:
        return pair not in self

    def beta(self, alpha: int) -> int:
        """min{beta : (alpha, beta) in H}."""
        if alpha in self.h_p0:
            return 0
        for a, b in self.gamma.pairs:
            if a == alpha:
                return b
        raise OracleViolation(f"gap {alpha} has no partner")  # pragma: no cover


def _closure_grid(gamma: GammaSet, h_p0: NumericalSemigroup, h_pinf: NumericalSemigroup, B: int) -> np.ndarray:
    """All lub(x, y) with x, y in the generating set, restricted to [0, B]^2.

    Anything with both coordinates <= B only comes from generators inside the
    box, so restricting the generators is exact.
    """
    gens = [p for p in gamma.pairs if p[0] <= B and p[1] <= B]
    gens += [(int(a), 0) for a in np.flatnonzero(h_p0.members(B))]
    gens += [(0, int(b)) for b in np.flatnonzero(h_pinf.members(B))]
    G = np.array(gens, dtype=np.int64)
    grid = np.zeros((B + 1, B + 1), dtype=bool)
    A = np.maximum(G[:, None, 0], G[None, :, 0])
    Bm = np.maximum(G[:, None, 1], G[None, :, 1])
    grid[A.ravel(), Bm.ravel()] = True
    return grid


def membership_box(T: TwoPointSemigroup, B: int) -> np.ndarray:
    if B < 1:
        raise ValueError("box bound must be >= 1")
    return T.grid(B)


def is_gap_pair(T: TwoPointSemigroup, pair: Pair) -> bool:
    return T.is_gap_pair(pair)


def sigma_permutation(T: TwoPointSemigroup) -> tuple[int, ...]:
    """sigma with beta_{alpha_i} = beta_{sigma(i)}, values 1-based."""
    alphas = T.h_p0.gaps
    betas = T.h_pinf.gaps
    index = {b: t + 1 for t, b in enumerate(betas)}
    partner = dict(T.gamma.pairs)
    return tuple(index[partner[a]] for a in alphas)
