from functools import reduce
from math import gcd
from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkcodes.curve import curve_create
from gkcodes.errors import NotCoprimeGenerators, OracleViolation
from gkcodes.semigroup import (
    GAMMA_N2,
    GammaSet,
    NumericalSemigroup,
    TwoPointSemigroup,
    gamma_brute_force,
    gamma_closed_form,
    gamma_pair,
    is_gap_pair,
    lub,
    membership_box,
    one_point_semigroup,
    sigma_permutation,
)


def test_gaps_of_6_8_9():
    S = NumericalSemigroup((6, 8, 9))
    assert S.gaps == (1, 2, 3, 4, 5, 7, 10, 11, 13, 19)
    assert S.conductor == 20 and S.genus == 10
    assert 12 in S and 19 not in S and 1000 in S


@given(st.lists(st.integers(2, 30), min_size=2, max_size=4))
def test_semigroup_against_naive_sums(gens):
    if reduce(gcd, gens) != 1:
        with pytest.raises(NotCoprimeGenerators):
            NumericalSemigroup(tuple(gens))
        return
    S = NumericalSemigroup(tuple(gens))
    reach = {0}
    for x in range(1, S.conductor + 40):
        if any(x - g in reach for g in gens):
            reach.add(x)
    assert all((x in S) == (x in reach) for x in range(S.conductor + 40))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_one_point_genus(n):
    C = curve_create(n)
    assert one_point_semigroup(C).genus == C.genus == (n**5 - 2 * n**3 + n**2) // 2


@pytest.mark.parametrize("n", [2, 3])
def test_closed_form_equals_brute_force(n):
    C = curve_create(n)
    assert gamma_closed_form(C).pairs == gamma_brute_force(C).pairs


def test_n2_gamma():
    assert gamma_closed_form(curve_create(2)).pairs == GAMMA_N2
    assert gamma_brute_force(curve_create(2)).pairs == GAMMA_N2


@pytest.mark.parametrize("n, sizes", [(3, (26, 21, 32, 20)), (4, (98, 78, 245, 35))])
def test_family_sizes(n, sizes):
    # the families depend on n and g only, so n = 4 needs no point enumeration
    C = SimpleNamespace(n=n, genus=(n**5 - 2 * n**3 + n**2) // 2)
    fam = gamma_closed_form(C).families
    assert tuple(len(fam[f"gamma{t}"]) for t in range(1, 5)) == sizes
    assert sum(sizes) == C.genus
    assert len(frozenset().union(*fam.values())) == C.genus
    assert gamma_pair(n, 0, 2, 1) in fam["gamma1"]


def _valuation_oracle(n):
    """Gamma from scratch: for each gap alpha at P0, the unique monomial with
    pole order alpha at P0 and smallest pole order at P_inf."""
    S = one_point_semigroup(SimpleNamespace(n=n))
    N = n**3 + 1
    out = set()
    for alpha in S.gaps:
        best = None
        for i in range(n + 1):
            for j in range(n * n - n + 1):
                u = i * (n * n - n + 1) + j
                if (alpha + u) % N == 0:
                    k = (alpha + u) // N
                    beta = i * (n**3 - n * n + n) + j * n**3 - k * N
                    best = beta if best is None else min(best, beta)
        out.add((alpha, max(best, 0)))
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_gamma_against_valuation_oracle(n):
    assert gamma_closed_form(curve_create(n)).pairs == _valuation_oracle(n)


def test_gamma_validation_rejects_bad_sets():
    S = NumericalSemigroup((6, 8, 9))
    with pytest.raises(OracleViolation):
        GammaSet(frozenset(list(GAMMA_N2)[:9]), 10).validate(S, S)
    bad = (GAMMA_N2 - {(19, 1)}) | {(19, 2)}
    with pytest.raises(OracleViolation):
        GammaSet(bad, 10).validate(S, S)


def _partner_criterion(T):
    """(a, b) in H iff b >= m(a) and a >= m'(b), with m(a) the partner of a
    (0 on semigroup elements)."""
    part1 = dict(T.gamma.pairs)
    part2 = {b: a for a, b in T.gamma.pairs}

    def member(a, b):
        return b >= part1.get(a, 0) and a >= part2.get(b, 0)

    return member


@pytest.mark.parametrize("n", [2, 3])
def test_grid_matches_partner_criterion(n):
    T = TwoPointSemigroup.for_curve(curve_create(n))
    member = _partner_criterion(T)
    B = 2 * T.g + 5
    grid = T.grid(B)
    expected = np.array([[member(a, b) for b in range(B + 1)] for a in range(B + 1)])
    assert (grid == expected).all()


def test_grid_is_lub_closed_and_has_axes():
    T = TwoPointSemigroup.for_curve(curve_create(2))
    grid = T.grid(25)
    members = list(zip(*np.nonzero(grid)))
    for x in members[::7]:
        for y in members[::5]:
            z = lub(x, y)
            assert grid[z]
    S = NumericalSemigroup((6, 8, 9))
    assert (grid[:, 0] == S.members(25)).all()


@pytest.mark.parametrize("n", [2, 3])
def test_beta_is_minimal(n):
    T = TwoPointSemigroup.for_curve(curve_create(n))
    for alpha in T.h_p0.gaps:
        b = T.beta(alpha)
        assert (alpha, b) in T
        assert not any((alpha, x) in T for x in range(b))


def test_box_growth_is_transparent():
    C = curve_create(2)
    small = TwoPointSemigroup.for_curve(C, box_bound=5)
    big = TwoPointSemigroup.for_curve(C, box_bound=60)
    assert (60, 59) in small
    assert (small.grid(60) == big.grid(60)).all()


def test_n2_specific_pairs():
    T = TwoPointSemigroup.for_curve(curve_create(2))
    assert (13, 3) not in T and is_gap_pair(T, (13, 3))
    assert is_gap_pair(T, (10, 8))
    assert (10, 10) in T
    assert sigma_permutation(T) == (10, 8, 3, 9, 5, 6, 7, 2, 4, 1)
    assert sorted(sigma_permutation(T)) == list(range(1, 11))
    with pytest.raises(ValueError):
        membership_box(T, 0)
