import numpy as np
import pytest

from gkcodes.curve import (
    INFINITY,
    CurvePoint,
    Monomial,
    Orbit,
    classify_orbit,
    curve_create,
    enumerate_points,
    evaluate_monomial,
    pole_pair,
    prime_power,
)
from gkcodes.errors import (
    ExponentOutOfRange,
    InfinityNotEvaluable,
    NotPrimePower,
    PoleAtPoint,
    PointNotOnCurve,
)
from gkcodes.gf import field_create, in_subfield


@pytest.mark.parametrize("n, count", [(2, 225), (3, 6076)])
def test_point_count_and_maximality(n, count):
    C = curve_create(n)
    pts = enumerate_points(C)
    assert len(pts) == count == C.expected_point_count
    # Hasse-Weil: q^2 + 1 + 2 g q with q^2 = n^6
    assert count == n**6 + 1 + 2 * C.genus * n**3
    assert pts[0] is INFINITY
    enc = C.affine_points_encoded()
    assert len({tuple(r) for r in enc.tolist()}) == len(enc)


def test_points_satisfy_equations_n2():
    C = curve_create(2)
    assert all(C.on_curve(P) for P in enumerate_points(C))


def test_h_coefficients():
    assert curve_create(2).h_coeffs == (1, 1, 1)
    assert curve_create(3).h_coeffs == (2, 0, 1, 0, 2, 0, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_orbits(n):
    C = curve_create(n)
    pts = enumerate_points(C)
    o1 = [P for P in pts if classify_orbit(C, P) is Orbit.O1]
    assert len(o1) == n**3 + 1
    # the only point with a = 0 is P0
    assert [P.encode() for P in pts[1:] if P.a.is_zero()] == [(0, 0, 0)]


@pytest.mark.parametrize("n", [2, 3])
def test_norm_trace_counts_in_subfield(n):
    # a^n + a = 0 has n roots in GF(n^2); b^(n+1) = 0 gives b = 0, and the
    # O1 points (c = 0) have a, b in GF(n^2): n^3 affine ones
    C = curve_create(n)
    F = C.field
    sub = [e for e in F.elements() if in_subfield(e, 2 * C.e)]
    assert len(sub) == n * n
    assert sum((a**n + a).is_zero() for a in sub) == n
    o1_affine = [P for P in enumerate_points(C)[1:] if P.c.is_zero()]
    assert len(o1_affine) == n**3
    assert all(in_subfield(P.a, 2 * C.e) and in_subfield(P.b, 2 * C.e) for P in o1_affine)


def test_classify_rejects_off_curve():
    C = curve_create(2)
    F = C.field
    with pytest.raises(PointNotOnCurve):
        classify_orbit(C, CurvePoint("affine", F.one, F.one, F.zero))


def test_pole_pairs():
    C2, C3 = curve_create(2), curve_create(3)
    assert pole_pair(C2, Monomial(0, 0, 1)) == (9, -9)
    assert pole_pair(C2, Monomial(0, 2, 1)) == (7, 7)
    assert pole_pair(C3, Monomial(0, 0, 7)) == (196, -196)
    assert pole_pair(C3, Monomial(3, 6, 8)) == (197, 1)
    # y, z, x have pole orders n^3 - n^2 + n, n^3, n^3 + 1 at P_inf
    assert pole_pair(C3, Monomial(1, 0, 0)).at_pinf == 21
    assert pole_pair(C3, Monomial(0, 1, 0)).at_pinf == 27
    assert pole_pair(C3, Monomial(0, 0, -1)).at_pinf == 28
    with pytest.raises(ExponentOutOfRange):
        pole_pair(C2, Monomial(3, 0, 0))


def test_evaluation_matches_naive_oracle():
    C = curve_create(2)
    rng = np.random.default_rng(1)
    pts = C.evaluation_points()
    for _ in range(100):
        P = pts[rng.integers(len(pts))]
        mono = Monomial(int(rng.integers(0, 3)), int(rng.integers(0, 3)), int(rng.integers(-4, 5)))
        naive = C.field.one
        for _ in range(mono.i):
            naive = naive * P.b
        for _ in range(mono.j):
            naive = naive * P.c
        for _ in range(abs(mono.k)):
            naive = naive * (P.a.inverse() if mono.k > 0 else P.a)
        assert evaluate_monomial(C, mono, P) == naive
        row = C.monomial_values([mono], np.array([P.encode()]))
        assert int(row[0, 0]) == int(naive)


def test_evaluation_errors():
    C = curve_create(2)
    with pytest.raises(InfinityNotEvaluable):
        evaluate_monomial(C, Monomial(0, 0, 0), INFINITY)
    with pytest.raises(PoleAtPoint):
        evaluate_monomial(C, Monomial(0, 0, 1), C.p0)
    with pytest.raises(PoleAtPoint):
        C.monomial_values([Monomial(0, 0, 1)], np.array([[0, 0, 0]]))


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(9) == (3, 2)
    for bad in (1, 6, 12):
        with pytest.raises(NotPrimePower):
            prime_power(bad)


def test_field_is_gf_n6():
    assert curve_create(2).field is field_create(2, 6)
    assert curve_create(3).field is field_create(3, 6)
