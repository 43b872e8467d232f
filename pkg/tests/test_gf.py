import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkcodes.errors import DegreeOutOfRange, DivisionByZero, FieldMismatch, NotADivisor, NotPrime
from gkcodes.gf import field_create, in_subfield, is_irreducible, smallest_irreducible

F64 = field_create(2, 6)
F729 = field_create(3, 6)
FIELDS = [F64, F729, field_create(5, 2), field_create(7, 1)]


def elem(F):
    return st.integers(0, F.order - 1).map(F.from_int)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(elem(F)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + F.zero == a and a * F.one == a
    assert a + (-a) == F.zero
    if not a.is_zero():
        assert a * a.inverse() == F.one
        assert (b / a) * a == b


@pytest.mark.parametrize("F", FIELDS, ids=repr)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_frobenius_is_additive_and_multiplicative(F, data):
    a, b = data.draw(elem(F)), data.draw(elem(F))
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    assert a.frobenius(F.m) == a


def test_moduli_are_smallest_irreducible():
    assert F64.modulus == (1, 0, 0, 0, 0, 1, 1)
    assert F729.modulus == (1, 0, 0, 0, 1, 1, 1)
    assert is_irreducible(F64.modulus, 2)
    # no lexicographically smaller monic degree-6 polynomial is irreducible
    assert smallest_irreducible(2, 6) == F64.modulus


@pytest.mark.parametrize("F, d, size", [(F64, 2, 4), (F729, 2, 9), (F64, 3, 8), (F64, 1, 2)])
def test_subfield_sizes(F, d, size):
    assert sum(in_subfield(e, d) for e in F.elements()) == size


def test_primitive_element_order():
    for F in (F64, F729):
        g = F.primitive_element
        seen = {int(g**k) for k in range(F.order - 1)}
        assert len(seen) == F.order - 1 and 0 not in seen


def test_vector_ops_match_scalar_exhaustive_gf64():
    a, b = np.meshgrid(np.arange(64), np.arange(64), indexing="ij")
    a, b = a.ravel(), b.ravel()
    els = F64.elements()
    assert F64.vadd(a, b).tolist() == [int(els[x] + els[y]) for x, y in zip(a, b)]
    assert F64.vmul(a, b).tolist() == [int(els[x] * els[y]) for x, y in zip(a, b)]
    nz = np.arange(1, 64)
    assert F64.vinv(nz).tolist() == [int(els[x].inverse()) for x in nz]


def test_vector_ops_match_scalar_sampled_gf729():
    rng = np.random.default_rng(7)
    a, b = rng.integers(0, 729, 2000), rng.integers(0, 729, 2000)
    A = [F729.from_int(int(x)) for x in a]
    B = [F729.from_int(int(x)) for x in b]
    assert F729.vadd(a, b).tolist() == [int(x + y) for x, y in zip(A, B)]
    assert F729.vsub(a, b).tolist() == [int(x - y) for x, y in zip(A, B)]
    assert F729.vmul(a, b).tolist() == [int(x * y) for x, y in zip(A, B)]
    assert F729.vpow(a, 5).tolist() == [int(x**5) for x in A]


def test_vpow_edge_cases():
    assert F64.vpow(np.array([0, 1, 5]), 0).tolist() == [1, 1, 1]
    x = np.arange(1, 64)
    assert F64.vmul(F64.vpow(x, -3), F64.vpow(x, 3)).tolist() == [1] * 63


def test_encoding_round_trip():
    for v in (0, 1, 2, 100, 728):
        assert int(F729.from_int(v)) == v
    assert F729((1, 2, 0, 1)).coeffs == (1, 2, 0, 1, 0, 0)
    assert int(F729((1, 2))) == 1 + 2 * 3


def test_errors():
    with pytest.raises(NotPrime):
        field_create(4, 2)
    with pytest.raises(DegreeOutOfRange):
        field_create(2, 0)
    with pytest.raises(DivisionByZero):
        F64.zero.inverse()
    with pytest.raises(DivisionByZero):
        F64.vinv(np.array([3, 0]))
    with pytest.raises(FieldMismatch):
        F64.one + F729.one
    with pytest.raises(NotADivisor):
        in_subfield(F64.one, 4)


def test_field_instances_are_shared():
    assert field_create(2, 6) is F64
