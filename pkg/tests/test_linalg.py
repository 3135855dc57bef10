from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from siltlab.errors import InconsistentSystem
from siltlab.linalg import Field, PrimeField, Rationals

FIELDS = [PrimeField(101), PrimeField(2), PrimeField(3), Rationals()]


def test_parse_fields():
    assert Field.parse("Fp:101") == PrimeField(101)
    assert Field.parse("Q") == Rationals()
    with pytest.raises(ValueError):
        Field.parse("R")
    with pytest.raises(ValueError):
        Field.parse("Fp:6")


def test_prime_field_inverse_and_format():
    F = PrimeField(101)
    assert F.inv_scalar(2) * 2 % 101 == 1
    assert F.parse_elem("-1") == 100
    assert F.parse_elem("1/2") == 51
    with pytest.raises(ZeroDivisionError):
        F.inv_scalar(0)


def test_rationals_exact():
    F = Rationals()
    a = F.array([[1, 2], [3, 4]])
    inv = F.inv(a)
    assert inv[0, 0] == Fraction(-2)
    assert F.format_elem(Fraction(3, 4)) == "3/4"
    assert F.equal(F.matmul(a, inv), F.eye(2))


def test_solve_inconsistent():
    F = PrimeField(101)
    with pytest.raises(InconsistentSystem):
        F.solve(F.array([[1, 0], [0, 0]]), F.array([0, 1]))


def _matrix(F, rows, cols, seed):
    return F.random(np.random.default_rng(seed), (rows, cols))


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(r=st.integers(1, 5), c=st.integers(1, 5), seed=st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_rank_nullity(F, r, c, seed):
    a = _matrix(F, r, c, seed)
    null = F.nullspace(a)
    assert F.rank(a) + null.shape[1] == c
    assert F.is_zero(F.matmul(a, null))


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(n=st.integers(1, 5), seed=st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_inverse_when_full_rank(F, n, seed):
    a = _matrix(F, n, n, seed)
    if F.rank(a) < n:
        return
    assert F.equal(F.matmul(F.inv(a), a), F.eye(n))


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(r=st.integers(1, 5), c=st.integers(1, 5), seed=st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_solve_recovers_consistent_rhs(F, r, c, seed):
    a = _matrix(F, r, c, seed)
    x = F.random(np.random.default_rng(seed + 1), (c,))
    b = F.matmul(a, x.reshape(-1, 1)).reshape(-1)
    y = F.solve(a, b)
    assert F.equal(F.matmul(a, y.reshape(-1, 1)).reshape(-1), b)


def test_large_prime_matmul_no_overflow():
    F = PrimeField(2_147_483_647)
    a = F.array([[2_147_483_646] * 40])
    b = F.array([[2_147_483_646]] * 40)
    assert int(F.matmul(a, b)[0, 0]) == 40 % 2_147_483_647
