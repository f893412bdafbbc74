from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest

from chardeg.cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi
from chardeg.errors import PreconditionViolated


def test_euler_phi_small_values():
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_powers_cycle():
    z = Cyclotomic.root(5)
    acc = Cyclotomic.one(5)
    seen = []
    for _ in range(5):
        seen.append(acc)
        acc = acc * z
    assert acc == seen[0]
    assert len({s.sort_key() for s in seen}) == 5


def test_primitive_root_sums_to_minus_one():
    for m in (3, 5, 7):
        total = Cyclotomic.zero(m)
        for j in range(1, m):
            total = total + Cyclotomic.root(m, j)
        assert total.is_integer() and total.as_int() == -1


def test_fourth_root_squares_to_minus_one():
    i = Cyclotomic.root(4)
    assert (i * i).as_int() == -1
    assert (i * i * i * i).as_int() == 1


def test_rational_arithmetic_stays_exact():
    a = Cyclotomic.rational(Fraction(1, 3))
    b = Cyclotomic.rational(Fraction(1, 6))
    assert (a + b).as_fraction() == Fraction(1, 2)
    assert (a - b).as_fraction() == Fraction(1, 6)
    assert (a / Fraction(1, 6)).as_int() == 2


def test_mixed_conductor_promotion():
    z3 = Cyclotomic.root(3)
    i = Cyclotomic.root(4)
    prod = z3 * i
    assert prod.m == 12
    expected = cmath.exp(2j * math.pi * 7 / 12)
    assert abs(prod.to_complex() - expected) < 1e-12
    assert prod.promote(24).to_complex() == pytest.approx(expected)


def test_promote_requires_divisibility():
    z = Cyclotomic.root(6)
    with pytest.raises(PreconditionViolated):
        z.promote(8)


def test_galois_action_permutes_roots():
    z = Cyclotomic.root(7)
    assert z.galois(2) == z * z
    with pytest.raises(PreconditionViolated):
        z.galois(7)  # not coprime to the conductor


def test_conjugate_matches_complex_conjugation():
    z = Cyclotomic.root(5) + Cyclotomic.root(5, 2) * Cyclotomic.rational(3)
    assert z.conjugate().to_complex() == pytest.approx(z.to_complex().conjugate())
    norm = z * z.conjugate()
    assert abs(norm.to_complex().imag) < 1e-12


def test_quadratic_gauss_sum():
    # sqrt(5) = z + z^4 - z^2 - z^3 for the primitive fifth root z
    z = Cyclotomic.root(5)
    s = z + z.galois(4) - z.galois(2) - z.galois(3)
    assert (s * s).as_int() == 5
    assert s.to_complex() == pytest.approx(math.sqrt(5))


def test_rationality_predicates():
    z = Cyclotomic.root(8)
    assert not z.is_rational()
    half = Cyclotomic.rational(Fraction(1, 2), m=8)
    assert half.is_rational() and not half.is_integer()
    with pytest.raises(PreconditionViolated):
        half.as_int()
    with pytest.raises(PreconditionViolated):
        z.as_fraction()


def test_division_restricted_to_rational_scalars():
    z = Cyclotomic.root(3)
    assert (z / 1) == z
    assert ((z + z) / 2) == z
    with pytest.raises(ZeroDivisionError):
        z / 0
    with pytest.raises(PreconditionViolated):
        z / Cyclotomic.root(3)


def test_equality_across_conductors():
    assert Cyclotomic.root(6, 3) == Cyclotomic.rational(-1)
    assert Cyclotomic.root(4, 2) == Cyclotomic.root(8, 4)
    assert hash(Cyclotomic.root(4, 2)) == hash(Cyclotomic.rational(-1))


def test_sort_key_is_deterministic_and_distinguishing():
    values = [Cyclotomic.root(5, j) for j in range(5)]
    keys = [v.sort_key() for v in values]
    assert len(set(keys)) == 5
    assert sorted(keys) == sorted(keys, key=lambda k: k)


def test_str_forms():
    assert str(Cyclotomic.rational(2)) == "2"
    assert "5" in str(Cyclotomic.root(5))
