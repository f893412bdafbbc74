from __future__ import annotations

import pytest

from chardeg.errors import NotPrime, PreconditionViolated
from chardeg.gf import (
    FieldElement,
    enumerate_subspaces,
    isotropic_check,
    make_field,
    pairing_value,
)


def test_prime_field_is_plain_modular_arithmetic():
    F = make_field(7, 1)
    assert F.q == 7
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.pow(3, 6) == 1


def test_rejects_composite_characteristic():
    with pytest.raises(NotPrime):
        make_field(6, 1)


def test_gf4_structure():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)  # x^2 + x + 1
    for a in range(1, 4):
        assert F.pow(a, 3) == 1
    assert F.mul(2, 3) == 1  # x * (x+1) = x^2 + x = 1


def test_gf9_modulus_is_lexicographically_first():
    F = make_field(3, 2)
    # candidates x^2+c1*x+c0 scanned by index of (c0, c1): x^2+1 has index 1
    assert F.modulus == (1, 0, 1)
    assert F.mul(3, 3) == F.neg(1)  # x^2 = -1


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                 (2, 3), (3, 2)])
def test_field_axioms_exhaustive(p, k):
    F = make_field(p, k)
    q = F.q
    for a in range(q):
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a in range(q):
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
    # distributivity on a sample grid
    for a in range(min(q, 5)):
        for b in range(q):
            for c in range(q):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                 (2, 3), (3, 2)])
def test_frobenius_is_an_automorphism(p, k):
    F = make_field(p, k)
    for a in range(F.q):
        for b in range(F.q):
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    images = {F.frobenius(a) for a in range(F.q)}
    assert len(images) == F.q


def test_multiplicative_generator_order():
    for p, k in ((2, 2), (3, 2), (2, 3), (5, 1)):
        F = make_field(p, k)
        g = F.multiplicative_generator()
        assert F.element_mult_order(g) == F.q - 1


def test_field_element_sugar():
    F = make_field(3, 2)
    a, b = F.element(4), F.element(7)
    assert (a + b).index == F.add(4, 7)
    assert (a * b).index == F.mul(4, 7)
    assert (-a).index == F.neg(4)
    assert (a - a).index == 0
    assert (a * a.inverse()).index == 1
    with pytest.raises(PreconditionViolated):
        a + FieldElement(make_field(2, 2), 1)


def test_subspace_counts_match_gaussian_binomials():
    # number of subspaces of F_p^n: sum of Gaussian binomial coefficients
    assert len(enumerate_subspaces(2, 2)) == 1 + 3 + 1
    assert len(enumerate_subspaces(3, 2)) == 1 + 4 + 1
    assert len(enumerate_subspaces(2, 3)) == 1 + 7 + 7 + 1
    assert len(enumerate_subspaces(2, 4)) == 1 + 15 + 35 + 15 + 1
    assert len(enumerate_subspaces(3, 3)) == 1 + 13 + 13 + 1


def test_subspaces_are_closed_under_addition():
    for span in enumerate_subspaces(3, 2):
        vecs = set(span)
        for u in span:
            for v in span:
                w = tuple((x + y) % 3 for x, y in zip(u, v))
                assert w in vecs


def test_pairing_is_antisymmetric():
    F = make_field(3, 1)
    vecs = [(a, b) for a in range(3) for b in range(3)]
    for u in vecs:
        for v in vecs:
            assert pairing_value(F, 1, u, v) == F.neg(pairing_value(F, 1, v, u))
        assert pairing_value(F, 1, u, u) == 0


@pytest.mark.parametrize("p,dim_w", [(3, 1), (2, 1), (2, 2)])
def test_large_subspaces_never_isotropic(p, dim_w):
    """|U| > |W| forces a nonvanishing pairing on U (symplectic bound)."""
    F = make_field(p, 1)
    w_size = p ** dim_w
    isotropic_orders = set()
    for span in enumerate_subspaces(p, 2 * dim_w):
        if isotropic_check(F, dim_w, span):
            isotropic_orders.add(len(span))
            assert len(span) <= w_size
    # maximal isotropic subspaces of the full size exist (e.g. W itself)
    assert w_size in isotropic_orders


def test_isotropic_check_with_field_extension():
    # GF(4)-lines inside F_2^4: W itself is isotropic, the whole space not
    F = make_field(2, 2)
    w_line = [(1, 0, 0, 0), (0, 1, 0, 0)]
    full = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    assert isotropic_check(F, 1, w_line)
    assert not isotropic_check(F, 1, full)
