from __future__ import annotations

import jsonschema
import pytest

from chardeg.chartable import (
    CharTable,
    degree_one_characters,
    dixon_char_table,
    gagola_kernel,
    induce_character,
    inner_product,
    regular_character,
    restrict_character,
    trivial_character,
)
from chardeg.cyclotomic import Cyclotomic
from chardeg.errors import GroupMismatch
from chardeg.families import group_from_spec
from chardeg.groups import (
    commutator_subgroup,
    cyclic_group,
    direct_product,
    enumerate_subgroups,
)
from chardeg.schemas import CHAR_TABLE_SCHEMA


def table_of(spec: str) -> CharTable:
    return dixon_char_table(group_from_spec(spec))


def test_cyclic_groups_have_root_of_unity_tables():
    for n in (2, 3, 4, 6):
        T = dixon_char_table(cyclic_group(n))
        assert T.degrees() == (1,) * n
        values = {v.sort_key() for chi in T.irreducibles for v in chi.values}
        roots = {Cyclotomic.root(n, j).sort_key() for j in range(n)}
        assert values == roots


def test_klein_four_table_is_real():
    T = dixon_char_table(direct_product(cyclic_group(2), cyclic_group(2)))
    assert T.degrees() == (1, 1, 1, 1)
    for chi in T.irreducibles:
        assert all(v.is_integer() and abs(v.as_int()) == 1 for v in chi.values)


def test_symmetric_group_table():
    G = group_from_spec("frobenius:q=3")  # AGL(1,3) is S3
    T = dixon_char_table(G)
    assert sorted(T.degrees()) == [1, 1, 2]
    two = T.by_degree(2)[0]
    vals = sorted(v.as_int() for v in two.values)
    assert vals == [-1, 0, 2]


def test_dihedral_and_quaternion_tables_agree_on_degrees():
    for spec in ("catalog:8/1", "catalog:8/3"):
        T = table_of(spec)
        assert sorted(T.degrees()) == [1, 1, 1, 1, 2]
        two = T.by_degree(2)[0]
        vals = sorted(v.as_int() for v in two.values)
        assert vals == [-2, 0, 0, 0, 2]


def test_degree_squares_sum_to_order():
    for spec in ("catalog:18/3", "catalog:27/3", "symplectic:p=3,w=1"):
        T = table_of(spec)
        assert sum(d * d for d in T.degrees()) == T.group.order


def test_abelian_iff_all_linear():
    assert set(dixon_char_table(cyclic_group(9)).degrees()) == {1}
    assert set(table_of("catalog:8/3").degrees()) != {1}


def test_degree_one_characters_count_is_abelianization_order():
    for spec in ("catalog:8/1", "frobenius:q=4", "catalog:27/3"):
        G = group_from_spec(spec)
        linear = degree_one_characters(G.whole_subgroup())
        assert len(linear) == G.order // commutator_subgroup(G.whole_subgroup()).order
        T = dixon_char_table(G)
        assert len(T.by_degree(1)) == len(linear)
        for chi in linear:
            assert inner_product(chi, chi) == Cyclotomic.one()


def test_orthonormality_exact():
    T = table_of("catalog:18/4")
    for i, chi in enumerate(T.irreducibles):
        for j, psi in enumerate(T.irreducibles):
            ip = inner_product(chi, psi)
            assert ip == (Cyclotomic.one() if i == j else Cyclotomic.zero())


def test_regular_character_decomposition():
    T = table_of("frobenius:q=5")
    reg = regular_character(T.group)
    for chi in T.irreducibles:
        assert inner_product(reg, chi) == chi.degree


def test_character_ring_operations():
    T = table_of("frobenius:q=4")
    a, b = T.irreducibles[0], T.irreducibles[-1]
    assert (a + b).degree_int() == a.degree_int() + b.degree_int()
    assert (a * b).degree_int() == a.degree_int() * b.degree_int()
    assert (a - a).degree_int() == 0
    with pytest.raises(GroupMismatch):
        a + dixon_char_table(cyclic_group(3)).irreducibles[0]


def test_frobenius_reciprocity():
    G = group_from_spec("frobenius:q=5")
    for H in (s for s in enumerate_subgroups(G) if 1 < s.order < G.order):
        for phi in degree_one_characters(H):
            ind = induce_character(G, H, phi)
            assert ind.degree_int() == (G.order // H.order) * phi.degree_int()
            for chi in dixon_char_table(G).irreducibles:
                lhs = inner_product(ind, chi)
                rhs = inner_product(phi, restrict_character(chi, H))
                assert lhs == rhs


def test_induced_character_values_on_transversal():
    G = cyclic_group(4)
    H = next(s for s in enumerate_subgroups(G) if s.order == 2)
    phi = degree_one_characters(H)[1]
    ind = induce_character(G, H, phi)
    T = dixon_char_table(G)
    coeffs = [inner_product(ind, chi) for chi in T.irreducibles]
    assert sum(c.as_int() for c in coeffs) == 2


def test_restriction_of_trivial_is_trivial():
    G = group_from_spec("catalog:8/1")
    triv = trivial_character(G)
    for H in enumerate_subgroups(G):
        res = restrict_character(triv, H)
        assert all(v == Cyclotomic.one() for v in res.values)


def test_kernel_and_gagola_kernel():
    T = table_of("catalog:8/1")  # quaternion group
    two = T.by_degree(2)[0]
    assert two.kernel().order == 1
    K = gagola_kernel(T, two)
    assert K.order == 2  # the unique involution vanishes nowhere: center
    T54 = table_of("symplectic:p=3,w=1")
    six = T54.by_degree(6)[0]
    assert gagola_kernel(T54, six).order == 3


def test_unique_degree_irreducible_is_integer_valued(catalog_all):
    """Galois stability: an irreducible alone in its degree has rational
    integer values; checked across the whole catalog."""
    from collections import Counter

    hits = []
    for G in catalog_all:
        T = dixon_char_table(G)
        counts = Counter(T.degrees())
        for chi in T.irreducibles:
            if counts[chi.degree_int()] == 1:
                hits.append((G.name, chi.degree_int()))
                for v in chi.values:
                    assert v.is_integer(), (G.name, chi.degree_int(), str(v))
    degrees_hit = sorted(d for _, d in hits)
    assert degrees_hit == [1, 2, 2, 6, 6]  # trivial, Q8, D4, two order-54 groups


def test_column_orthogonality_exact():
    T = table_of("catalog:54/8")
    data = T.classes
    r = len(data.sizes)
    for j in range(r):
        for k in range(r):
            total = Cyclotomic.zero()
            for chi in T.irreducibles:
                total = total + chi.values[j] * chi.values[k].conjugate()
            if j == k:
                assert total == Cyclotomic.rational(T.group.order // data.sizes[j])
            else:
                assert total.is_zero()


def test_table_json_matches_schema():
    tables = [table_of("catalog:8/3"), table_of("frobenius:q=5"),
              dixon_char_table(cyclic_group(6))]
    for T in tables:
        payload = T.to_json_dict()
        jsonschema.validate(payload, CHAR_TABLE_SCHEMA)
        assert payload["order"] == sum(payload["class_sizes"])
        degs = [c["degree"] for c in payload["characters"]]
        assert sum(d * d for d in degs) == payload["order"]


def test_power_maps_consistent():
    T = table_of("catalog:18/0")
    data = T.classes
    payload = T.to_json_dict()
    for key, pm in payload["power_maps"].items():
        exponent = int(key)
        for ci, target in enumerate(pm):
            assert data.power_map(ci, exponent) == target
            rep = data.representatives[ci]
            image = 0
            for _ in range(exponent % T.group.element_order(rep)):
                image = T.group.mult[image, rep]
            assert data.class_of[image] == target
