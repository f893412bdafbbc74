from __future__ import annotations

import numpy as np
import pytest

from chardeg.errors import (
    GroupMismatch,
    NotAGroup,
    NotAnAction,
    NotNormal,
)
from chardeg.families import frobenius_group, quaternion_group
from chardeg.groups import (
    Subgroup,
    build_group,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    enumerate_subgroups,
    format_cayley,
    generated_subgroup,
    is_elementary_abelian,
    is_isomorphic,
    normal_subgroups,
    parse_cayley,
    quotient_group,
    semidirect_product,
    sylow_subgroup,
)


def dihedral(n: int):
    """D_n of order 2n as C_n x| C_2 with inversion."""
    inv = np.array([(-x) % n for x in range(n)], dtype=np.int64)
    return semidirect_product(cyclic_group(n), cyclic_group(2),
                              [np.arange(n), inv], name=f"D{n}")


def test_cyclic_group_basics():
    G = cyclic_group(6)
    assert G.order == 6
    assert G.mul(2, 5) == 1
    assert G.inverse(4) == 2
    assert G.element_order(2) == 3
    assert G.exponent() == 6
    assert G.is_abelian() and G.is_cyclic()


def test_trivial_group_is_legal_everywhere():
    G = cyclic_group(1)
    assert conjugacy_classes(G).count == 1
    assert len(enumerate_subgroups(G)) == 1
    assert len(normal_subgroups(G)) == 1
    assert sylow_subgroup(G, 2).order == 1
    assert G.center().order == 1


def test_mutated_table_rejected_with_witness():
    table = cyclic_group(3).mult.copy()
    table[1, 2] = 1
    with pytest.raises(NotAGroup) as exc:
        build_group(table)
    assert exc.value.axiom
    assert exc.value.witness


def test_nonassociative_loop_rejected():
    # a Latin square with two-sided identity that is not associative
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 3, 4, 0, 1],
            [3, 4, 1, 2, 0],
            [4, 2, 0, 1, 3]]
    with pytest.raises(NotAGroup) as exc:
        build_group(loop)
    assert exc.value.axiom == "associativity"
    a, b, c = exc.value.witness
    assert loop[loop[a][b]][c] != loop[a][loop[b][c]]


def test_missing_identity_rejected():
    # left-shifted cyclic table: row 0 is not the identity row
    n = 4
    table = [[(i + j + 1) % n for j in range(n)] for i in range(n)]
    with pytest.raises(NotAGroup):
        build_group(table)


def test_conjugacy_classes_of_s3():
    G = frobenius_group(3)  # AGL(1,3) is the symmetric group on 3 letters
    data = conjugacy_classes(G)
    assert sorted(data.sizes) == [1, 2, 3]
    assert data.sizes[0] == 1 and data.representatives[0] == 0
    for g in range(G.order):
        assert g in data.classes[data.class_index(g)]
    # centralizer orders complement class sizes
    for c in range(data.count):
        assert data.sizes[c] * centralizer(G, data.representatives[c]).order == G.order


def test_power_map_and_inverse_class():
    G = cyclic_group(5)
    data = conjugacy_classes(G)
    c = data.class_index(2)
    assert data.power_map(c, 2) == data.class_index(4)
    assert data.inverse_class(c) == data.class_index(3)


def test_subgroup_construction_guards():
    G = cyclic_group(6)
    with pytest.raises(NotAGroup):
        Subgroup(G, (0, 1))  # not closed
    with pytest.raises(NotAGroup):
        Subgroup(G, (2, 4))  # no identity
    H = Subgroup(G, (0, 2, 4))
    assert H.order == 3
    sub, members = H.as_group()
    assert sub.order == 3 and members == (0, 2, 4)
    assert sub.is_cyclic()


def test_enumerate_subgroups_q8():
    G = quaternion_group()
    subs = enumerate_subgroups(G)
    assert len(subs) == 6
    assert sorted(s.order for s in subs) == [1, 2, 4, 4, 4, 8]
    # every subgroup of the quaternion group is normal
    norms = normal_subgroups(G)
    assert {s.members for s in subs} == {s.members for s in norms}


def test_three_normal_subgroups_of_s3():
    G = frobenius_group(3)
    assert len(normal_subgroups(G)) == 3
    assert len(enumerate_subgroups(G)) == 6


def test_generated_and_commutator_subgroups():
    G = dihedral(4)
    r = 2  # the generating rotation; pairs are indexed (normal, twist)
    rot = generated_subgroup(G, (r,))
    assert rot.order == 4
    comm = commutator_subgroup(G.whole_subgroup())
    assert comm.order == 2
    q, _ = quotient_group(G, comm)
    assert q.is_abelian() and q.order == 4


def test_quotient_of_q8_by_center():
    G = quaternion_group()
    Z = G.center()
    assert Z.order == 2
    Q, proj = quotient_group(G, Z)
    assert Q.order == 4 and Q.is_abelian() and Q.exponent() == 2
    # projection is a homomorphism
    for a in range(G.order):
        for b in range(G.order):
            assert proj[G.mul(a, b)] == Q.mul(int(proj[a]), int(proj[b]))


def test_quotient_requires_normal():
    G = frobenius_group(3)
    H = next(s for s in enumerate_subgroups(G) if s.order == 2)
    with pytest.raises(NotNormal):
        quotient_group(G, H)


def test_sylow_subgroups_of_agl15():
    G = frobenius_group(5)
    S5 = sylow_subgroup(G, 5)
    S2 = sylow_subgroup(G, 2)
    assert S5.order == 5 and S2.order == 4
    assert len(normal_subgroups(G)) >= 3
    from chardeg.groups import is_normal
    assert is_normal(G, S5)
    assert not is_normal(G, S2)


def test_direct_product_isomorphic_to_cyclic():
    G = direct_product(cyclic_group(2), cyclic_group(3))
    iso, wit = is_isomorphic(G, cyclic_group(6))
    assert iso and wit is not None


def test_semidirect_rejects_non_action():
    # "invert" on C4 twisted by a non-automorphism map
    bad = [np.arange(4), np.array([0, 2, 1, 3])]
    with pytest.raises(NotAnAction):
        semidirect_product(cyclic_group(4), cyclic_group(2), bad)


def test_isomorphism_negative_cases():
    assert not is_isomorphic(dihedral(4), quaternion_group())[0]
    assert not is_isomorphic(cyclic_group(4),
                             direct_product(cyclic_group(2), cyclic_group(2)))[0]
    assert not is_isomorphic(cyclic_group(4), cyclic_group(5))[0]


def test_isomorphism_witness_is_a_homomorphism():
    A = dihedral(3)
    B = frobenius_group(3)
    iso, wit = is_isomorphic(A, B)
    assert iso
    for a in range(A.order):
        for b in range(A.order):
            assert wit[A.mul(a, b)] == B.mul(wit[a], wit[b])


def test_elementary_abelian_detection():
    c3c3 = direct_product(cyclic_group(3), cyclic_group(3))
    flag, p, k = is_elementary_abelian(c3c3.whole_subgroup())
    assert (flag, p, k) == (True, 3, 2)
    assert is_elementary_abelian(cyclic_group(4).whole_subgroup())[0] is False
    assert is_elementary_abelian(cyclic_group(6).whole_subgroup())[0] is False
    assert is_elementary_abelian(cyclic_group(1).trivial_subgroup()) == (True, None, 0)


def test_subgroup_parent_mismatch():
    G, H = cyclic_group(4), cyclic_group(8)
    S = Subgroup(H, (0, 4))
    with pytest.raises(GroupMismatch):
        enumerate_subgroups(G, containing=S)


def test_cayley_roundtrip_with_labels():
    G = quaternion_group()
    text = format_cayley(G)
    H = parse_cayley(text)
    assert np.array_equal(G.mult, H.mult)
    assert H.labels == G.labels


def test_cayley_parse_rejects_malformed():
    with pytest.raises(ValueError):
        parse_cayley("")
    with pytest.raises(ValueError):
        parse_cayley("2\n0 1\n")  # missing a row
    with pytest.raises(ValueError):
        parse_cayley("2\n0 1\n1 0\nnonsense\n")


def test_single_class_normal_subgroups_are_elementary_abelian(catalog_all):
    """If N - {1} is one conjugacy class of G, N is elementary abelian.

    Swept over every nontrivial normal subgroup of every catalog group.
    """
    hits = 0
    for G in catalog_all:
        data = conjugacy_classes(G)
        for N in normal_subgroups(G):
            if N.order == 1:
                continue
            nontrivial = [m for m in N.members if m != 0]
            classes = {data.class_index(m) for m in nontrivial}
            if len(classes) == 1 and data.sizes[classes.pop()] == len(nontrivial):
                assert is_elementary_abelian(N)[0], (G.name, N.members)
                hits += 1
    assert hits >= 10  # the sweep must actually exercise the hypothesis
