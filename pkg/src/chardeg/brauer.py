"""Virtual-character detection through elementary subgroups.

Brauer's induction theorem gives an exact criterion: a class function is
a virtual character if and only if its inner product with every degree-1
character of every elementary subgroup is an integer.  (An elementary
subgroup is a direct product of a p-group with a cyclic group of order
prime to p.)  The criterion is effective because elementary groups are
monomial and subgroups of elementary groups are elementary.

This module enumerates all elementary subgroups of a group, implements
the integrality test, and implements the independent route through the
character table (integer coordinates in the irreducible basis).  The two
routes must always agree; `virtuality_agreement` asserts that.

It also packages the sufficiency direction for the near-maximal-degree
setting: from purely group-theoretic hypotheses on a normal subgroup N
(elementary abelian of order p^k, centralizer a Sylow p-subgroup of
order p^(k+2m), commutator condition), the class function with values
(d, -p^m, 0) for d = (p^k-1)p^m is certified to be the character of a
simple module, by Brauer integrality plus norm one, and cross-checked
against the computed table.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chartable import (
    CharTable,
    Character,
    degree_one_characters,
    dixon_char_table,
    inner_product,
    restrict_character,
)
from .config import BRAUER_AGREEMENT_COUNT, BRAUER_AGREEMENT_SEED, order_bound
from .cyclotomic import Cyclotomic
from .errors import (
    GroupMismatch,
    InternalInconsistency,
    NotPrime,
    OrderBoundExceeded,
)
from .groups import (
    Group,
    Subgroup,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    enumerate_subgroups,
    generated_subgroup,
    is_elementary_abelian,
    is_normal,
    sylow_subgroup,
)

__all__ = [
    "ElementarySubgroup",
    "p_subgroups",
    "enumerate_elementary_subgroups",
    "brauer_virtual_character_check",
    "decompose_into_irreducibles",
    "virtual_by_decomposition",
    "virtuality_agreement",
    "random_class_functions",
    "f_value",
    "converse_certificate",
]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_subgroups(G: Group, Z: Subgroup, p: int) -> list[tuple[int, ...]]:
    """Member tuples of all p-subgroups of Z, including the trivial one.

    Every p-subgroup of Z lies in a Sylow p-subgroup and those are
    conjugate, so the subgroups of one Sylow together with their
    Z-conjugates exhaust the list.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    Zg, zmem = Z.as_group()
    P0 = sylow_subgroup(Zg, p)
    Pg, pmem = P0.as_group()
    seen: set[tuple[int, ...]] = set()
    for S in enumerate_subgroups(Pg):
        base = [pmem[i] for i in S.members]
        for z in range(Zg.order):
            zi = Zg.inverse(z)
            conj = tuple(sorted(int(Zg.mult[Zg.mult[z, x], zi]) for x in base))
            seen.add(conj)
    return sorted((tuple(sorted(zmem[i] for i in ms)) for ms in seen),
                  key=lambda t: (len(t), t))


@dataclass
class ElementarySubgroup:
    """An elementary subgroup with every (p, p-part, cyclic part) witness."""

    subgroup: Subgroup
    witnesses: list[dict]


def enumerate_elementary_subgroups(G: Group, bound: int | None = None
                                   ) -> list[ElementarySubgroup]:
    """All elementary subgroups of G (direct products P x <y>, p not | ord y).

    Scans canonical generators of the cyclic subgroups, takes p-subgroups
    of their centralizers for the primes p not dividing the cyclic order,
    and multiplies.  Subgroups are deduplicated on members; all witnesses
    are kept.
    """
    if G.order > order_bound(bound):
        raise OrderBoundExceeded(
            f"|G| = {G.order} exceeds bound {order_bound(bound)}")
    primes = _prime_factors(G.order) or [2]
    cyclic: dict[tuple[int, ...], int] = {}
    for y in range(G.order):
        Y = generated_subgroup(G, [y])
        cyclic.setdefault(Y.members, y)
    found: dict[tuple[int, ...], ElementarySubgroup] = {}
    psub_cache: dict[tuple[tuple[int, ...], int], list[tuple[int, ...]]] = {}
    for members, y in sorted(cyclic.items(), key=lambda kv: (len(kv[0]), kv[0])):
        y_order = len(members)
        Z = centralizer(G, y)
        for p in primes:
            if y_order % p == 0:
                continue
            key = (Z.members, p)
            if key not in psub_cache:
                psub_cache[key] = p_subgroups(G, Z, p)
            for pset in psub_cache[key]:
                prod = sorted({G.mul(a, b) for a in pset for b in members})
                if len(prod) != len(pset) * y_order:
                    raise InternalInconsistency(
                        "p-part and cyclic part do not meet trivially")
                H = Subgroup(G, tuple(prod))
                witness = {"p": p, "p_part": pset, "generator": y}
                entry = found.get(H.members)
                if entry is None:
                    found[H.members] = ElementarySubgroup(H, [witness])
                else:
                    entry.witnesses.append(witness)
    return [found[k] for k in sorted(found, key=lambda t: (len(t), t))]


def brauer_virtual_character_check(theta: Character, bound: int | None = None
                                   ) -> tuple[bool, dict | None]:
    """Is theta a virtual character, by elementary-subgroup integrality?

    Returns (True, None) or (False, witness) where the witness names the
    subgroup, the degree-1 character index and the offending inner
    product.
    """
    G = theta.group
    for entry in enumerate_elementary_subgroups(G, bound):
        H = entry.subgroup
        res = restrict_character(theta, H)
        for i, phi in enumerate(degree_one_characters(H)):
            val = inner_product(res, phi)
            if not val.is_integer():
                return False, {
                    "subgroup": list(H.members),
                    "phi_index": i,
                    "value": str(val),
                }
    return True, None


def decompose_into_irreducibles(theta: Character, table: CharTable
                                ) -> list[Cyclotomic]:
    """Coordinates of theta in the irreducible basis, with reconstruction.

    The reconstruction identity sum_i (theta, chi_i) chi_i = theta holds
    for every class function and is re-asserted exactly.
    """
    if theta.group is not table.group:
        raise GroupMismatch("class function from a different group")
    coeffs = [inner_product(theta, chi) for chi in table.irreducibles]
    recon = [Cyclotomic.zero(1)] * len(theta.values)
    for c, chi in zip(coeffs, table.irreducibles):
        recon = [r + c * v for r, v in zip(recon, chi.values)]
    if any(r != v for r, v in zip(recon, theta.values)):
        raise InternalInconsistency("irreducible decomposition fails to reconstruct")
    return coeffs


def virtual_by_decomposition(theta: Character, table: CharTable) -> bool:
    return all(c.is_integer() for c in decompose_into_irreducibles(theta, table))


def virtuality_agreement(theta: Character, table: CharTable,
                         bound: int | None = None) -> bool:
    """Run both virtuality routes and assert they agree."""
    by_brauer, witness = brauer_virtual_character_check(theta, bound)
    by_basis = virtual_by_decomposition(theta, table)
    if by_brauer != by_basis:
        raise InternalInconsistency(
            f"Brauer criterion ({by_brauer}, witness {witness}) disagrees "
            f"with basis decomposition ({by_basis})")
    return by_brauer


def random_class_functions(G: Group, count: int = BRAUER_AGREEMENT_COUNT,
                           seed: int = BRAUER_AGREEMENT_SEED) -> list[Character]:
    """Seeded integer class functions for agreement testing.

    Even indices: uniform integer values in [-3, 3] per class, rarely a
    virtual character.  Odd indices: integer combinations of irreducibles
    with coefficients in [-2, 2], always a virtual character.
    """
    rng = np.random.default_rng(seed)
    data = conjugacy_classes(G)
    table = dixon_char_table(G)
    out = []
    for i in range(count):
        if i % 2 == 0:
            vals = rng.integers(-3, 4, size=data.count)
            out.append(Character(G, [int(v) for v in vals], data))
        else:
            coeffs = rng.integers(-2, 3, size=data.count)
            vals = [Cyclotomic.zero(1)] * data.count
            for c, chi in zip(coeffs, table.irreducibles):
                if int(c):
                    vals = [v + int(c) * w for v, w in zip(vals, chi.values)]
            out.append(Character(G, vals, data))
    return out


def f_value(chi_cf: Character, N: Subgroup, H: Subgroup, phi: Character,
            p: int, k: int, m: int) -> Fraction:
    """f(H, phi) = (chi, phi)_H computed twice and matched.

    Direct route: exact inner product of the restriction with phi.
    Closed form: (p^m / #H) (p^k - #(H cap N) (phi, 1)_{H cap N}).
    """
    direct = inner_product(restrict_character(chi_cf, H), phi)
    Hg, members = H.as_group()
    pos = {mm: i for i, mm in enumerate(members)}
    inter = sorted(set(members) & set(N.members))
    acc = Cyclotomic.zero(1)
    for mm in inter:
        acc = acc + phi.value_at(pos[mm])
    phi_avg = acc / len(inter)
    closed = (Cyclotomic.rational(p**k) - len(inter) * phi_avg) * Fraction(p**m, H.order)
    if direct != closed:
        raise InternalInconsistency(
            f"f(H, phi): direct {direct} differs from closed form {closed}")
    if not direct.is_rational():
        raise InternalInconsistency(f"f(H, phi) is not rational: {direct}")
    return direct.as_fraction()


def converse_certificate(G: Group, N: Subgroup, bound: int | None = None) -> dict:
    """Sufficiency: group-theoretic hypotheses force the big character.

    Hypotheses checked: N elementary abelian normal of order p^k; the
    centralizer C of a nontrivial element of N is a Sylow p-subgroup of
    order p^(k+2m) where n = p^(k+2m)(p^k-1); and N <= [H,H] for every
    N <= H <= C with #H > p^(k+m).  Conclusion certified: the class
    function with values (d, -p^m, 0), d = (p^k-1)p^m, has integral
    Brauer products (via f_value on every elementary subgroup and every
    degree-1 character), has norm 1 and positive degree, and equals an
    actual irreducible of the computed table; and the degree multiset of
    G is that of G/N plus d.
    """
    from .gagola import degree_pattern_check, subgroups_between

    if N.parent is not G:
        raise GroupMismatch("subgroup of a different group")
    if not is_normal(G, N):
        return {"hypotheses": False, "reason": "N is not normal"}
    flag, p, k = is_elementary_abelian(N)
    if not flag or p is None:
        return {"hypotheses": False, "reason": "N is not elementary abelian"}
    n = G.order
    rest = n // (p**k * (p**k - 1)) if n % (p**k * (p**k - 1)) == 0 else 0
    m = 0
    while rest > 1 and rest % (p * p) == 0:
        rest //= p * p
        m += 1
    if rest != 1:
        return {"hypotheses": False,
                "reason": "order is not p^(k+2m)(p^k-1)"}
    x = next(mm for mm in N.members if mm != 0)
    C = centralizer(G, x)
    p_part = 1
    nn = n
    while nn % p == 0:
        nn //= p
        p_part *= p
    if C.order != p ** (k + 2 * m) or C.order != p_part:
        return {"hypotheses": False,
                "reason": "centralizer is not a Sylow p-subgroup of order p^(k+2m)",
                "centralizer_order": C.order}
    for H in subgroups_between(G, N, C, bound):
        if H.order > p ** (k + m):
            comm = commutator_subgroup(H)
            if not set(N.members) <= set(comm.members):
                return {"hypotheses": False,
                        "reason": "commutator condition fails",
                        "subgroup_order": H.order}

    d = (p**k - 1) * p**m
    data = conjugacy_classes(G)
    nm = set(N.members)
    values = []
    for c in range(data.count):
        rep = data.representatives[c]
        values.append(d if rep == 0 else (-(p**m) if rep in nm else 0))
    chi_cf = Character(G, values, data)

    f_values = []
    for entry in enumerate_elementary_subgroups(G, bound):
        H = entry.subgroup
        for phi in degree_one_characters(H):
            val = f_value(chi_cf, N, H, phi, p, k, m)
            if val.denominator != 1:
                return {"hypotheses": True, "conclusion": False,
                        "reason": "non-integral f value",
                        "value": str(val), "subgroup": list(H.members)}
            f_values.append(val)
    norm = inner_product(chi_cf, chi_cf)
    if norm != 1:
        raise InternalInconsistency(f"(chi, chi) = {norm}, expected 1")
    table = dixon_char_table(G, bound)
    matches = [i for i, chi in enumerate(table.irreducibles) if chi == chi_cf]
    if len(matches) != 1:
        raise InternalInconsistency("certified character missing from the table")
    if not degree_pattern_check(G, N, d, bound):
        raise InternalInconsistency("degree pattern C[G] = C[G/N] + d^2 fails")
    return {
        "hypotheses": True,
        "conclusion": True,
        "p": p, "k": k, "m": m, "d": d,
        "f_values_checked": len(f_values),
        "irreducible_index": matches[0],
    }
