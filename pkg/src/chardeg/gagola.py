"""Structure checks for groups with a character of near-maximal degree.

Setting: G of order n with an irreducible character chi of degree d, and
e defined by n = d(d+e).  When some nontrivial normal subgroup N acts
trivially on every simple module except the one carrying chi, the group
is tightly constrained.  This module verifies, mechanically and exactly:

* the class-pattern criterion (classes are {1}, N-{1}, and preimages of
  the nontrivial classes of G/N) and its equivalence with the
  representation-theoretic statement;
* the four structural conditions on (N, C, p, k, m): N elementary
  abelian of order p^k; #C = p^k e^2 with d = e(p^k-1) and
  n = e^2 p^k (p^k-1); C a Sylow p-subgroup with e = p^m; and
  N inside [H,H] for every N <= H <= C with #H > p^(k+m);
* the integrality relation e p^k / #H = (chi, phi)_H for degree-1
  characters phi of such H nontrivial on N;
* the trichotomy d = e, or d+e | (2e-1)!/e, or such an N exists;
* several instance-level consequences used by the classification
  (Taussky's commutator theorem, the rank bound k < 2m, the Schreier
  generator bound, centralizer growth).

Everything returns an explicit certificate with per-condition witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .chartable import (
    CharTable,
    Character,
    degree_one_characters,
    dixon_char_table,
    gagola_kernel,
    inner_product,
    restrict_character,
)
from .errors import (
    GroupMismatch,
    InternalInconsistency,
    NotNormal,
    PreconditionViolated,
)
from .groups import (
    Group,
    Subgroup,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    enumerate_subgroups,
    is_elementary_abelian,
    is_normal,
    normal_subgroups,
    quotient_group,
)
from .schemas import jsonable as _jsonable

__all__ = [
    "class_pattern_check",
    "acts_trivially_except_one",
    "GagolaCertificate",
    "check_conditions",
    "check_conditions_for_normal",
    "subgroups_between",
    "star_integrality",
    "degree_pattern_check",
    "trichotomy",
    "taussky_commutator_cyclic",
    "centralizer_growth_check",
    "rank_inequality_check",
    "schreier_rank_bound_check",
    "normal_case_bound_check",
]


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _prime_power_exponent(e: int, p: int) -> int | None:
    """m with e = p^m, or None."""
    if e < 1:
        return None
    m = 0
    while e % p == 0:
        e //= p
        m += 1
    return m if e == 1 else None


def class_pattern_check(G: Group, N: Subgroup) -> tuple[bool, dict]:
    """Are the classes of G exactly {1}, N-{1}, and preimages from G/N?

    Requires N normal and nontrivial.  Returns (flag, detail) where the
    detail records which part of the pattern failed.
    """
    if N.parent is not G:
        raise GroupMismatch("subgroup of a different group")
    if N.order == 1:
        raise PreconditionViolated("pattern check needs a nontrivial subgroup")
    if not is_normal(G, N):
        raise NotNormal(f"{N!r} is not normal")
    data = conjugacy_classes(G)
    nontrivial = tuple(sorted(m for m in N.members if m != 0))
    cls_ids = {data.class_index(m) for m in nontrivial}
    if len(cls_ids) != 1 or data.classes[next(iter(cls_ids))] != nontrivial:
        return False, {"reason": "N-{1} is not a single conjugacy class"}
    Q, proj = quotient_group(G, N)
    qdata = conjugacy_classes(Q)
    if data.count != 2 + qdata.count - 1:
        return False, {"reason": "class count mismatch",
                       "classes": data.count, "quotient_classes": qdata.count}
    for c in range(1, qdata.count):
        pre = tuple(sorted(g for g in range(G.order)
                           if qdata.class_index(int(proj[g])) == c))
        ids = {data.class_index(g) for g in pre}
        if len(ids) != 1 or data.classes[next(iter(ids))] != pre:
            return False, {"reason": "a quotient class does not pull back to one class",
                           "quotient_class": c}
    return True, {"classes": data.count, "quotient_classes": qdata.count}


def acts_trivially_except_one(G: Group, N: Subgroup,
                              bound: int | None = None) -> tuple[bool, Character | None]:
    """Does N act trivially on every nontrivial simple module except one?

    Returns (flag, the exceptional character) using the exact character
    table; the trivial module is excluded from the count since N always
    acts trivially on it.
    """
    if N.parent is not G:
        raise GroupMismatch("subgroup of a different group")
    table = dixon_char_table(G, bound)
    mem = set(N.members)
    exceptional = [ch for ch in table.irreducibles
                   if not ch.is_trivial() and not mem <= set(ch.kernel_members())]
    if len(exceptional) == 1:
        return True, exceptional[0]
    return False, None


def subgroups_between(G: Group, N: Subgroup, C: Subgroup,
                      bound: int | None = None) -> list[Subgroup]:
    """All subgroups H of G with N <= H <= C, through the quotient C/N.

    The correspondence theorem keeps the enumeration inside C/N, which is
    small in the intended use (C/N has order e^2).
    """
    if not set(N.members) <= set(C.members):
        raise PreconditionViolated("N must be contained in C")
    Cg, c_members = C.as_group()
    pos = {m: i for i, m in enumerate(c_members)}
    N_in_C = Subgroup(Cg, tuple(sorted(pos[m] for m in N.members)))
    if not is_normal(Cg, N_in_C):
        raise NotNormal("N is not normal in C")
    Q, proj = quotient_group(Cg, N_in_C)
    out = []
    for S in enumerate_subgroups(Q, bound=bound):
        members = tuple(sorted(c_members[i] for i in range(Cg.order)
                               if int(proj[i]) in S.member_set))
        out.append(Subgroup(G, members))
    out.sort(key=lambda H: (H.order, H.members))
    return out


def star_integrality(chi: Character, N: Subgroup, H: Subgroup,
                     phi: Character, e: int, p: int, k: int) -> tuple[Fraction, bool]:
    """The relation e p^k / #H = (chi, phi)_H for phi nontrivial on H cap N.

    Verifies the inner product exactly against the closed form and
    returns (value, value in Z).  Raises PreconditionViolated when phi is
    trivial on H cap N, where the relation does not apply.
    """
    Hg, members = H.as_group()
    if phi.group is not Hg:
        raise GroupMismatch("phi must live on H's group copy")
    inter = sorted(set(members) & set(N.members))
    pos = {m: i for i, m in enumerate(members)}
    if all(phi.value_at(pos[m]) == 1 for m in inter):
        raise PreconditionViolated("phi is trivial on H cap N")
    ip = inner_product(restrict_character(chi, H), phi)
    if not ip.is_rational():
        raise InternalInconsistency(f"(chi, phi)_H not rational: {ip}")
    value = ip.as_fraction()
    expected = Fraction(e * p**k, H.order)
    if value != expected:
        raise InternalInconsistency(
            f"(chi, phi)_H = {value} but e*p^k/#H = {expected}")
    return value, value.denominator == 1


@dataclass
class ConditionResult:
    cid: str
    passed: bool
    witness: dict = field(default_factory=dict)


@dataclass
class GagolaCertificate:
    """Outcome of the full condition battery for one (G, chi) pair."""

    group_name: str
    n: int
    d: int
    e: int
    p: int | None
    k: int | None
    m: int | None
    conditions: list[ConditionResult]
    character_degree_check: bool
    group: Group | None = None
    chi: Character | None = None
    N: Subgroup | None = None
    C: Subgroup | None = None

    @property
    def passed(self) -> bool:
        return self.character_degree_check and all(c.passed for c in self.conditions)

    def condition(self, cid: str) -> ConditionResult:
        for c in self.conditions:
            if c.cid == cid:
                return c
        raise KeyError(cid)

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "n": self.n,
            "d": self.d,
            "e": self.e,
            "p": self.p,
            "k": self.k,
            "m": self.m,
            "conditions": [
                {"id": c.cid, "pass": c.passed, "witness": _jsonable(c.witness)}
                for c in self.conditions
            ],
            "character_degree_check": self.character_degree_check,
            "passed": self.passed,
        }


def _pick_character(table: CharTable) -> Character:
    degrees = table.degrees()
    top = max(degrees)
    cands = [ch for ch in table.irreducibles if ch.degree_int() == top]
    if len(cands) != 1:
        raise PreconditionViolated(
            f"no unique character of maximal degree {top}; pass chi explicitly")
    return cands[0]


def check_conditions(G: Group, chi: Character | None = None,
                     bound: int | None = None,
                     N: Subgroup | None = None) -> GagolaCertificate:
    """Run the full structural battery for the pair (G, chi).

    chi defaults to the unique irreducible of maximal degree; N defaults
    to the intersection of the kernels of all other irreducibles.  When
    an explicit N is given (it must be nontrivial and normal) the battery
    is evaluated against that subgroup, and the opening condition asks
    that N act trivially on every simple module except the one carrying
    chi.  The certificate carries one entry per condition; arithmetic
    identities between the recovered parameters (p, k, m, d, e, n) are
    re-asserted whenever the relevant conditions pass.
    """
    table = dixon_char_table(G, bound)
    if chi is None:
        chi = _pick_character(table)
    if chi.group is not G:
        raise GroupMismatch("character from a different group")
    n = G.order
    d = chi.degree_int()
    if d <= 0 or n % d != 0 or n // d < d:
        raise PreconditionViolated(f"degree {d} does not divide order {n} as d(d+e)")
    e = n // d - d
    if e < 1:
        raise PreconditionViolated("e must be at least 1 (e = 0 forces the trivial group)")

    conditions: list[ConditionResult] = []
    if N is None:
        N = gagola_kernel(table, chi)
        kernel_ok = N.order > 1
        conditions.append(ConditionResult(
            "kernel-nontrivial", kernel_ok, {"kernel_order": N.order}))
    else:
        if N.parent is not G:
            raise GroupMismatch("subgroup of a different group")
        if N.order == 1:
            raise PreconditionViolated("N must be nontrivial")
        if not is_normal(G, N):
            raise NotNormal("the distinguished subgroup must be normal")
        acts_ok, exceptional = acts_trivially_except_one(G, N, bound)
        kernel_ok = acts_ok and exceptional == chi
        conditions.append(ConditionResult(
            "acts-trivially-except-one", kernel_ok,
            {"subgroup_order": N.order}))

    p = k = m = None
    C = None
    char_ok = False
    if kernel_ok:
        pattern_ok, detail = class_pattern_check(G, N)
        acts_ok, exceptional = acts_trivially_except_one(G, N, bound)
        if pattern_ok != (acts_ok and exceptional == chi):
            raise InternalInconsistency(
                "class-pattern and module-action criteria disagree")
        conditions.append(ConditionResult("class-pattern", pattern_ok, detail))

        # character values must be d at 1, -e on N-{1}, 0 elsewhere
        data = table.classes
        char_ok = True
        nm = set(N.members)
        for c in range(data.count):
            rep = data.representatives[c]
            want = d if rep == 0 else (-e if rep in nm else 0)
            if chi.values[c] != want:
                char_ok = False
                break
        conditions.append(ConditionResult(
            "character-values", char_ok,
            {"values": [str(v) for v in chi.values]}))

        flag, p_found, k_found = is_elementary_abelian(N)
        cond1 = flag and p_found is not None
        if cond1:
            p, k = p_found, k_found
        conditions.append(ConditionResult(
            "c1-elementary-abelian", cond1,
            {"order": N.order, "p": p, "k": k}))

        cent_orders = sorted({centralizer(G, x).order for x in N.members if x != 0})
        invariance = len(cent_orders) == 1
        conditions.append(ConditionResult(
            "centralizer-invariance", invariance, {"orders": cent_orders}))

        x = next(mm for mm in N.members if mm != 0)
        C = centralizer(G, x)
        if cond1 and invariance:
            cond2 = (C.order == p**k * e * e
                     and d == e * (p**k - 1)
                     and n == e * e * p**k * (p**k - 1))
            conditions.append(ConditionResult(
                "c2-centralizer-order", cond2,
                {"centralizer_order": C.order, "expected": p**k * e * e}))

            m = _prime_power_exponent(e, p)
            sylow_ok = (C.order == _p_part(n, p)) and m is not None
            conditions.append(ConditionResult(
                "c3-sylow", sylow_ok,
                {"centralizer_order": C.order, "p_part_of_n": _p_part(n, p),
                 "e": e, "m": m}))

            if cond2 and sylow_ok:
                if C.order != p ** (k + 2 * m) or d != (p**k - 1) * p**m:
                    raise InternalInconsistency("parameter identities violated")
                cond4_ok = True
                checked = []
                star_checked = 0
                for H in subgroups_between(G, N, C, bound):
                    if H.order > p ** (k + m):
                        comm = commutator_subgroup(H)
                        holds = set(N.members) <= set(comm.members)
                        checked.append({"order": H.order, "contains_N": holds})
                        if not holds:
                            cond4_ok = False
                    # the integrality relation (*) holds for every H here
                    pos = {mm: i for i, mm in enumerate(H.as_group()[1])}
                    inter = [pos[mm] for mm in H.members if mm in set(N.members)]
                    for phi in degree_one_characters(H):
                        if all(phi.values[phi.classes.class_of[i]] == 1 for i in inter):
                            continue
                        value, integral = star_integrality(chi, N, H, phi, e, p, k)
                        if not integral:
                            raise InternalInconsistency(
                                f"(chi, phi)_H = {value} is not an integer")
                        star_checked += 1
                conditions.append(ConditionResult(
                    "c4-commutator", cond4_ok, {"subgroups": checked}))
                conditions.append(ConditionResult(
                    "star-integrality", True, {"pairs_checked": star_checked}))

    return GagolaCertificate(
        group_name=G.name, n=n, d=d, e=e, p=p, k=k, m=m,
        conditions=conditions, character_degree_check=char_ok,
        group=G, chi=chi, N=N, C=C)


def check_conditions_for_normal(G: Group, N: Subgroup,
                                bound: int | None = None) -> GagolaCertificate:
    """Battery entry point keyed by the normal subgroup instead of chi.

    The candidate character is the one simple module N acts nontrivially
    on.  When no such unique module exists, or its degree does not fit
    n = d(d+e) with e >= 1, the certificate fails on that opening
    condition instead of raising, so sweeps over arbitrary (G, N) pairs
    stay mechanical.
    """
    if N.parent is not G:
        raise GroupMismatch("subgroup of a different group")
    if N.order == 1:
        raise PreconditionViolated("N must be nontrivial")
    if not is_normal(G, N):
        raise NotNormal("the distinguished subgroup must be normal")

    def failed(cid: str, witness: dict, d: int = 0, e: int = 0,
               chi: Character | None = None) -> GagolaCertificate:
        return GagolaCertificate(
            group_name=G.name, n=G.order, d=d, e=e, p=None, k=None, m=None,
            conditions=[ConditionResult(cid, False, witness)],
            character_degree_check=False, group=G, chi=chi, N=N, C=None)

    ok, chi = acts_trivially_except_one(G, N, bound)
    if not ok or chi is None:
        return failed("acts-trivially-except-one",
                      {"subgroup_order": N.order})
    n, d = G.order, chi.degree_int()
    if n % d != 0 or n // d - d < 1:
        return failed("degree-shape", {"d": d, "n": n}, d=d, chi=chi)
    return check_conditions(G, chi, bound, N=N)


def degree_pattern_check(G: Group, N: Subgroup, d: int,
                         bound: int | None = None) -> bool:
    """Degrees of G should be the degrees of G/N together with d.

    This is the numerical shadow of C[G] = C[G/N] (+) End(V).
    """
    table = dixon_char_table(G, bound)
    Q, _ = quotient_group(G, N)
    qtable = dixon_char_table(Q, bound)
    return sorted(table.degrees()) == sorted(qtable.degrees() + (d,))


def trichotomy(G: Group, chi: Character | None = None,
               bound: int | None = None) -> dict:
    """Which of the three structural cases hold for (G, chi)?

    Cases: d = e; (d+e) divides (2e-1)!/e; or some nontrivial normal
    subgroup acts trivially on every simple module except the one
    carrying chi.  At least one must hold whenever e >= 1, and that is
    asserted.  All holding cases are reported; "primary" is the first.
    """
    table = dixon_char_table(G, bound)
    if chi is None:
        chi = _pick_character(table)
    n, d = G.order, chi.degree_int()
    if d <= 0 or n % d != 0 or n // d < d:
        raise PreconditionViolated("chi does not fit n = d(d+e)")
    e = n // d - d
    if e < 1:
        raise PreconditionViolated("trichotomy applies for e >= 1")
    cases = []
    if d == e:
        cases.append("d_equals_e")
    quotient = factorial(2 * e - 1) // e
    if factorial(2 * e - 1) % e != 0:
        raise InternalInconsistency("(2e-1)! is always divisible by e")
    if quotient % (d + e) == 0:
        cases.append("factorial")
    normal_witness = None
    for N in normal_subgroups(G):
        if N.order == 1:
            continue
        ok, exceptional = acts_trivially_except_one(G, N, bound)
        if ok and exceptional == chi:
            normal_witness = N
            break
    if normal_witness is not None:
        cases.append("normal_subgroup")
    if not cases:
        raise InternalInconsistency(
            f"trichotomy violated for {G.name} with d={d}, e={e}")
    return {
        "d": d,
        "e": e,
        "cases": cases,
        "primary": cases[0],
        "factorial_quotient": quotient,
        "normal_witness_order": None if normal_witness is None else normal_witness.order,
    }


# -- instance-level consequences ----------------------------------------------

def taussky_commutator_cyclic(C: Subgroup) -> tuple[bool, bool, dict]:
    """For a 2-group C with [C : [C,C]] = 4 the commutator subgroup is cyclic.

    Returns (applicable, holds, data); holds is vacuously True when the
    hypothesis fails.
    """
    Cg, _ = C.as_group()
    order = Cg.order
    applicable = order > 1 and (order & (order - 1)) == 0
    comm = commutator_subgroup(Cg.whole_subgroup())
    if applicable:
        applicable = order // comm.order == 4
    if not applicable:
        return False, True, {"order": order, "commutator_order": comm.order}
    sub, _ = comm.as_group()
    return True, sub.is_cyclic(), {"order": order, "commutator_order": comm.order}


def centralizer_growth_check(cert: GagolaCertificate) -> tuple[bool, bool, dict]:
    """For e > 1 not a power of 2: the centralizer of N inside C exceeds N."""
    if not cert.passed:
        raise PreconditionViolated("needs a passing certificate")
    e = cert.e
    applicable = e > 1 and (e & (e - 1)) != 0
    N, C = cert.N, cert.C
    Cg, c_members = C.as_group()
    pos = {mm: i for i, mm in enumerate(c_members)}
    inside = [i for i in range(Cg.order)
              if all(Cg.mul(i, pos[x]) == Cg.mul(pos[x], i) for x in N.members)]
    cc_order = len(inside)
    holds = cc_order > N.order
    return applicable, (holds if applicable else True), {
        "centralizer_in_C_order": cc_order, "N_order": N.order}


def rank_inequality_check(cert: GagolaCertificate) -> tuple[bool, bool, dict]:
    """For e > 1 not a power of 2: k < 2m."""
    if not cert.passed:
        raise PreconditionViolated("needs a passing certificate")
    e, k, m = cert.e, cert.k, cert.m
    applicable = e > 1 and (e & (e - 1)) != 0
    holds = k < 2 * m if applicable else True
    return applicable, holds, {"k": k, "m": m}


def schreier_rank_bound_check(cert: GagolaCertificate) -> tuple[bool, bool, dict]:
    """k is at most p^(m+1) m + 1 (from the Schreier index formula)."""
    if not cert.passed:
        raise PreconditionViolated("needs a passing certificate")
    p, k, m = cert.p, cert.k, cert.m
    limit = p ** (m + 1) * m + 1
    return True, k <= limit, {"k": k, "limit": limit}


def normal_case_bound_check(cert: GagolaCertificate) -> tuple[bool, bool, dict]:
    """For e > 1 not a power of 2: n < e^6."""
    if not cert.passed:
        raise PreconditionViolated("needs a passing certificate")
    e, n = cert.e, cert.n
    applicable = e > 1 and (e & (e - 1)) != 0
    holds = n < e**6 if applicable else True
    return applicable, holds, {"n": n, "e_sixth": e**6}
