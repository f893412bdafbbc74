"""Finite groups as explicit Cayley tables.

A group of order n lives on the element set {0, .., n-1} with 0 the
identity.  The full n x n multiplication table is stored as a numpy array
and every constructor verifies the group axioms, reporting a witness
triple on failure.  Groups are immutable once built; derived data
(element orders, conjugacy classes, subgroup enumerations) is cached on
the instance.

All orderings are canonical so that downstream output is byte
reproducible: conjugacy classes are sorted with the identity class first
and then by (size, minimal representative); subgroup lists are sorted by
(order, member tuple); isomorphism witnesses come from a backtracking
search that scans candidates in ascending index order.
"""
from __future__ import annotations

from functools import reduce
from math import gcd

import numpy as np

from .config import order_bound
from .errors import (
    GroupMismatch,
    InternalInconsistency,
    NotAGroup,
    NotAnAction,
    NotNormal,
    NotPrime,
    OrderBoundExceeded,
)

__all__ = [
    "Group",
    "Subgroup",
    "ClassData",
    "build_group",
    "cyclic_group",
    "direct_product",
    "semidirect_product",
    "conjugacy_classes",
    "centralizer",
    "centralizer_of_set",
    "normalizer",
    "commutator_subgroup",
    "generated_subgroup",
    "enumerate_subgroups",
    "normal_subgroups",
    "is_normal",
    "sylow_subgroup",
    "quotient_group",
    "is_isomorphic",
    "is_elementary_abelian",
    "parse_cayley",
    "format_cayley",
]


def _as_table(mult) -> np.ndarray:
    table = np.array(mult, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotAGroup("table is not square", axiom="shape")
    return table


def _verify_axioms(table: np.ndarray) -> np.ndarray:
    """Check all group axioms; return the inverse array.

    Raises NotAGroup with the name of the first violated axiom and a
    witness tuple of element indices.
    """
    n = table.shape[0]
    if n == 0:
        raise NotAGroup("empty table", axiom="shape")
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise NotAGroup("entry out of range", axiom="range", witness=tuple(int(v) for v in bad))
    idx = np.arange(n)
    if not np.array_equal(table[0], idx):
        b = int(np.nonzero(table[0] != idx)[0][0])
        raise NotAGroup("0 is not a left identity", axiom="identity", witness=(0, b))
    if not np.array_equal(table[:, 0], idx):
        a = int(np.nonzero(table[:, 0] != idx)[0][0])
        raise NotAGroup("0 is not a right identity", axiom="identity", witness=(a, 0))
    if not np.array_equal(np.sort(table, axis=1), np.tile(idx, (n, 1))):
        a = int(np.nonzero(np.sort(table, axis=1) != idx)[0][0])
        raise NotAGroup("row is not a permutation", axiom="latin_row", witness=(a,))
    if not np.array_equal(np.sort(table, axis=0), np.tile(idx[:, None], (1, n))):
        b = int(np.nonzero(np.sort(table, axis=0) != idx[:, None])[1][0])
        raise NotAGroup("column is not a permutation", axiom="latin_column", witness=(b,))
    # Associativity, one row at a time to keep memory at O(n^2).
    for a in range(n):
        left = table[table[a]]        # left[b, c] = (a*b)*c
        right = table[a][table]       # right[b, c] = a*(b*c)
        if not np.array_equal(left, right):
            b, c = (int(v) for v in np.argwhere(left != right)[0])
            raise NotAGroup("associativity fails", axiom="associativity", witness=(a, b, c))
    inv = np.argmin(table, axis=1)    # position of 0 in each row
    if not np.all(table[inv, idx] == 0):
        a = int(np.nonzero(table[inv, idx] != 0)[0][0])
        raise NotAGroup("inverse is one-sided", axiom="inverse", witness=(a,))
    return inv


class Group:
    """Immutable finite group on {0..n-1} given by its Cayley table."""

    def __init__(self, mult, labels: tuple[str, ...] | None = None,
                 name: str | None = None, check: bool = True):
        table = _as_table(mult)
        if check:
            self.inv = _verify_axioms(table)
        else:
            self.inv = np.argmin(table, axis=1)
        table.setflags(write=False)
        self.inv.setflags(write=False)
        self.mult = table
        self.order = table.shape[0]
        self.name = name if name is not None else f"group{self.order}"
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != self.order:
                raise ValueError("label count must equal the group order")
        self.labels = labels
        self._elem_orders: np.ndarray | None = None
        self._classes: ClassData | None = None
        self._subgroup_cache: dict = {}
        self._char_table = None  # filled lazily by chartable.dixon_char_table
        self._fingerprint = None

    # -- elementwise operations -------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.mult[self.mult[g, x], self.inv[g]])

    def power(self, a: int, k: int) -> int:
        ordr = self.element_order(a)
        k %= ordr
        result, base = 0, a
        while k:
            if k & 1:
                result = int(self.mult[result, base])
            base = int(self.mult[base, base])
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    @property
    def element_orders(self) -> np.ndarray:
        if self._elem_orders is None:
            orders = np.zeros(self.order, dtype=np.int64)
            for a in range(self.order):
                x, k = a, 1
                while x != 0:
                    x = int(self.mult[x, a])
                    k += 1
                orders[a] = k
            orders.setflags(write=False)
            self._elem_orders = orders
        return self._elem_orders

    def exponent(self) -> int:
        return int(reduce(lambda a, b: a * b // gcd(a, b), (int(v) for v in self.element_orders), 1))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def is_cyclic(self) -> bool:
        return bool(np.max(self.element_orders) == self.order)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    # -- distinguished subgroups ------------------------------------------
    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, (0,))

    def whole_subgroup(self) -> Subgroup:
        return Subgroup(self, tuple(range(self.order)))

    def center(self) -> Subgroup:
        mask = np.all(self.mult == self.mult.T, axis=1)
        return Subgroup(self, tuple(int(v) for v in np.nonzero(mask)[0]))

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"


def build_group(mult, labels=None, name=None) -> Group:
    """Build and fully axiom-check a group from a Cayley table."""
    return Group(mult, labels=labels, name=name, check=True)


def cyclic_group(n: int) -> Group:
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return Group(table, labels=tuple(str(i) for i in range(n)), name=f"C{n}")


class Subgroup:
    """A subgroup of a parent group, stored as a sorted member tuple.

    Construction verifies closure (which implies the subgroup axioms for
    finite subsets containing the identity) and Lagrange's theorem as an
    internal sanity check.
    """

    def __init__(self, parent: Group, members):
        self.parent = parent
        mem = tuple(sorted(int(m) for m in set(members)))
        if not mem or mem[0] != 0:
            raise NotAGroup("subgroup must contain the identity", axiom="identity")
        arr = np.array(mem, dtype=np.int64)
        if arr.max() >= parent.order or arr.min() < 0:
            raise GroupMismatch("member index outside the parent group")
        products = parent.mult[np.ix_(arr, arr)]
        if not np.all(np.isin(products, arr)):
            a, b = np.argwhere(~np.isin(products, arr))[0]
            raise NotAGroup("subset is not closed under multiplication",
                            axiom="closure", witness=(mem[int(a)], mem[int(b)]))
        if parent.order % len(mem) != 0:
            raise InternalInconsistency("Lagrange violation; parent table corrupt")
        self.members = mem
        self.member_set = frozenset(mem)
        self._as_group: tuple[Group, tuple[int, ...]] | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.member_set

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def as_group(self) -> tuple[Group, tuple[int, ...]]:
        """Reindexed copy of this subgroup plus the member->parent map.

        Element i of the copy is self.members[i]; the identity stays at 0
        because members are sorted.
        """
        if self._as_group is None:
            arr = np.array(self.members, dtype=np.int64)
            pos = {m: i for i, m in enumerate(self.members)}
            table = np.array([[pos[int(v)] for v in row]
                              for row in self.parent.mult[np.ix_(arr, arr)]], dtype=np.int64)
            labels = tuple(self.parent.label(m) for m in self.members)
            sub = Group(table, labels=labels, name=f"{self.parent.name}|sub{self.order}")
            self._as_group = (sub, self.members)
        return self._as_group

    def index_of(self, parent_elem: int) -> int:
        return self.members.index(parent_elem)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


class ClassData:
    """Conjugacy classes of a group in canonical order.

    Canonical order: the identity class first, then ascending by
    (class size, minimal representative index).  power_map(c, k) gives the
    class containing the k-th powers of class c; this is well defined
    because conjugate elements have conjugate powers.
    """

    def __init__(self, group: Group, classes: tuple[tuple[int, ...], ...]):
        self.group = group
        self.classes = classes
        self.count = len(classes)
        self.sizes = tuple(len(c) for c in classes)
        self.representatives = tuple(c[0] for c in classes)
        class_of = np.full(group.order, -1, dtype=np.int64)
        for i, cls in enumerate(classes):
            for m in cls:
                class_of[m] = i
        if class_of.min() < 0:
            raise InternalInconsistency("classes do not partition the group")
        class_of.setflags(write=False)
        self.class_of = class_of
        self.rep_orders = tuple(group.element_order(r) for r in self.representatives)
        self._power_cache: dict[tuple[int, int], int] = {}

    def class_index(self, g: int) -> int:
        return int(self.class_of[g])

    def power_map(self, c: int, k: int) -> int:
        m = self.rep_orders[c]
        k %= m
        key = (c, k)
        if key not in self._power_cache:
            self._power_cache[key] = int(self.class_of[self.group.power(self.representatives[c], k)])
        return self._power_cache[key]

    def inverse_class(self, c: int) -> int:
        return self.power_map(c, -1)


def conjugacy_classes(G: Group) -> ClassData:
    """Conjugacy classes by orbit scan, cached on the group."""
    if G._classes is not None:
        return G._classes
    n = G.order
    seen = np.zeros(n, dtype=bool)
    raw: list[tuple[int, ...]] = []
    all_g = np.arange(n)
    for x in range(n):
        if seen[x]:
            continue
        orbit = np.unique(G.mult[G.mult[all_g, x], G.inv[all_g]])
        seen[orbit] = True
        raw.append(tuple(int(v) for v in orbit))
    ordered = sorted(raw, key=lambda c: (-1 if 0 in c else len(c), min(c)))
    data = ClassData(G, tuple(ordered))
    if sum(data.sizes) != n:
        raise InternalInconsistency("class sizes do not sum to the group order")
    G._classes = data
    return data


def centralizer(G: Group, x: int) -> Subgroup:
    mask = G.mult[:, x] == G.mult[x, :]
    return Subgroup(G, tuple(int(v) for v in np.nonzero(mask)[0]))


def centralizer_of_set(G: Group, members) -> Subgroup:
    mask = np.ones(G.order, dtype=bool)
    for x in members:
        mask &= G.mult[:, x] == G.mult[x, :]
    return Subgroup(G, tuple(int(v) for v in np.nonzero(mask)[0]))


def normalizer(G: Group, S: Subgroup) -> Subgroup:
    arr = np.array(S.members, dtype=np.int64)
    keep = []
    for g in range(G.order):
        conj = G.mult[G.mult[g, arr], G.inv[g]]
        if frozenset(int(v) for v in conj) == S.member_set:
            keep.append(g)
    return Subgroup(G, tuple(keep))


def generated_subgroup(G: Group, generators) -> Subgroup:
    """Closure of {identity} | generators under multiplication."""
    members = {0} | {int(g) for g in generators}
    frontier = sorted(members)
    while frontier:
        cur = np.array(sorted(members), dtype=np.int64)
        new = np.unique(G.mult[np.ix_(cur, np.array(frontier, dtype=np.int64))])
        fresh = [int(v) for v in new if int(v) not in members]
        members.update(fresh)
        frontier = fresh
    return Subgroup(G, tuple(sorted(members)))


def commutator_subgroup(H: Subgroup) -> Subgroup:
    """[H, H] as a subgroup of H's parent."""
    G = H.parent
    arr = np.array(H.members, dtype=np.int64)
    ab = G.mult[np.ix_(arr, arr)]
    comms = G.mult[G.mult[ab, G.inv[arr][:, None]], G.inv[arr][None, :]]
    return generated_subgroup(G, {int(v) for v in np.unique(comms)})


def is_normal(G: Group, S: Subgroup) -> bool:
    arr = np.array(S.members, dtype=np.int64)
    for g in range(G.order):
        conj = G.mult[G.mult[g, arr], G.inv[g]]
        if frozenset(int(v) for v in conj) != S.member_set:
            return False
    return True


def enumerate_subgroups(G: Group, containing: Subgroup | None = None,
                        bound: int | None = None) -> list[Subgroup]:
    """All subgroups of G (optionally only those containing a given one).

    Lattice walk: every subgroup H >= S arises from S by repeatedly
    adjoining one element, and adjoining any element of the coset S*g
    yields the same subgroup, so only one generator per coset is tried.
    Results are sorted by (order, member tuple).
    """
    if G.order > order_bound(bound):
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds bound {order_bound(bound)}")
    base = containing if containing is not None else G.trivial_subgroup()
    if base.parent is not G:
        raise GroupMismatch("containing subgroup belongs to another group")
    cache_key = ("subgroups", base.members)
    if cache_key in G._subgroup_cache:
        return list(G._subgroup_cache[cache_key])
    found: dict[tuple[int, ...], Subgroup] = {base.members: base}
    queue = [base]
    while queue:
        S = queue.pop()
        covered = np.zeros(G.order, dtype=bool)
        mem = np.array(S.members, dtype=np.int64)
        covered[mem] = True
        for g in range(G.order):
            if covered[g]:
                continue
            covered[G.mult[mem, g]] = True
            T = generated_subgroup(G, S.members + (g,))
            if T.members not in found:
                found[T.members] = T
                queue.append(T)
    result = sorted(found.values(), key=lambda s: (s.order, s.members))
    G._subgroup_cache[cache_key] = tuple(result)
    return result


def normal_subgroups(G: Group) -> list[Subgroup]:
    """All normal subgroups, walked as closures of unions of classes.

    A subgroup generated by a union of conjugacy classes is normal, and
    every normal subgroup is reached from the trivial one by repeatedly
    adjoining one of its classes, so no full subgroup enumeration is
    needed.
    """
    key = ("normal",)
    if key in G._subgroup_cache:
        return list(G._subgroup_cache[key])
    data = conjugacy_classes(G)
    found: dict[tuple[int, ...], Subgroup] = {}
    triv = G.trivial_subgroup()
    found[triv.members] = triv
    queue = [triv]
    while queue:
        S = queue.pop()
        for cls in data.classes:
            if cls[0] in S.member_set:
                continue
            T = generated_subgroup(G, S.members + cls)
            if T.members not in found:
                found[T.members] = T
                queue.append(T)
    result = sorted(found.values(), key=lambda s: (s.order, s.members))
    G._subgroup_cache[key] = tuple(result)
    return result


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown deterministically through normalizers.

    Any p-subgroup below full size has a strictly larger p-subgroup inside
    its normalizer; the smallest usable element (by index) is adjoined at
    each step, so the result is deterministic.
    """
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    target = p ** _prime_factors(G.order).get(p, 0)
    P = G.trivial_subgroup()
    while P.order < target:
        N = normalizer(G, P)
        for g in N.members:
            if g in P.member_set:
                continue
            m = G.element_order(g)
            t = m
            while t % p == 0:
                t //= p
            gp = G.power(g, t)  # p-part of g
            if gp not in P.member_set:
                P = generated_subgroup(G, P.members + (gp,))
                break
        else:
            raise InternalInconsistency("Sylow growth stalled below full p-power")
    return P


def quotient_group(G: Group, N: Subgroup) -> tuple[Group, np.ndarray]:
    """Quotient G/N with the projection map element -> coset index.

    The identity coset gets index 0; cosets are numbered by their minimal
    representative in ascending order.  The projection is verified to be a
    homomorphism.
    """
    if not is_normal(G, N):
        raise NotNormal("quotient requires a normal subgroup")
    mem = np.array(N.members, dtype=np.int64)
    proj = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    for g in range(G.order):
        if proj[g] >= 0:
            continue
        proj[G.mult[g, mem]] = len(reps)
        reps.append(g)
    reps_arr = np.array(reps, dtype=np.int64)
    table = proj[G.mult[np.ix_(reps_arr, reps_arr)]]
    labels = tuple(f"{G.label(r)}N" for r in reps)
    Q = Group(table, labels=labels, name=f"{G.name}/N{N.order}")
    if not np.array_equal(proj[G.mult], Q.mult[proj[:, None], proj[None, :]]):
        raise InternalInconsistency("projection is not a homomorphism")
    return Q, proj


def direct_product(A: Group, B: Group, name: str | None = None) -> Group:
    trivial = [list(range(A.order))] * B.order
    return semidirect_product(A, B, trivial,
                              name=name or f"{A.name}x{B.name}")


def semidirect_product(N: Group, H: Group, action, name: str | None = None) -> Group:
    """N x| H for a left action of H on N by automorphisms.

    `action[h]` is the image permutation of N's elements under h; it must
    consist of automorphisms and satisfy action[h1*h2] = action[h1] o
    action[h2].  Elements are pairs (x, h) encoded as x*|H| + h, and the
    product is (x1, h1)(x2, h2) = (x1 * action[h1](x2), h1*h2).  The result
    is fully axiom-checked.
    """
    acts = np.array(action, dtype=np.int64)
    if acts.shape != (H.order, N.order):
        raise NotAnAction("action must give one permutation of N per element of H")
    ident = np.arange(N.order)
    if not np.array_equal(acts[0], ident):
        raise NotAnAction("identity of H must act trivially")
    for h in range(H.order):
        perm = acts[h]
        if not np.array_equal(np.sort(perm), ident):
            raise NotAnAction(f"action of h={h} is not a bijection")
        if not np.array_equal(perm[N.mult], N.mult[np.ix_(perm, perm)]):
            raise NotAnAction(f"action of h={h} is not an automorphism")
    for h1 in range(H.order):
        for h2 in range(H.order):
            if not np.array_equal(acts[H.mult[h1, h2]], acts[h1][acts[h2]]):
                raise NotAnAction(f"action is not a homomorphism at ({h1}, {h2})")
    nH = H.order
    n = N.order * nH
    table = np.empty((n, n), dtype=np.int64)
    x = np.arange(N.order)
    for h1 in range(nH):
        acted = acts[h1]  # acted[x2] = action of h1 on x2
        xprod = N.mult[np.ix_(x, acted)]  # (x1, x2) -> x1 * h1(x2)
        for h2 in range(nH):
            hprod = H.mult[h1, h2]
            block = xprod * nH + hprod
            table[h1::nH][:, h2::nH] = block  # rows x1*nH+h1, cols x2*nH+h2
    labels = None
    if N.labels is not None or H.labels is not None:
        labels = tuple(f"({N.label(a)},{H.label(b)})" for a in range(N.order) for b in range(nH))
    return Group(table, labels=labels, name=name or f"{N.name}:{H.name}")


# -- isomorphism -----------------------------------------------------------

def _derived_series_orders(G: Group) -> tuple[int, ...]:
    orders = [G.order]
    H = G.whole_subgroup()
    while True:
        D = commutator_subgroup(H)
        if D.order == H.order:
            break
        orders.append(D.order)
        H = D
        if D.order == 1:
            break
    return tuple(orders)


def _class_types(G: Group) -> tuple[int, ...]:
    """Conjugation-invariant integer labels for the classes.

    Start from (size, element order) per class and refine each label by
    the labels of the power classes until the partition stabilizes.
    Refinement only ever splits label groups, so stopping when the count
    of distinct labels stops growing is a fixed point.  Labels are indices
    into the sorted signature set, hence identical for isomorphic groups.
    """
    data = conjugacy_classes(G)
    sig0 = sorted({(data.sizes[c], data.rep_orders[c]) for c in range(data.count)})
    types = [sig0.index((data.sizes[c], data.rep_orders[c])) for c in range(data.count)]
    while True:
        sigs = []
        for c in range(data.count):
            powers = tuple(types[data.power_map(c, k)] for k in range(data.rep_orders[c]))
            sigs.append((types[c], powers))
        canon = sorted(set(sigs))
        refined = [canon.index(s) for s in sigs]
        if len(set(refined)) == len(set(types)):
            return tuple(types)
        types = refined


def fingerprint(G: Group) -> tuple:
    """Cheap isomorphism invariant used to prune comparisons."""
    if G._fingerprint is not None:
        return G._fingerprint
    data = conjugacy_classes(G)
    orders = tuple(sorted((int(o), int(c)) for o, c in
                          zip(*np.unique(G.element_orders, return_counts=True))))
    types = _class_types(G)
    per_class = tuple(sorted((data.sizes[c], data.rep_orders[c], types[c])
                             for c in range(data.count)))
    fp = (
        G.order,
        orders,
        tuple(sorted(data.sizes)),
        G.center().order,
        _derived_series_orders(G),
        G.is_abelian(),
        G.exponent(),
        per_class,
    )
    G._fingerprint = fp
    return fp


def _minimal_generators(G: Group) -> list[int]:
    gens: list[int] = []
    span = G.trivial_subgroup()
    while span.order < G.order:
        for g in range(G.order):
            if g not in span.member_set:
                gens.append(g)
                span = generated_subgroup(G, gens)
                break
    return gens


def _closure_with_map(G1: Group, G2: Group, gens1: list[int], gens2: list[int]):
    """Close <gens1> in G1 while transporting the map gens1[i] -> gens2[i].

    Returns (members, phi) where phi is a dict on the closure, or None if
    the transported map cannot be a homomorphism (inconsistent images or a
    collision).
    """
    phi = {0: 0}
    elems = [0]
    for g, h in zip(gens1, gens2):
        if g in phi:
            if phi[g] != h:
                return None
            continue
        phi[g] = h
        elems.append(g)
    frontier = list(elems)
    while frontier:
        new = []
        for a in list(elems):
            fa = phi[a]
            for b in frontier:
                ab = int(G1.mult[a, b])
                img = int(G2.mult[fa, phi[b]])
                if ab in phi:
                    if phi[ab] != img:
                        return None
                else:
                    phi[ab] = img
                    new.append(ab)
                ba = int(G1.mult[b, a])
                img2 = int(G2.mult[phi[b], fa])
                if ba in phi:
                    if phi[ba] != img2:
                        return None
                else:
                    phi[ba] = img2
                    new.append(ba)
        elems.extend(new)
        frontier = new
    if len(set(phi.values())) != len(phi):
        return None
    # full consistency on the closure
    mem = sorted(phi)
    for a in mem:
        fa = phi[a]
        for b in mem:
            if phi[int(G1.mult[a, b])] != int(G2.mult[fa, phi[b]]):
                return None
    return mem, phi


def is_isomorphic(G1: Group, G2: Group, bound: int | None = None
                  ) -> tuple[bool, list[int] | None]:
    """Isomorphism test with an explicit witness map on success.

    Fingerprints (order statistics, class data, derived series) prune
    first; the remaining work is a backtracking search mapping a greedy
    minimal generating sequence of G1 onto candidate elements of G2 with
    the same class-type invariant, scanning candidates in ascending order
    so the witness is deterministic.
    """
    if max(G1.order, G2.order) > order_bound(bound):
        raise OrderBoundExceeded("isomorphism test beyond configured order bound")
    if G1.order != G2.order:
        return False, None
    if fingerprint(G1) != fingerprint(G2):
        return False, None
    n = G1.order
    data1, data2 = conjugacy_classes(G1), conjugacy_classes(G2)
    types1, types2 = _class_types(G1), _class_types(G2)
    inv1 = [(int(G1.element_orders[g]), data1.sizes[data1.class_index(g)],
             types1[data1.class_index(g)]) for g in range(n)]
    inv2 = [(int(G2.element_orders[g]), data2.sizes[data2.class_index(g)],
             types2[data2.class_index(g)]) for g in range(n)]
    gens = _minimal_generators(G1)
    candidates = [[h for h in range(n) if inv2[h] == inv1[g]] for g in gens]

    def extend(i: int, chosen: list[int], mapped_members: frozenset):
        if i == len(gens):
            res = _closure_with_map(G1, G2, gens, chosen)
            if res is None:
                return None
            mem, phi = res
            if len(mem) != n:
                return None
            return [phi[g] for g in range(n)]
        for h in candidates[i]:
            if h in mapped_members:
                continue
            res = _closure_with_map(G1, G2, gens[: i + 1], chosen + [h])
            if res is None:
                continue
            mem, phi = res
            out = extend(i + 1, chosen + [h], frozenset(phi.values()))
            if out is not None:
                return out
        return None

    witness = extend(0, [], frozenset())
    if witness is None:
        return False, None
    w = np.array(witness, dtype=np.int64)
    if not np.array_equal(w[G1.mult], G2.mult[np.ix_(w, w)]):
        raise InternalInconsistency("isomorphism witness failed verification")
    return True, witness


def is_elementary_abelian(H: Subgroup) -> tuple[bool, int | None, int]:
    """(flag, p, k): is H isomorphic to (Z/p)^k?  Trivial H gives (True, None, 0)."""
    if H.order == 1:
        return True, None, 0
    sub, mem = H.as_group()
    if not sub.is_abelian():
        return False, None, 0
    orders = {int(sub.element_order(a)) for a in range(1, sub.order)}
    if len(orders) != 1:
        return False, None, 0
    p = orders.pop()
    if any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        return False, None, 0
    k = 0
    m = H.order
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        return False, None, 0
    return True, p, k


# -- external Cayley-table format -----------------------------------------

def parse_cayley(text: str) -> Group:
    """Parse the plain-text Cayley format.

    Line 1 is the order n, followed by n lines of n space-separated
    indices; optional trailing lines `# label i name` attach labels.
    Parsing is strict: wrong counts or stray content raise ValueError.
    """
    lines = [ln.rstrip("\n") for ln in text.strip().splitlines()]
    if not lines:
        raise ValueError("empty Cayley text")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise ValueError("first line must be the group order") from exc
    if n <= 0:
        raise ValueError("order must be positive")
    if len(lines) < 1 + n:
        raise ValueError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for i in range(1, 1 + n):
        parts = lines[i].split()
        if len(parts) != n:
            raise ValueError(f"row {i - 1} has {len(parts)} entries, expected {n}")
        rows.append([int(p) for p in parts])
    labels: list[str] | None = None
    for extra in lines[1 + n:]:
        if not extra.strip():
            continue
        parts = extra.split(None, 3)
        if len(parts) < 4 or parts[0] != "#" or parts[1] != "label":
            raise ValueError(f"unrecognized trailing line: {extra!r}")
        idx = int(parts[2])
        if not 0 <= idx < n:
            raise ValueError(f"label index {idx} out of range")
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels[idx] = parts[3]
    return build_group(rows, labels=tuple(labels) if labels else None)


def format_cayley(G: Group) -> str:
    out = [str(G.order)]
    for row in G.mult:
        out.append(" ".join(str(int(v)) for v in row))
    if G.labels is not None:
        for i, lab in enumerate(G.labels):
            out.append(f"# label {i} {lab}")
    return "\n".join(out) + "\n"
