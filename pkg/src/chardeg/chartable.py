"""Complex character tables by Dixon's modular method, exactly.

The table of G is computed in F_l for the smallest prime l with
l = 1 (mod exponent(G)) and l > 2*sqrt(|G|): the class matrices (from the
structure constants of the class sums in the center of the group algebra)
are simultaneously diagonalized over F_l by iterated eigenspace
splitting, degrees are recovered from the orthogonality relation (unique
below sqrt(n) < l/2), and each character value is lifted exactly to the
cyclotomic field of conductor exponent(G) through a discrete Fourier
inversion of eigenvalue multiplicities along the power map.

Output is canonical: classes in canonical order, irreducibles sorted by
(degree, lexicographic value order).  Row orthogonality and the degree
sum are verified exactly before a table is returned; a failure raises
InternalInconsistency because it can only mean a bug, not bad input.
"""
from __future__ import annotations

from itertools import product as iproduct
from math import isqrt

import numpy as np

from .config import order_bound
from .cyclotomic import Cyclotomic
from .errors import (
    GroupMismatch,
    InternalInconsistency,
    OrderBoundExceeded,
    PreconditionViolated,
)
from .groups import (
    ClassData,
    Group,
    Subgroup,
    commutator_subgroup,
    conjugacy_classes,
    generated_subgroup,
    quotient_group,
)

__all__ = [
    "Character",
    "CharTable",
    "dixon_char_table",
    "inner_product",
    "induce_character",
    "restrict_character",
    "degree_one_characters",
    "gagola_kernel",
    "trivial_character",
    "regular_character",
]


# -- linear algebra over F_l -------------------------------------------------

def _rref_mod(A: np.ndarray, l: int) -> tuple[np.ndarray, list[int]]:
    R = A.copy() % l
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if R[i, c] % l:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            R[[piv, r]] = R[[r, piv]]
        R[r] = R[r] * pow(int(R[r, c]), l - 2, l) % l
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % l
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R[:r], pivots


def _nullspace_mod(A: np.ndarray, l: int) -> np.ndarray:
    """Rows spanning the right nullspace {v : A v = 0 (mod l)}."""
    R, pivots = _rref_mod(A, l)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-int(R[r, fc])) % l
    return basis


def _hessenberg_mod(A: np.ndarray, l: int) -> np.ndarray:
    H = A.copy() % l
    n = H.shape[0]
    for c in range(n - 2):
        piv = None
        for r in range(c + 1, n):
            if H[r, c]:
                piv = r
                break
        if piv is None:
            continue
        if piv != c + 1:
            H[[c + 1, piv]] = H[[piv, c + 1]]
            H[:, [c + 1, piv]] = H[:, [piv, c + 1]]
        inv = pow(int(H[c + 1, c]), l - 2, l)
        for r in range(c + 2, n):
            f = int(H[r, c]) * inv % l
            if f:
                H[r] = (H[r] - f * H[c + 1]) % l
                H[:, c + 1] = (H[:, c + 1] + f * H[:, r]) % l
    return H


def _charpoly_mod(A: np.ndarray, l: int) -> list[int]:
    """Characteristic polynomial coefficients (constant first) over F_l.

    Cofactor recurrence on the Hessenberg form: p_m expands det(xI - H_m)
    along the last column, weighting lower p_i by products of subdiagonal
    entries.
    """
    H = _hessenberg_mod(A, l)
    n = H.shape[0]
    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        d = int(H[m - 1, m - 1])
        prev = polys[m - 1]
        cur = [(-d * c) % l for c in prev] + [0]
        for i in range(len(prev)):
            cur[i + 1] = (cur[i + 1] + prev[i]) % l
        weight = 1
        for i in range(m - 1, 0, -1):
            weight = weight * int(H[i, i - 1]) % l
            coeff = int(H[i - 1, m - 1]) * weight % l
            if coeff:
                pi = polys[i - 1]
                for j, c in enumerate(pi):
                    cur[j] = (cur[j] - coeff * c) % l
        polys.append(cur)
    return polys[n]


def _eigenvalues_mod(A: np.ndarray, l: int) -> list[int]:
    poly = _charpoly_mod(A, l)
    out = []
    for lam in range(l):
        acc = 0
        for c in reversed(poly):
            acc = (acc * lam + c) % l
        if acc == 0:
            out.append(lam)
    return out


# -- characters ---------------------------------------------------------------

class Character:
    """A class function on a group with exact cyclotomic values.

    Genuine irreducible characters come out of dixon_char_table; the same
    container holds induced characters, degree-one characters of subgroups
    and arbitrary class functions fed to the verification routines.
    """

    def __init__(self, group: Group, values, classes: ClassData | None = None):
        self.group = group
        self.classes = classes if classes is not None else conjugacy_classes(group)
        vals = []
        for v in values:
            if not isinstance(v, Cyclotomic):
                v = Cyclotomic.rational(v)
            vals.append(v)
        if len(vals) != self.classes.count:
            raise PreconditionViolated("one value per conjugacy class required")
        self.values = tuple(vals)

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def degree_int(self) -> int:
        return self.values[0].as_int()

    def value_at(self, g: int) -> Cyclotomic:
        return self.values[self.classes.class_index(g)]

    def kernel_members(self) -> tuple[int, ...]:
        deg = self.values[0]
        out: list[int] = []
        for c, cls in enumerate(self.classes.classes):
            if self.values[c] == deg:
                out.extend(cls)
        return tuple(sorted(out))

    def kernel(self) -> Subgroup:
        return Subgroup(self.group, self.kernel_members())

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)],
                         self.classes)

    def __sub__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.group, [a - b for a, b in zip(self.values, other.values)],
                         self.classes)

    def __mul__(self, other) -> "Character":
        if isinstance(other, Character):
            self._check(other)
            return Character(self.group, [a * b for a, b in zip(self.values, other.values)],
                             self.classes)
        return Character(self.group, [v * other for v in self.values], self.classes)

    __rmul__ = __mul__

    def _check(self, other: "Character") -> None:
        if other.group is not self.group:
            raise GroupMismatch("characters live over different groups")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character) and other.group is self.group
                and all(a == b for a, b in zip(self.values, other.values)))

    def __hash__(self) -> int:
        return hash((id(self.group), self.values))

    def __repr__(self) -> str:
        return f"Character(deg={self.degree}, values={[str(v) for v in self.values]})"


class CharTable:
    """The full set of irreducible characters of a group."""

    def __init__(self, group: Group, classes: ClassData, irreducibles: tuple[Character, ...],
                 prime: int, conductor: int):
        self.group = group
        self.classes = classes
        self.irreducibles = irreducibles
        self.prime = prime
        self.conductor = conductor
        self._verify()

    def _verify(self) -> None:
        n = self.group.order
        if len(self.irreducibles) != self.classes.count:
            raise InternalInconsistency("irreducible count != class count")
        total = sum(ch.degree_int() ** 2 for ch in self.irreducibles)
        if total != n:
            raise InternalInconsistency(f"sum of squared degrees {total} != {n}")
        for i, chi in enumerate(self.irreducibles):
            for j, psi in enumerate(self.irreducibles):
                ip = inner_product(chi, psi)
                if ip != (1 if i == j else 0):
                    raise InternalInconsistency(
                        f"row orthogonality fails at ({i}, {j}): {ip}")

    def degrees(self) -> tuple[int, ...]:
        return tuple(ch.degree_int() for ch in self.irreducibles)

    def by_degree(self, d: int) -> list[Character]:
        return [ch for ch in self.irreducibles if ch.degree_int() == d]

    def to_json_dict(self) -> dict:
        data = self.classes
        primes = sorted({p for p in range(2, self.conductor + 1)
                         if self.conductor % p == 0 and _is_prime(p)})
        power_maps = {"-1": [data.power_map(c, -1) for c in range(data.count)]}
        for p in primes:
            power_maps[str(p)] = [data.power_map(c, p) for c in range(data.count)]
        return {
            "group": self.group.name,
            "order": self.group.order,
            "conductor": self.conductor,
            "prime": self.prime,
            "class_sizes": list(data.sizes),
            "class_representatives": list(data.representatives),
            "representative_orders": list(data.rep_orders),
            "power_maps": power_maps,
            "characters": [
                {
                    "degree": ch.degree_int(),
                    "values": [{"num": list(v.num), "den": v.den} for v in ch.values],
                }
                for ch in self.irreducibles
            ],
        }


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def structure_constants(G: Group, data: ClassData) -> np.ndarray:
    """a[i, j, k] = #{(x, y) in K_i x K_j : x*y = rep_k}.

    Computed by the inverse trick: x in K_i contributes iff x^{-1}*rep_k
    lies in K_j, so one pass over G per target class suffices.
    """
    r = data.count
    A = np.zeros((r, r, r), dtype=np.int64)
    i_of = data.class_of
    for k in range(r):
        z = data.representatives[k]
        j_of = data.class_of[G.mult[G.inv, z]]
        np.add.at(A[:, :, k], (i_of, j_of), 1)
    return A


def _dixon_prime(n: int, exponent: int) -> int:
    l = exponent + 1
    floor = 2 * isqrt(n)
    while True:
        if l > floor and _is_prime(l):
            return l
        l += exponent


def _primitive_root(l: int) -> int:
    fac = []
    m = l - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, l):
        if all(pow(g, (l - 1) // q, l) != 1 for q in fac):
            return g
    raise InternalInconsistency("no primitive root found")


def dixon_char_table(G: Group, bound: int | None = None) -> CharTable:
    """The exact complex character table of G (cached on the group)."""
    if G._char_table is not None:
        return G._char_table
    if G.order > order_bound(bound):
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds bound {order_bound(bound)}")
    data = conjugacy_classes(G)
    n, r = G.order, data.count
    M = G.exponent()
    l = _dixon_prime(n, M)
    z = pow(_primitive_root(l), (l - 1) // M, l)
    A = structure_constants(G, data)

    # split the common eigenspaces of the class matrices
    subspaces: list[np.ndarray] = [np.eye(r, dtype=np.int64)]
    for i in range(r):
        if all(B.shape[0] == 1 for B in subspaces):
            break
        MiT = A[i].T % l
        refined: list[np.ndarray] = []
        for B in subspaces:
            if B.shape[0] == 1:
                refined.append(B)
                continue
            R, pivots = _rref_mod(B, l)
            image = R @ MiT % l
            # restriction matrix C with R @ MiT = C @ R; valid because the
            # subspace is invariant (class matrices commute)
            C = image[:, pivots]
            if not np.array_equal(C @ R % l, image):
                raise InternalInconsistency("subspace not invariant under class matrix")
            for lam in _eigenvalues_mod(C, l):
                NS = _nullspace_mod((C.T - lam * np.eye(C.shape[0], dtype=np.int64)) % l, l)
                if NS.shape[0] == 0:
                    continue
                block, _ = _rref_mod(NS @ R % l, l)
                refined.append(block)
        if sum(B.shape[0] for B in refined) != r:
            raise InternalInconsistency("eigenspace splitting lost dimensions")
        subspaces = refined
    if any(B.shape[0] != 1 for B in subspaces):
        raise InternalInconsistency("common eigenspaces are not one-dimensional")

    sizes = np.array(data.sizes, dtype=np.int64)
    inv_class = np.array([data.inverse_class(c) for c in range(r)], dtype=np.int64)
    inv_sizes = np.array([pow(int(s), l - 2, l) for s in sizes], dtype=np.int64)
    characters = []
    for B in subspaces:
        w = B[0] % l
        if w[0] % l == 0:
            raise InternalInconsistency("central character vanishes at the identity")
        omega = w * pow(int(w[0]), l - 2, l) % l
        s = int(sum(int(omega[c]) * int(omega[inv_class[c]]) % l * int(inv_sizes[c]) % l
                    for c in range(r)) % l)
        if s == 0:
            raise InternalInconsistency("degree norm sum is zero mod l")
        d_sq = n % l * pow(s, l - 2, l) % l
        d = None
        for cand in range(1, isqrt(n) + 1):
            if cand * cand % l == d_sq:
                d = cand
                break
        if d is None:
            raise InternalInconsistency("no integer degree matches mod l")
        chi_mod = [d * int(omega[c]) % l * int(inv_sizes[c]) % l for c in range(r)]
        values = []
        for c in range(r):
            m_c = data.rep_orders[c]
            y = pow(z, M // m_c, l)
            inv_m = pow(m_c, l - 2, l)
            coeffs = []
            total = 0
            for k in range(m_c):
                acc = 0
                for s_exp in range(m_c):
                    acc = (acc + chi_mod[data.power_map(c, s_exp)]
                           * pow(y, (-k * s_exp) % (l - 1), l)) % l
                mu = acc * inv_m % l
                if mu > n:
                    raise InternalInconsistency("eigenvalue multiplicity exceeds degree")
                coeffs.append(mu)
                total += mu
            if total != d:
                raise InternalInconsistency("multiplicities do not sum to the degree")
            val = Cyclotomic.zero(M)
            for k, mu in enumerate(coeffs):
                if mu:
                    val = val + mu * Cyclotomic.root(M, (M // m_c) * k)
            values.append(val)
        characters.append(Character(G, values, data))

    characters.sort(key=lambda ch: (ch.degree_int(), [v.sort_key() for v in ch.values]))
    table = CharTable(G, data, tuple(characters), prime=l, conductor=M)
    G._char_table = table
    return table


# -- operations on characters --------------------------------------------------

def inner_product(chi: Character, psi: Character) -> Cyclotomic:
    """(chi, psi) = 1/|G| sum |K_c| chi(c) conj(psi(c)).

    Conjugation goes through the power map: conj(psi)(c) = psi(c^{-1}),
    exact for characters and the convention used for all class functions.
    """
    if chi.group is not psi.group:
        raise GroupMismatch("inner product requires one common group")
    data = chi.classes
    acc = Cyclotomic.zero(1)
    for c in range(data.count):
        term = chi.values[c] * psi.values[data.inverse_class(c)]
        acc = acc + data.sizes[c] * term
    return acc / chi.group.order


def trivial_character(G: Group) -> Character:
    data = conjugacy_classes(G)
    return Character(G, [Cyclotomic.one()] * data.count, data)


def regular_character(G: Group) -> Character:
    data = conjugacy_classes(G)
    vals = [Cyclotomic.rational(G.order)] + [Cyclotomic.zero(1)] * (data.count - 1)
    return Character(G, vals, data)


def restrict_character(chi: Character, H: Subgroup) -> Character:
    """Restriction of a class function to a subgroup (values on H's classes)."""
    if H.parent is not chi.group:
        raise GroupMismatch("subgroup of a different group")
    sub, members = H.as_group()
    sub_data = conjugacy_classes(sub)
    vals = [chi.value_at(members[rep]) for rep in sub_data.representatives]
    return Character(sub, vals, sub_data)


def induce_character(G: Group, H: Subgroup, phi: Character) -> Character:
    """Induced class function Ind_H^G(phi).

    Ind(g) = (1/|H|) sum over x in G of phi0(x^{-1} g x) with phi0 zero
    outside H; exact division because each coset contributes |H| equal
    terms.
    """
    if H.parent is not G:
        raise GroupMismatch("subgroup of a different group")
    sub, members = H.as_group()
    if phi.group is not sub:
        raise GroupMismatch("character must live on the subgroup's group copy")
    pos = {m: i for i, m in enumerate(members)}
    data = conjugacy_classes(G)
    M = G.exponent()
    values = []
    for rep in data.representatives:
        counts = np.zeros(sub.order, dtype=np.int64)
        for x in range(G.order):
            y = G.mult[G.mult[G.inv[x], rep], x]
            iy = pos.get(int(y))
            if iy is not None:
                counts[iy] += 1
        acc = Cyclotomic.zero(M)
        for iy in np.nonzero(counts)[0]:
            acc = acc + int(counts[iy]) * phi.value_at(int(iy)).promote(M)
        values.append(acc / H.order)
    return Character(G, values, data)


def _cyclic_decomposition(A: Group) -> list[tuple[int, int]]:
    """Generators of a direct decomposition of an abelian group.

    Split off an element of maximal order (= the exponent), decompose the
    quotient recursively, and correct each lifted generator by a power of
    the split element so its order matches the quotient order.
    """
    if A.order == 1:
        return []
    if not A.is_abelian():
        raise PreconditionViolated("cyclic decomposition needs an abelian group")
    orders = A.element_orders
    m = int(orders.max())
    a = int(np.nonzero(orders == m)[0][0])
    S = generated_subgroup(A, [a])
    Q, proj = quotient_group(A, S)
    out = [(a, m)]
    for qe, qo in _cyclic_decomposition(Q):
        b = int(np.nonzero(proj == qe)[0][0])
        t = A.power(b, qo)
        c, x = 0, 0
        while x != t:
            x = A.mul(x, a)
            c += 1
        if c % qo != 0:
            raise InternalInconsistency("maximal-order split failed")
        b = A.mul(b, A.power(a, m - (c // qo) % m))
        if A.power(b, qo) != 0 or proj[b] != qe:
            raise InternalInconsistency("generator correction failed")
        out.append((b, qo))
    return out


def degree_one_characters(H: Subgroup) -> list[Character]:
    """All degree-1 characters of a subgroup, on its as_group() copy.

    Built from a cyclic decomposition of the abelianization; deterministic
    order given by mixed-radix counting over the decomposition exponents.
    """
    sub, _ = H.as_group()
    D = commutator_subgroup(sub.whole_subgroup())
    Q, proj = quotient_group(sub, D)
    decomp = _cyclic_decomposition(Q)
    conductor = decomp[0][1] if decomp else 1
    coords: dict[int, tuple[int, ...]] = {}
    for exps in iproduct(*(range(o) for _, o in decomp)):
        g = 0
        for (gen, _), e in zip(decomp, exps):
            g = Q.mul(g, Q.power(gen, e))
        if g in coords:
            raise InternalInconsistency("cyclic decomposition is not direct")
        coords[g] = exps
    if len(coords) != Q.order:
        raise InternalInconsistency("cyclic decomposition misses elements")
    sub_data = conjugacy_classes(sub)
    out: list[Character] = []
    for tup in iproduct(*(range(o) for _, o in decomp)):
        values = []
        for rep in sub_data.representatives:
            exps = coords[int(proj[rep])]
            e = sum(t * ex * (conductor // o)
                    for t, ex, (_, o) in zip(tup, exps, decomp)) % conductor
            values.append(Cyclotomic.root(conductor, e))
        out.append(Character(sub, values, sub_data))
    return out


def gagola_kernel(table: CharTable, chi: Character) -> Subgroup:
    """Intersection of the kernels of all irreducibles other than chi.

    This is the largest normal subgroup acting trivially on every simple
    module except the one carrying chi.
    """
    if chi.group is not table.group:
        raise GroupMismatch("character from a different table")
    members = set(range(table.group.order))
    for other in table.irreducibles:
        if other == chi:
            continue
        members &= set(other.kernel_members())
    return Subgroup(table.group, tuple(sorted(members)))
