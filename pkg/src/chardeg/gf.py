"""Arithmetic in GF(p^k) with a deterministic modulus choice.

Elements are polynomials over F_p of degree < k, stored as coefficient
tuples (constant term first) and also addressable by index: the element
with coefficients (c0, .., c_{k-1}) has index sum(c_i * p^i), so 0 is the
zero element and, for k = 1, the index is the residue itself.

The modulus is the lexicographically smallest monic irreducible of degree
k: candidates x^k + c_{k-1}x^{k-1} + .. + c_0 are scanned in ascending
order of the index of (c_0, .., c_{k-1}) and tested by trial division.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotPrime, NotPrimePower, PreconditionViolated

__all__ = ["Field", "FieldElement", "make_field", "isotropic_check", "enumerate_subspaces"]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den over F_p (coefficient lists, constant first)."""
    num = [c % p for c in num]
    dn = len(den) - 1
    while len(num) - 1 >= dn and any(num):
        while num and num[-1] % p == 0:
            num.pop()
        if len(num) - 1 < dn:
            break
        shift = len(num) - 1 - dn
        lead = num[-1] % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p
        while num and num[-1] % p == 0:
            num.pop()
    return num + [0] * (dn - len(num))


def _irreducible(poly: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for idx in range(p ** d):
            div = _digits(idx, p, d) + [1]
            if not any(_poly_mod(list(poly), div, p)):
                return False
    return True


def _digits(n: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return out


class Field:
    """GF(p^k); carries tables of indexed arithmetic for its q elements."""

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1:
            raise NotPrimePower(f"degree {k} must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = self._find_modulus()
        self._generator: int | None = None

    def _find_modulus(self) -> tuple[int, ...]:
        if self.k == 1:
            return (0, 1)
        for idx in range(self.q):
            cand = _digits(idx, self.p, self.k) + [1]
            if _irreducible(cand, self.p):
                return tuple(cand)
        raise NotPrimePower("no irreducible polynomial found")  # unreachable

    # -- indexed arithmetic -------------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.p, self.k))

    def index(self, coeffs) -> int:
        return sum(int(c) % self.p * self.p ** i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.index([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        return self.index([(-x) % self.p for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x == 0:
                continue
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        return self.index(_poly_mod(prod, list(self.modulus), self.p))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero field element")
            return 0
        e %= self.q - 1
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.pow(a, self.q - 2)

    def element_mult_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def multiplicative_generator(self) -> int:
        """Smallest index generating the unit group; verified by order."""
        if self._generator is None:
            if self.q == 2:
                self._generator = 1
            else:
                for a in range(1, self.q):
                    if self.element_mult_order(a) == self.q - 1:
                        self._generator = a
                        break
                else:
                    raise NotPrimePower("unit group has no generator; field corrupt")
        return self._generator

    def enumerate_units(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(1, self.q)]

    def element(self, a: int) -> FieldElement:
        return FieldElement(self, a)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    """A field element wrapping (field, index) with operator sugar."""

    field: Field
    index: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.index, other.index))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.index, other.index))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.index, other.index))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.index))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.index, e))

    def _check(self, other: "FieldElement") -> None:
        if other.field is not self.field:
            raise PreconditionViolated("elements of different fields")

    def __str__(self) -> str:
        return f"{self.coeffs}"


@lru_cache(maxsize=None)
def make_field(p: int, k: int) -> Field:
    return Field(p, k)


# -- the antisymmetric pairing on W x W* and isotropy ----------------------

def _fp_vectors(p: int, dim: int) -> list[tuple[int, ...]]:
    return [tuple(_digits(i, p, dim)) for i in range(p ** dim)]


def enumerate_subspaces(p: int, dim: int) -> list[tuple[tuple[int, ...], ...]]:
    """All F_p-subspaces of F_p^dim, each as a sorted tuple of its vectors.

    Enumerated by spanning over reduced-echelon bases: every subspace has a
    unique RREF basis, produced by choosing pivot columns and free entries.
    """
    from itertools import combinations, product

    out: list[tuple[tuple[int, ...], ...]] = [((tuple([0] * dim)),)]
    for r in range(1, dim + 1):
        for pivots in combinations(range(dim), r):
            free_positions = []
            for row, pc in enumerate(pivots):
                for col in range(pc + 1, dim):
                    if col not in pivots:
                        free_positions.append((row, col))
            for values in product(range(p), repeat=len(free_positions)):
                basis = [[0] * dim for _ in range(r)]
                for row, pc in enumerate(pivots):
                    basis[row][pc] = 1
                for (row, col), v in zip(free_positions, values):
                    basis[row][col] = v
                span = set()
                for coeffs in product(range(p), repeat=r):
                    vec = tuple(sum(c * basis[i][j] for i, c in enumerate(coeffs)) % p
                                for j in range(dim))
                    span.add(vec)
                out.append(tuple(sorted(span)))
    return out


def pairing_value(field: Field, dim_w: int, u: tuple[int, ...], v: tuple[int, ...]) -> int:
    """[(v1,f1),(w2,f2)] = f1(w2) - f2(v1) in the field (index form).

    u, v are F_p coefficient vectors of length 2*dim_w*k; the first half
    encodes the W part, the second half the dual part, each as dim_w field
    elements given by k base-p digits.
    """
    k = field.k
    if len(u) != 2 * dim_w * k or len(v) != 2 * dim_w * k:
        raise PreconditionViolated("vector length must be 2*dim_w*k")

    def decode(vec):
        w = [field.index(vec[i * k:(i + 1) * k]) for i in range(dim_w)]
        f = [field.index(vec[(dim_w + i) * k:(dim_w + i + 1) * k]) for i in range(dim_w)]
        return w, f

    w1, f1 = decode(u)
    w2, f2 = decode(v)
    acc = 0
    for i in range(dim_w):
        acc = field.add(acc, field.mul(f1[i], w2[i]))
        acc = field.sub(acc, field.mul(f2[i], w1[i]))
    return acc


def isotropic_check(field: Field, dim_w: int, basis) -> bool:
    """Is the F_p-span of `basis` isotropic for the W x W* pairing?

    True iff pi(pairing(u, v)) = 0 for all basis pairs and every F_p-linear
    surjection pi: field -> F_p.  The nonzero functionals separate points,
    so this is equivalent to the pairing itself vanishing on the span; the
    functional formulation matches how the commutator condition arises.
    """
    vecs = [tuple(int(c) % field.p for c in b) for b in basis]
    functionals = _fp_vectors(field.p, field.k)[1:]  # all nonzero pi
    for u in vecs:
        for v in vecs:
            val = pairing_value(field, dim_w, u, v)
            digits = field.coeffs(val)
            for pi in functionals:
                if sum(a * b for a, b in zip(pi, digits)) % field.p != 0:
                    return False
    return True
