"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value is stored as (conductor m, integer numerator vector, positive
denominator): the number sum(num[i]/den * zeta_m^i) with the numerator
indexed by the power basis zeta^0 .. zeta^{phi(m)-1}, reduced canonically
modulo the m-th cyclotomic polynomial.  A single shared denominator keeps
multiplication in fast integer arithmetic; values are normalized (gcd of
all numerators with the denominator is 1) so equality is tuple equality.

Character values are algebraic integers (den == 1); denominators only
appear through inner products.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import PreconditionViolated

__all__ = ["Cyclotomic", "cyclotomic_polynomial", "euler_phi"]


def euler_phi(m: int) -> int:
    result, n, d = 1, m, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            result *= d - 1
            while n % d == 0:
                n //= d
                result *= d
        d += 1
    if n > 1:
        result *= n - 1
    return result


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic), constant term first."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        lead = num[shift + len(den) - 1]
        out[shift] = lead
        for i, c in enumerate(den):
            num[shift + i] -= lead * c
    if any(num):
        raise PreconditionViolated("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first."""
    if m == 1:
        return (-1, 1)
    poly = [0] * m + [1]
    poly[0] = -1  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e < max(m, 2*phi(m)-1) expresses zeta^e in the power basis."""
    phi = euler_phi(m)
    top = max(m, 2 * phi - 1)
    rows: list[tuple[int, ...]] = []
    for e in range(phi):
        row = [0] * phi
        row[e] = 1
        rows.append(tuple(row))
    cyc = cyclotomic_polynomial(m)  # monic of degree phi
    for e in range(phi, top):
        # zeta^e = zeta * zeta^{e-1}: shift previous row then reduce the overflow
        prev = rows[e - 1]
        shifted = [0] + list(prev[:-1])
        overflow = prev[-1]
        if overflow:
            for i in range(phi):
                shifted[i] -= overflow * cyc[i]
        rows.append(tuple(shifted))
    return tuple(rows)


class Cyclotomic:
    """Immutable exact element of Q(zeta_m)."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num, den: int = 1, _normalized: bool = False):
        if _normalized:
            self.m, self.num, self.den = m, tuple(num), den
            return
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        num = [int(v) for v in num]
        phi = euler_phi(m)
        if len(num) != phi:
            raise PreconditionViolated(f"need {phi} coefficients at conductor {m}")
        if den < 0:
            den = -den
            num = [-v for v in num]
        g = den
        for v in num:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [v // g for v in num]
        self.m = m
        self.num = tuple(num)
        self.den = den

    # -- constructors --------------------------------------------------------
    @staticmethod
    def zero(m: int = 1) -> "Cyclotomic":
        return Cyclotomic(m, [0] * euler_phi(m))

    @staticmethod
    def one(m: int = 1) -> "Cyclotomic":
        return Cyclotomic.rational(1, m)

    @staticmethod
    def rational(value, m: int = 1) -> "Cyclotomic":
        frac = Fraction(value)
        coeffs = [0] * euler_phi(m)
        coeffs[0] = frac.numerator
        return Cyclotomic(m, coeffs, frac.denominator)

    @staticmethod
    def root(m: int, j: int = 1) -> "Cyclotomic":
        """zeta_m^j."""
        rows = _reduction_rows(m)
        return Cyclotomic(m, list(rows[j % m]))

    # -- structure -------------------------------------------------------------
    def promote(self, m2: int) -> "Cyclotomic":
        """Reinterpret at a conductor multiple: zeta_m -> zeta_m2^(m2/m)."""
        if m2 == self.m:
            return self
        if m2 % self.m != 0:
            raise PreconditionViolated(f"{m2} is not a multiple of conductor {self.m}")
        step = m2 // self.m
        rows = _reduction_rows(m2)
        phi2 = euler_phi(m2)
        acc = [0] * phi2
        for e, c in enumerate(self.num):
            if c == 0:
                continue
            row = rows[(e * step) % m2]
            for i, r in enumerate(row):
                if r:
                    acc[i] += c * r
        return Cyclotomic(m2, acc, self.den)

    def _pair(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other)
        if self.m == other.m:
            return self, other
        if self.m % other.m == 0:
            return self, other.promote(self.m)
        if other.m % self.m == 0:
            return self.promote(other.m), other
        lcm = self.m * other.m // gcd(self.m, other.m)
        return self.promote(lcm), other.promote(lcm)

    # -- ring operations ---------------------------------------------------------
    def __add__(self, other) -> "Cyclotomic":
        a, b = self._pair(other)
        da, db = a.den, b.den
        g = gcd(da, db)
        den = da // g * db
        fa, fb = db // g, da // g
        return Cyclotomic(a.m, [x * fa + y * fb for x, y in zip(a.num, b.num)], den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.m, [-v for v in self.num], self.den, _normalized=False)

    def __sub__(self, other) -> "Cyclotomic":
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, int):
            return Cyclotomic(self.m, [v * other for v in self.num], self.den)
        if isinstance(other, Fraction):
            return Cyclotomic(self.m, [v * other.numerator for v in self.num],
                              self.den * other.denominator)
        a, b = self._pair(other)
        phi = len(a.num)
        acc = [0] * (2 * phi - 1)
        nz_b = [(j, y) for j, y in enumerate(b.num) if y]
        for i, x in enumerate(a.num):
            if x == 0:
                continue
            for j, y in nz_b:
                acc[i + j] += x * y
        rows = _reduction_rows(a.m)
        out = list(acc[:phi])
        for e in range(phi, 2 * phi - 1):
            c = acc[e]
            if c:
                row = rows[e]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return Cyclotomic(a.m, out, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.m, self.num, self.den * other)
        if isinstance(other, Fraction):
            return self * Fraction(other.denominator, other.numerator)
        raise PreconditionViolated("division only by rationals")

    def galois(self, t: int) -> "Cyclotomic":
        """Image under zeta -> zeta^t; requires gcd(t, m) = 1."""
        t %= self.m
        if gcd(t, self.m) != 1:
            raise PreconditionViolated(f"galois exponent {t} not coprime to {self.m}")
        rows = _reduction_rows(self.m)
        phi = len(self.num)
        acc = [0] * phi
        for e, c in enumerate(self.num):
            if c == 0:
                continue
            row = rows[(e * t) % self.m]
            for i, r in enumerate(row):
                if r:
                    acc[i] += c * r
        return Cyclotomic(self.m, acc, self.den)

    def conjugate(self) -> "Cyclotomic":
        if self.m == 1:
            return self
        return self.galois(self.m - 1)

    # -- predicates and views ---------------------------------------------------
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.num)

    def is_rational(self) -> bool:
        return all(v == 0 for v in self.num[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise PreconditionViolated("value is not rational")
        return Fraction(self.num[0], self.den)

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise PreconditionViolated("value is not a rational integer")
        return f.numerator

    def to_complex(self) -> complex:
        acc = 0j
        for e, c in enumerate(self.num):
            if c:
                acc += c * cmath.exp(2j * cmath.pi * e / self.m)
        return acc / self.den

    def sort_key(self) -> tuple:
        return tuple(Fraction(v, self.den) for v in self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._pair(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.m, self.num, self.den))

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for e, c in enumerate(self.num):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.m}" if e == 1 else f"z{self.m}^{e}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        body = "+".join(terms).replace("+-", "-")
        return body if self.den == 1 else f"({body})/{self.den}"
