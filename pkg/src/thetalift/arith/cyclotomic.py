"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(M)-1), which is
canonical after reduction modulo the M-th cyclotomic polynomial, so equality is
plain tuple comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath
from sympy import cyclotomic_poly, factorint
from sympy.abc import x as _x

Number = int | Fraction


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _power_table(M: int) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of zeta_M^k, k = 0..M-1, in the power basis."""
    poly = [int(c) for c in reversed(cyclotomic_poly(M, _x, polys=True).all_coeffs())]
    phi = len(poly) - 1
    rows = []
    vec = [0] * phi
    vec[0] = 1
    for _ in range(M):
        rows.append(tuple(vec))
        # multiply by zeta: shift, then eliminate zeta^phi
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            vec = [v - top * c for v, c in zip(vec, poly[:phi])]
    return tuple(rows)


def euler_phi(M: int) -> int:
    return len(_power_table(M)[0])


class Cyclotomic:
    """An element sum_k c_k e(k/M) of Q(zeta_M), e(x) = exp(2 pi i x)."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        phi = euler_phi(modulus)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"expected {phi} coordinates, got {len(coeffs)}")
        self.modulus = modulus
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_terms(cls, modulus: int, terms) -> Cyclotomic:
        """Build sum c_k e(k/M) from an iterable or mapping of (k, c_k)."""
        if hasattr(terms, "items"):
            terms = terms.items()
        table = _power_table(modulus)
        phi = len(table[0])
        acc = [Fraction(0)] * phi
        for k, c in terms:
            if not c:
                continue
            row = table[k % modulus]
            for i, r in enumerate(row):
                if r:
                    acc[i] += c * r
        return cls(modulus, acc)

    @classmethod
    def rational(cls, modulus: int, value: Number) -> Cyclotomic:
        phi = euler_phi(modulus)
        return cls(modulus, [Fraction(value)] + [Fraction(0)] * (phi - 1))

    @classmethod
    def zero(cls, modulus: int) -> Cyclotomic:
        return cls.rational(modulus, 0)

    @classmethod
    def one(cls, modulus: int) -> Cyclotomic:
        return cls.rational(modulus, 1)

    @classmethod
    def e(cls, x: Number, modulus: int | None = None) -> Cyclotomic:
        """The root of unity e(x) for rational x, in Q(zeta_modulus)."""
        x = Fraction(x)
        if modulus is None:
            modulus = x.denominator
        k = x * modulus
        if k.denominator != 1:
            raise ValueError(f"e({x}) does not lie in Q(zeta_{modulus})")
        return cls.from_terms(modulus, [(int(k), 1)])

    # -- structure ----------------------------------------------------------

    def _coerce(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.modulus == self.modulus:
                return other
            raise ValueError(
                f"incompatible cyclotomic fields Q(zeta_{self.modulus}) and Q(zeta_{other.modulus}); embed first"
            )
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.modulus, other)
        return NotImplemented

    def embed(self, modulus: int) -> Cyclotomic:
        """Image in Q(zeta_modulus); requires self.modulus | modulus."""
        if modulus % self.modulus:
            raise ValueError(f"Q(zeta_{self.modulus}) is not contained in Q(zeta_{modulus})")
        step = modulus // self.modulus
        return Cyclotomic.from_terms(modulus, [(i * step, c) for i, c in enumerate(self.coeffs)])

    def conjugate(self) -> Cyclotomic:
        return Cyclotomic.from_terms(self.modulus, [(-i, c) for i, c in enumerate(self.coeffs)])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_complex(self) -> mpmath.mpc:
        M = self.modulus
        total = mpmath.mpc(0)
        for k, c in enumerate(self.coeffs):
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / M)
        return total

    def __complex__(self) -> complex:
        return complex(self.to_complex())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.modulus, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.modulus, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.modulus, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        M = self.modulus
        acc: dict[int, Fraction] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = (i + j) % M
                    acc[k] = acc.get(k, 0) + a * b
        return Cyclotomic.from_terms(M, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.modulus, [a / other for a in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.one(self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            if other.modulus != self.modulus:
                M = _lcm(self.modulus, other.modulus)
                return self.embed(M).coeffs == other.embed(M).coeffs
            return self.coeffs == other.coeffs
        return NotImplemented

    # equality crosses moduli, so no hash compatible with it is cheap to compute
    __hash__ = None

    def terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero (k, c_k) pairs in the canonical basis, meaning sum c_k e(k/M)."""
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        return f"Cyclotomic({self.modulus}, {self})"

    def __str__(self):
        terms = self.terms()
        if not terms:
            return "0"
        parts = []
        for k, c in terms:
            if k == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*e({Fraction(k, self.modulus)})")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


@lru_cache(maxsize=None)
def sqrt_integer(n: int) -> Cyclotomic:
    """sqrt(n) for a positive integer n, as an element of Q(zeta_M).

    Built from quadratic Gauss sums: for an odd prime p, sum_a e(a^2/p) equals
    sqrt(p) or i*sqrt(p) according to p mod 4, and sqrt(2) = e(1/8) + e(-1/8).
    """
    if n < 1:
        raise ValueError("n must be positive")
    square_part = 1
    primes = []
    for p, e in factorint(n).items():
        square_part *= p ** (e // 2)
        if e % 2:
            primes.append(p)
    M = 8
    for p in primes:
        if p != 2:
            M = _lcm(M, 4 * p)
    result = Cyclotomic.rational(M, square_part)
    for p in primes:
        if p == 2:
            root = Cyclotomic.e(Fraction(1, 8), M) + Cyclotomic.e(Fraction(-1, 8), M)
        else:
            gauss = Cyclotomic.from_terms(M, [((a * a % p) * (M // p), 1) for a in range(p)])
            root = gauss if p % 4 == 1 else gauss * Cyclotomic.e(Fraction(-1, 4), M)
        result = result * root
    return result
