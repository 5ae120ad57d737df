"""Bernoulli numbers and exact scalars involving a formal pi."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(k: int) -> Fraction:
    """The k-th Bernoulli number, with B_1 = -1/2.

    Uses sum_{j=0}^{k} C(k+1, j) B_j = 0; values are cached.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    while len(_BERNOULLI) <= k:
        n = len(_BERNOULLI)
        s = sum(comb(n + 1, j) * b for j, b in enumerate(_BERNOULLI))
        _BERNOULLI.append(-s / (n + 1))
    return _BERNOULLI[k]


@dataclass(frozen=True)
class GaussianRational:
    """a + b*i with a, b rational."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational(Fraction(1))
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


I = GaussianRational(Fraction(0), Fraction(1))


class PiLaurent:
    """Finite sum of c_k * pi^k with Gaussian-rational c_k, pi kept formal."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[int, GaussianRational] = {}
        for k, c in (terms or {}).items():
            c = GaussianRational.coerce(c)
            if c:
                clean[int(k)] = c
        self.terms = clean

    @classmethod
    def coerce(cls, x) -> PiLaurent:
        if isinstance(x, PiLaurent):
            return x
        return cls({0: x})

    @classmethod
    def pi_power(cls, k: int, coeff=1) -> PiLaurent:
        return cls({k: coeff})

    def __add__(self, other):
        other = PiLaurent.coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, GaussianRational()) + c
        return PiLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return PiLaurent({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-PiLaurent.coerce(other))

    def __rsub__(self, other):
        return PiLaurent.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            if not other:
                return PiLaurent()
            return PiLaurent({k: c * other for k, c in self.terms.items()})
        other = PiLaurent.coerce(other)
        out: dict[int, GaussianRational] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, GaussianRational()) + c1 * c2
        return PiLaurent(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            inv = GaussianRational.coerce(other).inverse()
            return self * inv
        other = PiLaurent.coerce(other)
        if len(other.terms) != 1:
            raise ValueError("can only divide by a monomial c*pi^k")
        (k, c), = other.terms.items()
        return PiLaurent({j - k: d / c for j, d in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            return PiLaurent.coerce(1) / self ** (-n)
        result = PiLaurent.coerce(1)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = PiLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_complex(self) -> mpmath.mpc:
        return mpmath.fsum(
            mpmath.mpc(mpmath.mpf(c.re.numerator) / c.re.denominator, mpmath.mpf(c.im.numerator) / c.im.denominator)
            * mpmath.pi ** k
            for k, c in self.terms.items()
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            parts.append(str(c) if k == 0 else f"{c}*pi^{k}")
        return " + ".join(parts)

    __repr__ = __str__


@dataclass(frozen=True)
class PiMultiple:
    """The exact real number coeff * pi^power."""

    coeff: Fraction
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def __mul__(self, other):
        if isinstance(other, PiMultiple):
            return PiMultiple(self.coeff * other.coeff, self.power + other.power)
        return PiMultiple(self.coeff * Fraction(other), self.power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiMultiple):
            return PiMultiple(self.coeff / other.coeff, self.power - other.power)
        return PiMultiple(self.coeff / Fraction(other), self.power)

    def to_mpf(self) -> mpmath.mpf:
        return mpmath.mpf(self.coeff.numerator) / self.coeff.denominator * mpmath.pi ** self.power

    def __float__(self):
        return float(self.to_mpf())

    def __str__(self):
        if self.power == 0:
            return str(self.coeff)
        pi = "pi" if self.power == 1 else f"pi^{self.power}"
        num, den = self.coeff.numerator, self.coeff.denominator
        head = pi if num == 1 else f"-{pi}" if num == -1 else f"{num}*{pi}"
        return head if den == 1 else f"{head}/{den}"
