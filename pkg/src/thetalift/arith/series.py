"""Truncated q-expansions with rational exponents.

A :class:`QExpansion` stores a sparse map exponent -> coefficient together with
a truncation bound ``prec``: every exponent below ``prec`` is known (absent
means zero). ``prec=None`` marks an exact finite sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Mapping

import gmpy2
import mpmath


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def unit_inverse(c):
    """Inverse of c in its coefficient ring, or ValueError if c is not a unit."""
    if isinstance(c, bool):
        c = int(c)
    if isinstance(c, int):
        if c in (1, -1):
            return c
        raise ValueError(f"{c} is not a unit of Z")
    if isinstance(c, Fraction):
        if not c:
            raise ValueError("0 is not a unit")
        return 1 / c
    if hasattr(c, "inverse"):
        return c.inverse()
    raise ValueError(f"cannot invert coefficients of type {type(c).__name__}")


class QExpansion:
    """Sum of c_n q^n over n in (1/d)Z bounded below, known for n < prec."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Mapping[Any, Any] | None = None, prec=None):
        clean = {}
        for n, c in (coeffs or {}).items():
            n = Fraction(n)
            if prec is not None and n >= prec:
                continue
            if c:
                clean[n] = c
        self.coeffs = clean
        self.prec = None if prec is None else Fraction(prec)

    @classmethod
    def from_list(cls, values, start=0, step=1, prec=None) -> QExpansion:
        """Dense constructor: values[i] is the coefficient of q^(start + i*step)."""
        start, step = Fraction(start), Fraction(step)
        if prec is None:
            prec = start + len(values) * step
        return cls({start + i * step: v for i, v in enumerate(values)}, prec)

    @classmethod
    def monomial(cls, n, c=1, prec=None) -> QExpansion:
        return cls({n: c}, prec)

    # -- inspection ---------------------------------------------------------

    @property
    def denominator(self) -> int:
        d = 1
        for n in self.coeffs:
            d = _lcm(d, n.denominator)
        return d

    def valuation(self):
        """Smallest exponent with nonzero coefficient (prec if the series is zero to its precision)."""
        if self.coeffs:
            return min(self.coeffs)
        return self.prec

    def __getitem__(self, n):
        n = Fraction(n)
        if self.prec is not None and n >= self.prec:
            raise IndexError(f"coefficient of q^{n} is beyond the truncation bound {self.prec}")
        return self.coeffs.get(n, 0)

    def items(self):
        return sorted(self.coeffs.items())

    def truncate(self, prec) -> QExpansion:
        return QExpansion(self.coeffs, _min_prec(self.prec, Fraction(prec)))

    def shift(self, k) -> QExpansion:
        """Multiply by q^k."""
        k = Fraction(k)
        return QExpansion({n + k: c for n, c in self.coeffs.items()}, None if self.prec is None else self.prec + k)

    def map_coefficients(self, f: Callable) -> QExpansion:
        return QExpansion({n: f(c) for n, c in self.coeffs.items()}, self.prec)

    def agrees_with(self, other: QExpansion) -> bool:
        """Equality of all coefficients below the joint truncation bound."""
        bound = _min_prec(self.prec, other.prec)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(n, 0) == other.coeffs.get(n, 0) for n in keys if bound is None or n < bound)

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        return self.prec == other.prec and self.agrees_with(other)

    __hash__ = None

    def __repr__(self):
        terms = " + ".join(f"{c}*q^{n}" for n, c in self.items()[:8])
        tail = "" if self.prec is None else f" + O(q^{self.prec})"
        return f"QExpansion({terms or '0'}{tail})"

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QExpansion):
            return other
        return QExpansion({0: other}, None)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out[n] + c if n in out else c
        return QExpansion(out, _min_prec(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return QExpansion({n: -c for n, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            return series_mul(self, other)
        return QExpansion({n: c * other for n, c in self.coeffs.items()}, self.prec)

    def __rmul__(self, other):
        return QExpansion({n: other * c for n, c in self.coeffs.items()}, self.prec)

    def __pow__(self, k: int):
        if k < 0:
            return series_invert(self) ** (-k)
        result = QExpansion({0: 1}, None)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def series_mul(a: QExpansion, b: QExpansion) -> QExpansion:
    """Product, exact below min(prec_a + val_b, prec_b + val_a)."""
    if a.prec is None and b.prec is None:
        prec = None
    else:
        va, vb = a.valuation(), b.valuation()
        cands = []
        if a.prec is not None:
            cands.append(a.prec + (vb if vb is not None else 0))
        if b.prec is not None:
            cands.append(b.prec + (va if va is not None else 0))
        prec = min(cands)
    out: dict[Fraction, Any] = {}
    for n1, c1 in a.coeffs.items():
        for n2, c2 in b.coeffs.items():
            n = n1 + n2
            if prec is not None and n >= prec:
                continue
            term = c1 * c2
            out[n] = out[n] + term if n in out else term
    return QExpansion(out, prec)


def series_invert(a: QExpansion, prec=None) -> QExpansion:
    """Multiplicative inverse; the leading coefficient must be a unit.

    An exact input (prec None) needs an explicit ``prec`` for the result.
    """
    if not a.coeffs:
        raise ValueError("cannot invert a series that vanishes to its precision")
    v = a.valuation()
    lead = a.coeffs[v]
    inv_lead = unit_inverse(lead)
    if a.prec is not None:
        bound = a.prec - 2 * v
        prec = bound if prec is None else min(Fraction(prec), bound)
    elif prec is None:
        raise ValueError("inverting an exact series requires prec")
    prec = Fraction(prec)
    d = a.denominator
    step = Fraction(1, d)
    # u = a * q^-v = lead + sum_{k>0} u_k q^k, invert to exponent < prec + v
    u = sorted((n - v, c) for n, c in a.coeffs.items() if n != v)
    limit = prec + v
    b: dict[Fraction, Any] = {Fraction(0): inv_lead}
    e = step
    while e < limit:
        acc = None
        for k, uk in u:
            if k > e:
                break
            prev = b.get(e - k)
            if prev is None:
                continue
            term = uk * prev
            acc = term if acc is None else acc + term
        if acc is not None and acc:
            b[e] = -(inv_lead * acc)
        e += step
    if limit <= 0:
        b = {}
    return QExpansion({n - v: c for n, c in b.items()}, prec)


class BivariateQExpansion:
    """Sum c_{a,b} q1^a q2^b, known for all (a, b) with g1*a + g2*b < bound.

    (g1, g2) is a fixed grading; ``bound=None`` marks an exact finite sum.
    """

    __slots__ = ("coeffs", "grading", "bound")

    def __init__(self, coeffs=None, grading=(1, 1), bound=None):
        self.grading = (Fraction(grading[0]), Fraction(grading[1]))
        self.bound = None if bound is None else Fraction(bound)
        clean = {}
        for (a, b), c in (coeffs or {}).items():
            key = (Fraction(a), Fraction(b))
            if self.bound is not None and self.degree(key) >= self.bound:
                continue
            if c:
                clean[key] = c
        self.coeffs = clean

    def degree(self, key) -> Fraction:
        return self.grading[0] * key[0] + self.grading[1] * key[1]

    def valuation(self):
        if self.coeffs:
            return min(self.degree(k) for k in self.coeffs)
        return self.bound

    def __getitem__(self, key):
        key = (Fraction(key[0]), Fraction(key[1]))
        if self.bound is not None and self.degree(key) >= self.bound:
            raise IndexError(f"coefficient {key} is beyond the truncation bound")
        return self.coeffs.get(key, 0)

    def items(self):
        return sorted(self.coeffs.items())

    def _check(self, other):
        if self.grading != other.grading:
            raise ValueError("gradings differ")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariateQExpansion(out, self.grading, _min_prec(self.bound, other.bound))

    def __neg__(self):
        return BivariateQExpansion({k: -c for k, c in self.coeffs.items()}, self.grading, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivariateQExpansion):
            return BivariateQExpansion({k: c * other for k, c in self.coeffs.items()}, self.grading, self.bound)
        self._check(other)
        va, vb = self.valuation(), other.valuation()
        cands = []
        if self.bound is not None:
            cands.append(self.bound + (vb or 0))
        if other.bound is not None:
            cands.append(other.bound + (va or 0))
        bound = min(cands) if cands else None
        out: dict = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                key = (a1 + a2, b1 + b2)
                if bound is not None and self.degree(key) >= bound:
                    continue
                out[key] = out.get(key, 0) + c1 * c2
        return BivariateQExpansion(out, self.grading, bound)

    def truncate(self, bound) -> BivariateQExpansion:
        return BivariateQExpansion(self.coeffs, self.grading, _min_prec(self.bound, Fraction(bound)))

    def swap(self) -> BivariateQExpansion:
        """Exchange the roles of q1 and q2 (the grading is swapped too)."""
        return BivariateQExpansion(
            {(b, a): c for (a, b), c in self.coeffs.items()}, (self.grading[1], self.grading[0]), self.bound
        )

    def __eq__(self, other):
        if not isinstance(other, BivariateQExpansion):
            return NotImplemented
        return self.grading == other.grading and self.bound == other.bound and self.coeffs == other.coeffs

    __hash__ = None


# -- dense integer products ----------------------------------------------------


def _pack(values: list[int], bits: int) -> int:
    width = bits // 8
    pos = b"".join((v if v > 0 else 0).to_bytes(width, "little") for v in values)
    neg = b"".join((-v if v < 0 else 0).to_bytes(width, "little") for v in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def mul_dense_int(a: list[int], b: list[int], n: int) -> list[int]:
    """First n coefficients of the product of two integer polynomials.

    Kronecker substitution: both sides are packed into big integers and
    multiplied with GMP; exact for arbitrary coefficient sizes.
    """
    a, b = a[:n], b[:n]
    if not a or not b:
        return [0] * n
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if not ma or not mb:
        return [0] * n
    bound = ma * mb * min(len(a), len(b))
    bits = bound.bit_length() + 2
    bits = (bits + 7) // 8 * 8
    prod = gmpy2.mpz(_pack(a, bits)) * gmpy2.mpz(_pack(b, bits))
    length = min(n, len(a) + len(b) - 1)
    half = 1 << (bits - 1)
    # offset every digit by 2^(bits-1) so that no borrows occur
    offset = int.from_bytes(half.to_bytes(bits // 8, "little") * length, "little")
    total = int(prod) + offset
    total &= (1 << (bits * length)) - 1
    raw = total.to_bytes(bits // 8 * length, "little")
    width = bits // 8
    out = [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(length)]
    return out + [0] * (n - length)


def pow_dense_int(a: list[int], k: int, n: int) -> list[int]:
    result = [1] + [0] * (n - 1)
    base = a[:n]
    while k:
        if k & 1:
            result = mul_dense_int(result, base, n)
        k >>= 1
        if k:
            base = mul_dense_int(base, base, n)
    return result


# -- numeric evaluation --------------------------------------------------------


@dataclass(frozen=True)
class Bounded:
    """A numeric value together with an absolute error bound."""

    value: Any
    error: Any

    def contains(self, other: Bounded, slack=0) -> bool:
        return abs(self.value - other.value) <= self.error + other.error + slack


def geometric_tail(start, step, ratio_base, coeff_bound: tuple[float, float]) -> mpmath.mpf:
    """Bound for sum_{j>=0} C*(n_j)^a * r^(n_j), n_j = start + j*step, r < 1.

    Sums terms until the ratio of consecutive terms has dropped below 1/2,
    after which the remainder is dominated by a geometric series.
    """
    C, a = (mpmath.mpf(x) for x in coeff_bound)
    r = mpmath.mpf(ratio_base)
    if not 0 <= r < 1:
        raise ValueError("tail ratio must lie in [0, 1)")
    if r == 0:
        return mpmath.mpf(0)
    start, step = mpmath.mpf(start), mpmath.mpf(step)
    total = mpmath.mpf(0)
    n = start
    for _ in range(10 ** 6):
        eff = max(n, 1)
        term = C * eff ** a * r ** n
        nxt = max(n + step, 1)
        ratio = (nxt / eff) ** a * r ** step
        total += term
        if ratio <= 0.5:
            return total + term * ratio / (1 - ratio)
        n += step
    raise ValueError("tail bound did not converge")


def complex_eval(
    a: QExpansion, tau, precision_bits: int = 128, coeff_bound: tuple[float, float] | None = None
) -> Bounded:
    """Evaluate a truncated q-series at tau, with a bound for the omitted tail.

    ``coeff_bound=(C, k)`` asserts |c_n| <= C * max(n, 1)^k for n >= prec; it is
    required unless the series is exact. Raises ValueError when the tail bound
    exceeds 2^-precision_bits.
    """
    with mpmath.workprec(precision_bits + 20):
        tau = mpmath.mpc(tau)
        if tau.imag <= 0:
            raise ValueError("tau must lie in the upper half plane")
        total = mpmath.mpc(0)
        for n, c in a.items():
            total += _to_mp(c) * mpmath.expjpi(2 * mpmath.mpf(n.numerator) / n.denominator * tau)
        if a.prec is None:
            err = mpmath.mpf(0)
        else:
            if coeff_bound is None:
                raise ValueError("a coefficient growth bound is needed to bound the truncation tail")
            r = mpmath.exp(-2 * mpmath.pi * tau.imag)
            d = a.denominator
            prec_frac = a.prec
            err = geometric_tail(mpmath.mpf(prec_frac.numerator) / prec_frac.denominator, mpmath.mpf(1) / d, r, coeff_bound)
        if err > mpmath.mpf(2) ** (-precision_bits):
            raise ValueError(f"truncation tail bound {mpmath.nstr(err, 5)} exceeds 2^-{precision_bits}")
        return Bounded(total, err)


def _to_mp(c):
    if isinstance(c, int):
        return mpmath.mpf(c)
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    if hasattr(c, "to_complex"):
        return c.to_complex()
    return mpmath.mpmathify(c)
