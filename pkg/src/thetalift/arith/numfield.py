"""Number fields Q[x]/(h) with h irreducible over Q, and their elements."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

import mpmath


def _trim(c: list[Fraction]) -> list[Fraction]:
    while c and not c[-1]:
        c.pop()
    return c


def poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Division with remainder; coefficient lists are low degree first."""
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        _trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class NumberField:
    """Q[x]/(h); h is given by its coefficients, low degree first."""

    def __init__(self, modulus, name: str = "a"):
        h = _trim([Fraction(c) for c in modulus])
        if len(h) < 2:
            raise ValueError("defining polynomial must have degree >= 1")
        lead = h[-1]
        self.modulus = tuple(c / lead for c in h)
        self.name = name

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __call__(self, coeffs) -> NumberFieldElement:
        if isinstance(coeffs, (int, Fraction)):
            coeffs = [coeffs]
        return NumberFieldElement(self, coeffs)

    def gen(self) -> NumberFieldElement:
        if self.degree == 1:
            return self([-self.modulus[0]])
        return self([0, 1])

    def embeddings(self, dps: int = 40) -> list:
        """All complex roots of h at the requested decimal precision, real ones first."""
        return list(self._roots(dps))

    def _roots(self, dps):
        with mpmath.workdps(dps + 10):
            coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(self.modulus)]
            if self.degree == 1:
                roots = [-coeffs[1] / coeffs[0]]
            else:
                roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=4 * dps + 50)
            out = []
            for r in roots:
                r = mpmath.mpc(r)
                if abs(r.imag) < mpmath.mpf(10) ** (-dps):
                    out.append(mpmath.mpf(r.real))
                else:
                    out.append(r)
            out.sort(key=lambda z: (isinstance(z, mpmath.mpc), float(mpmath.re(z)), float(mpmath.im(z))))
            return tuple(out)

    def poly_str(self, var: str = "x") -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.modulus[k]
            if not c:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            if mono and c == 1:
                parts.append(f"+{mono}")
            elif mono and c == -1:
                parts.append(f"-{mono}")
            else:
                s = str(c) if c < 0 else f"+{c}"
                parts.append(s + (f"*{mono}" if mono else ""))
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __repr__(self):
        return f"NumberField({self.poly_str()})"


QQ = NumberField([0, 1])


class NumberFieldElement:
    """Element of Q[x]/(h) stored as its reduced coefficient tuple."""

    __slots__ = ("field", "coeffs", "__dict__")

    def __init__(self, field: NumberField, coeffs):
        self.field = field
        c = [Fraction(x) for x in coeffs]
        if len(c) > field.degree:
            _, c = poly_divmod(c, list(field.modulus))
        c = list(c) + [Fraction(0)] * (field.degree - len(c))
        self.coeffs = tuple(c)

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise ValueError("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.field, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.field, _poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> NumberFieldElement:
        """Inverse via the extended Euclidean algorithm against h."""
        a = _trim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = list(self.field.modulus), a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            if not r1:
                raise ZeroDivisionError("element is a zero divisor; defining polynomial is reducible")
        c = r1[0]
        return NumberFieldElement(self.field, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.field, [a / other for a in self.coeffs])
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = NumberFieldElement(self.field, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, NumberFieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def embed(self, root):
        """Value under the embedding x -> root."""
        total = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            total = total * root + mpmath.mpf(c.numerator) / c.denominator
        return total

    def embeddings(self, dps: int = 40) -> list:
        return [self.embed(r) for r in self.field.embeddings(dps)]

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = self.field.name if k == 1 else f"{self.field.name}^{k}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"NumberFieldElement({self})"
