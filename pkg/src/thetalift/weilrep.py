"""Exact Weil representation matrices rho_L(gamma) for gamma in SL_2(Z)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith.cyclotomic import Cyclotomic, sqrt_integer
from .lattice import DiscriminantForm


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def weil_modulus(A: DiscriminantForm) -> int:
    return _lcm(8, 2 * A.level)


class WeilMatrix:
    """|D|^(-k/2) times a matrix over Q(zeta_M), D the discriminant group.

    Columns are indexed by the source basis vector e_gamma and rows by the
    target, so rho(g1 g2) = rho(g1) * rho(g2) as matrices. Even half-powers
    are absorbed into the entries, leaving k in {0, 1}.
    """

    __slots__ = ("order", "modulus", "entries", "scale_halfpower")

    def __init__(self, order: int, modulus: int, entries, scale_halfpower: int = 0):
        rows = [list(r) for r in entries]
        k = scale_halfpower
        if k < 0:
            raise ValueError("negative scale")
        if k >= 2:
            factor = Fraction(1, order ** (k // 2))
            rows = [[e * factor for e in r] for r in rows]
            k %= 2
        self.order = order
        self.modulus = modulus
        self.entries = tuple(tuple(r) for r in rows)
        self.scale_halfpower = k

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, order: int, dim: int, modulus: int) -> WeilMatrix:
        one, zero = Cyclotomic.one(modulus), Cyclotomic.zero(modulus)
        return cls(order, modulus, [[one if i == j else zero for j in range(dim)] for i in range(dim)])

    def __matmul__(self, other: WeilMatrix) -> WeilMatrix:
        if self.dim != other.dim or self.modulus != other.modulus:
            raise ValueError("incompatible Weil matrices")
        n = self.dim
        zero = Cyclotomic.zero(self.modulus)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return WeilMatrix(self.order, self.modulus, out, self.scale_halfpower + other.scale_halfpower)

    __mul__ = __matmul__

    def __pow__(self, n: int) -> WeilMatrix:
        if n < 0:
            return self.conjugate_transpose() ** (-n)
        result = WeilMatrix.identity(self.order, self.dim, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def conjugate_transpose(self) -> WeilMatrix:
        n = self.dim
        return WeilMatrix(
            self.order,
            self.modulus,
            [[self.entries[j][i].conjugate() for j in range(n)] for i in range(n)],
            self.scale_halfpower,
        )

    def is_identity(self) -> bool:
        return self == WeilMatrix.identity(self.order, self.dim, self.modulus)

    def __eq__(self, other):
        if not isinstance(other, WeilMatrix):
            return NotImplemented
        if self.dim != other.dim or self.order != other.order:
            return False
        if self.scale_halfpower == other.scale_halfpower:
            return all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))
        # A |D|^(-1/2) = B  <=>  A = B sqrt|D|, compared in a common cyclotomic field
        odd, even = (self, other) if self.scale_halfpower else (other, self)
        root = sqrt_integer(self.order)
        M = _lcm(_lcm(odd.modulus, even.modulus), root.modulus)
        root = root.embed(M)
        return all(
            a.embed(M) == b.embed(M) * root for ra, rb in zip(odd.entries, even.entries) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def numeric(self):
        """Entries as mpmath complex numbers, scale applied."""
        import mpmath

        s = mpmath.mpf(self.order) ** (-mpmath.mpf(self.scale_halfpower) / 2)
        return [[e.to_complex() * s for e in r] for r in self.entries]

    def render(self) -> str:
        scale = "1" if not self.scale_halfpower else f"|D|^(-1/2) with |D| = {self.order}"
        lines = [f"modulus: {self.modulus}", f"scale: {scale}"]
        for i, r in enumerate(self.entries):
            lines.append(f"row {i}: " + " | ".join(str(e) for e in r))
        return "\n".join(lines)


def rho_T(A: DiscriminantForm, power: int = 1) -> WeilMatrix:
    """Diagonal matrix with entries e(power * q(gamma))."""
    M = weil_modulus(A)
    zero = Cyclotomic.zero(M)
    labels = A.labels
    n = len(labels)
    entries = [[zero] * n for _ in range(n)]
    for i, h in enumerate(labels):
        entries[i][i] = Cyclotomic.e(power * A.q(h), M)
    return WeilMatrix(A.order, M, entries)


def rho_S(A: DiscriminantForm) -> WeilMatrix:
    """rho(S) e_gamma = e(-(p-q)/8) / sqrt|D| * sum_delta e(-(gamma, delta)) e_delta."""
    M = weil_modulus(A)
    sig = Fraction(A.signature_mod_8, 8)
    labels = A.labels
    entries = [[Cyclotomic.e(-sig - A.b(g, d), M) for g in labels] for d in labels]
    return WeilMatrix(A.order, M, entries, 1)


@dataclass(frozen=True)
class SL2Word:
    """A product of generators, e.g. (("T", 2), ("S", 1), ("T", -1))."""

    letters: tuple[tuple[str, int], ...] = ()

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        m = ((1, 0), (0, 1))
        for g, e in self.letters:
            m = _mat_mul(m, _gen_power(g, e))
        return m

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters) or "1"


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _gen_power(g: str, e: int):
    if g == "T":
        return ((1, e), (0, 1))
    if g == "S":
        m = ((1, 0), (0, 1))
        base = ((0, -1), (1, 0)) if e >= 0 else ((0, 1), (-1, 0))
        for _ in range(abs(e) % 4):
            m = _mat_mul(m, base)
        return m
    raise ValueError(f"unknown generator {g}")


def decompose_sl2(gamma) -> SL2Word:
    """Write gamma as a word T^a0 S T^a1 S ... via the nearest-integer Euclidean algorithm."""
    (a, b), (c, d) = gamma
    if a * d - b * c != 1:
        raise ValueError("matrix does not lie in SL_2(Z)")
    letters: list[tuple[str, int]] = []
    while c:
        q = _nearest(a, c)
        # gamma = T^q S gamma', gamma' = S^-1 T^-q gamma
        a, b = a - q * c, b - q * d
        if q:
            letters.append(("T", q))
        letters.append(("S", 1))
        a, b, c, d = c, d, -a, -b
    if a == 1:
        if b:
            letters.append(("T", b))
    else:  # a = d = -1: gamma = S^2 T^-b
        letters.append(("S", 2))
        if b:
            letters.append(("T", -b))
    return SL2Word(tuple(letters))


def _nearest(a: int, c: int) -> int:
    """Nearest integer to a/c."""
    return (2 * a + c) // (2 * c)


def rho_word(A: DiscriminantForm, word: SL2Word) -> WeilMatrix:
    S = rho_S(A)
    result = WeilMatrix.identity(A.order, A.order, weil_modulus(A))
    for g, e in word.letters:
        if g == "T":
            result = result @ rho_T(A, e)
        else:
            step = S if e >= 0 else S.conjugate_transpose()
            for _ in range(abs(e)):
                result = result @ step
    return result


def rho(A: DiscriminantForm, gamma) -> WeilMatrix:
    """rho_L(gamma) as a product of generator images along decompose_sl2(gamma)."""
    return rho_word(A, decompose_sl2(gamma))


def verify_relations(A: DiscriminantForm) -> dict[str, bool]:
    """Exact checks of the defining relations of the Weil representation."""
    S, T = rho_S(A), rho_T(A)
    S2 = S @ S
    ST = S @ T
    return {
        "S^4 = 1": (S2 @ S2).is_identity(),
        "(ST)^3 = S^2": (ST @ ST @ ST) == S2,
        "T^N = 1": (T ** A.level).is_identity(),
        "S unitary": (S @ S.conjugate_transpose()).is_identity(),
        "T unitary": (T @ T.conjugate_transpose()).is_identity(),
    }


def milgram_check(A: DiscriminantForm) -> bool:
    """sum_gamma e(q(gamma)) == sqrt|D| e((p-q)/8), exactly."""
    root = sqrt_integer(A.order)
    M = _lcm(weil_modulus(A), root.modulus)
    total = Cyclotomic.zero(M)
    for h in A.labels:
        total = total + Cyclotomic.e(A.q(h), M)
    rhs = root.embed(M) * Cyclotomic.e(Fraction(A.signature_mod_8, 8), M)
    return total == rhs
