"""Level-one modular forms: Eisenstein series, Delta, Miller bases, Hecke operators, eigenforms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
import sympy

from .arith.numbers import bernoulli
from .arith.numfield import NumberField, NumberFieldElement
from .arith.series import QExpansion, mul_dense_int, pow_dense_int


@dataclass
class LevelOneForm:
    """A q-expansion sum_{n < order} coeffs[n] q^n of weight ``weight``."""

    weight: int
    coeffs: list
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        if n >= len(self.coeffs):
            raise IndexError(f"coefficient {n} is beyond the expansion order {len(self.coeffs)}")
        return self.coeffs[n]

    @property
    def qexp(self) -> QExpansion:
        return QExpansion.from_list(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LevelOneForm):
            return NotImplemented
        n = min(self.order, other.order)
        return self.weight == other.weight and self.coeffs[:n] == other.coeffs[:n]


def sigma_list(k: int, order: int) -> list[int]:
    """sigma_k(n) for 0 <= n < order (entry 0 is 0)."""
    s = [0] * order
    for d in range(1, order):
        dk = d ** k
        for n in range(d, order, d):
            s[n] += dk
    return s


def eisenstein(k: int, order: int) -> LevelOneForm:
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n."""
    if k % 2 or k < 4:
        raise ValueError("Eisenstein series need even weight k >= 4")
    c = -Fraction(2 * k) / bernoulli(k)
    sig = sigma_list(k - 1, order)
    coeffs: list = [Fraction(1)] + [c * s for s in sig[1:]]
    if c.denominator == 1:
        coeffs = [int(x) for x in coeffs]
    return LevelOneForm(k, coeffs[:order], f"E{k}")


@lru_cache(maxsize=4)
def _euler_function(order: int) -> tuple[int, ...]:
    """prod_{n>=1} (1 - q^n) via the pentagonal number theorem."""
    out = [0] * order
    k = 0
    while True:
        hit = False
        for g in ((k * (3 * k - 1)) // 2, (k * (3 * k + 1)) // 2) if k else (0,):
            if g < order:
                out[g] = -1 if k % 2 else 1
                hit = True
        if not hit and k:
            break
        k += 1
    return tuple(out)


@lru_cache(maxsize=4)
def _delta_coeffs(order: int) -> tuple[int, ...]:
    if order <= 1:
        return (0,) * order
    eta24 = pow_dense_int(list(_euler_function(order - 1)), 24, order - 1)
    return tuple([0] + eta24)


def delta(order: int) -> LevelOneForm:
    """Delta = q prod (1 - q^n)^24, from the pentagonal series and exact big-integer powering."""
    return LevelOneForm(12, list(_delta_coeffs(order)), "Delta")


def delta_from_eisenstein(order: int) -> LevelOneForm:
    """(E4^3 - E6^2) / 1728, an independent construction of Delta."""
    e4, e6 = eisenstein(4, order).coeffs, eisenstein(6, order).coeffs
    a = pow_dense_int(e4, 3, order)
    b = mul_dense_int(e6, e6, order)
    return LevelOneForm(12, [(x - y) // 1728 for x, y in zip(a, b)], "Delta")


def dim_modular_forms(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    if k == 2:
        return 0
    return k // 12 if k % 12 == 2 else k // 12 + 1


def dim_cusp_forms(k: int) -> int:
    """Classical dimension formula for S_k(SL_2(Z))."""
    if k < 12 or k % 2:
        return 0
    return dim_modular_forms(k) - 1


def _e4_e6_monomial(weight: int, order: int) -> list[int]:
    """E4^a E6^b with 4a + 6b = weight, b in {0, 1}."""
    b = 1 if weight % 4 else 0
    a = (weight - 6 * b) // 4
    out = [1] + [0] * (order - 1)
    if a:
        out = pow_dense_int(eisenstein(4, order).coeffs, a, order)
    if b:
        out = mul_dense_int(out, eisenstein(6, order).coeffs, order)
    return out


def cusp_basis(k: int, order: int) -> list[LevelOneForm]:
    """Miller basis of S_k: integral forms with c_i(j) = delta_ij for 1 <= i, j <= dim."""
    d = dim_cusp_forms(k)
    if d == 0:
        return []
    if order <= d:
        raise ValueError(f"order {order} is too small to echelonize a {d}-dimensional space")
    D = list(_delta_coeffs(order))
    rows = []
    Dj = [1] + [0] * (order - 1)
    for j in range(1, d + 1):
        Dj = mul_dense_int(Dj, D, order)
        rows.append(mul_dense_int(Dj, _e4_e6_monomial(k - 12 * j, order), order))
    # rows[j-1] = q^j + ..., unitriangular: clear above-diagonal entries
    for i in range(d - 1, -1, -1):
        for r in range(i):
            c = rows[r][i + 1]
            if c:
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[i])]
    return [LevelOneForm(k, r, f"S{k}_basis{i + 1}") for i, r in enumerate(rows)]


def hecke(f: LevelOneForm, p: int, order: int | None = None) -> LevelOneForm:
    """T_p f with coefficients c(pn) + p^(k-1) c(n/p)."""
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    max_order = (f.order - 1) // p + 1
    if order is None:
        order = max_order
    if order > max_order:
        raise ValueError(f"T_{p} needs {p * (order - 1) + 1} coefficients, have {f.order}")
    pk = p ** (f.weight - 1)
    out = []
    for n in range(order):
        c = f.coeffs[p * n]
        if n % p == 0:
            c = c + pk * f.coeffs[n // p]
        out.append(c)
    return LevelOneForm(f.weight, out, f"T{p}({f.name})")


def hecke_matrix(k: int, p: int, order: int | None = None) -> list[list[int]]:
    """A[i][j] = (T_p b_i)(j+1) on the Miller basis, so T_p b_i = sum_j A[i][j] b_j."""
    d = dim_cusp_forms(k)
    if d == 0:
        return []
    order = order or p * (d + 1) + 1
    basis = cusp_basis(k, order)
    return [[hecke(b, p)[j] for j in range(1, d + 1)] for b in basis]


def charpoly(matrix) -> list[int]:
    """Characteristic polynomial det(x I - A), integer coefficients low degree first."""
    if not matrix:
        return [1]
    x = sympy.Symbol("x")
    poly = sympy.Matrix(matrix).charpoly(x)
    return [int(c) for c in reversed(poly.all_coeffs())]


def _sympy_poly(coeffs):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(coeffs)), x)


def is_squarefree(coeffs) -> bool:
    P = _sympy_poly(coeffs)
    return sympy.degree(sympy.gcd(P, P.diff()), P.gen) == 0


@dataclass
class HeckeEigenform:
    """Normalized eigenform sum_i w_i b_i over the Miller basis, w_i in K = Q[x]/(h)."""

    weight: int
    field: NumberField
    weights: list[NumberFieldElement]
    basis: list[LevelOneForm] = field(repr=False)

    @property
    def order(self) -> int:
        return self.basis[0].order

    def c(self, n: int) -> NumberFieldElement:
        acc = self.field([0])
        for w, b in zip(self.weights, self.basis):
            if b[n]:
                acc = acc + w * b[n]
        return acc

    def coefficients(self, order: int | None = None) -> list[NumberFieldElement]:
        order = order or self.order
        return [self.c(n) for n in range(order)]

    def embeddings(self, dps: int = 40):
        return self.field.embeddings(dps)

    def real_embeddings(self, dps: int = 40):
        return [r for r in self.field.embeddings(dps) if not isinstance(r, mpmath.mpc)]

    def numeric_coefficients(self, root, order: int | None = None) -> list:
        """c(n) under the embedding generator -> root, as mpmath numbers."""
        order = order or self.order
        ws = [w.embed(root) for w in self.weights]
        out = []
        for n in range(order):
            out.append(mpmath.fsum(w * b.coeffs[n] for w, b in zip(ws, self.basis) if b.coeffs[n]))
        return out

    def is_rational(self) -> bool:
        return self.field.degree == 1

    def integer_coefficients(self, order: int | None = None) -> list[int]:
        """Coefficients of a rational eigenform as Python ints (fast path)."""
        if not self.is_rational():
            raise ValueError("eigenform is not defined over Q")
        order = order or self.order
        ws = [w.to_fraction() for w in self.weights]
        out = []
        for n in range(order):
            v = sum(w * b.coeffs[n] for w, b in zip(ws, self.basis))
            out.append(int(v) if Fraction(v).denominator == 1 else v)
        return out


def _solve_left_eigenvector(A, lam: NumberFieldElement) -> list[NumberFieldElement]:
    """w with w^T A = lam w^T and w_0 = 1, by elimination over the number field."""
    K = lam.field
    d = len(A)
    # (A^T - lam I) w = 0
    M = [[K([A[j][i]]) - (lam if i == j else 0) for j in range(d)] for i in range(d)]
    pivots = []
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, d) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(d):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    if len(free) != 1:
        raise ValueError("eigenspace is not one-dimensional")
    f = free[0]
    w = [K([0])] * d
    w[f] = K([1])
    for i, c in enumerate(pivots):
        w[c] = -M[i][f]
    if not w[0]:
        raise ValueError("eigenvector has vanishing first coefficient")
    inv = w[0].inverse()
    return [x * inv for x in w]


def eigenforms(k: int, order: int) -> list[HeckeEigenform]:
    """Normalized Hecke eigenforms of S_k, one per irreducible factor of the T_2 charpoly."""
    d = dim_cusp_forms(k)
    if d == 0:
        return []
    if order < 2 * (d + 1) + 1:
        raise ValueError("order too small for the T_2 matrix")
    basis = cusp_basis(k, order)
    A = [[hecke(b, 2)[j] for j in range(1, d + 1)] for b in basis]
    cp = charpoly(A)
    if not is_squarefree(cp):
        raise ValueError(f"T_2 characteristic polynomial in weight {k} is not squarefree")
    x = sympy.Symbol("x")
    _, factors = sympy.factor_list(_sympy_poly(cp).as_expr(), x)
    out = []
    for fac, mult in sorted(factors, key=lambda t: (sympy.degree(t[0], x), str(t[0]))):
        coeffs = [int(c) for c in reversed(sympy.Poly(fac, x).all_coeffs())]
        K = NumberField(coeffs)
        lam = K.gen()
        w = _solve_left_eigenvector(A, lam)
        out.append(HeckeEigenform(k, K, w, basis))
    return out


# -- Satake parameters --------------------------------------------------------------


@dataclass(frozen=True)
class QuadExt:
    """u + v sqrt(D) with u, v, D in a number field K."""

    u: NumberFieldElement
    v: NumberFieldElement
    D: NumberFieldElement

    def __add__(self, o):
        if not isinstance(o, QuadExt):
            return QuadExt(self.u + o, self.v, self.D)
        return QuadExt(self.u + o.u, self.v + o.v, self.D)

    __radd__ = __add__

    def __mul__(self, o):
        if not isinstance(o, QuadExt):
            return QuadExt(self.u * o, self.v * o, self.D)
        return QuadExt(self.u * o.u + self.v * o.v * self.D, self.u * o.v + self.v * o.u, self.D)

    __rmul__ = __mul__

    def conj(self):
        return QuadExt(self.u, -self.v, self.D)

    def norm(self):
        return self.u * self.u - self.v * self.v * self.D

    def __truediv__(self, o):
        if not isinstance(o, QuadExt):
            return QuadExt(self.u / o, self.v / o, self.D)
        n = o.norm()
        return (self * o.conj()) / n

    def __eq__(self, o):
        if isinstance(o, QuadExt):
            return self.u == o.u and self.v == o.v
        return not self.v and self.u == o

    __hash__ = None

    def embed(self, root):
        d = self.D.embed(root)
        s = mpmath.sqrt(mpmath.mpc(d))
        return self.u.embed(root) + self.v.embed(root) * s


@dataclass(frozen=True)
class Satake:
    p: int
    alpha0: QuadExt
    alpha1: QuadExt
    cp: NumberFieldElement
    weight: int

    def exact_checks(self) -> dict[str, bool]:
        pk = self.p ** (self.weight - 1)
        a0, a1 = self.alpha0, self.alpha1
        return {
            "alpha0^2 alpha1 = p^(k-1)": a0 * a0 * a1 == pk,
            "alpha0 (1 + alpha1) = c(p)": a0 * (a1 + 1) == self.cp,
        }

    def numeric(self, root):
        return self.alpha0.embed(root), self.alpha1.embed(root)


def satake(f: HeckeEigenform, p: int) -> Satake:
    """alpha_0 and alpha_0 alpha_1 are the roots of Y^2 - c(p) Y + p^(k-1)."""
    cp = f.c(p)
    pk = p ** (f.weight - 1)
    D = cp * cp - 4 * pk
    half = Fraction(1, 2)
    a0 = QuadExt(cp * half, f.field([half]), D)
    beta = QuadExt(cp * half, f.field([-half]), D)
    a1 = beta / a0
    return Satake(p, a0, a1, cp, f.weight)


def primes_up_to(n: int) -> list[int]:
    return list(sympy.primerange(2, n + 1))
