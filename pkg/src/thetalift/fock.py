"""Symbolic Fock-model calculus for the Schwartz forms.

Fock variables z_{a,i} (1 <= a <= p+q, 1 <= i <= n) carry coefficients in
Q(i)[pi, 1/pi]. The intertwiner sends x_a - (1/2pi) d/dx_a to c z_a with
c = 1/(2 pi i) and the Gaussian to 1. Exterior parts live in the span of
omega_{alpha mu}, ordered lexicographically in (alpha, mu); symmetric parts
are monomials in the orthogonal basis v_1, ..., v_m with (v_a, v_a) = +1 for
a <= p and -1 otherwise.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .arith.numbers import GaussianRational, PiLaurent

# 1 / (2 pi i) = -i / (2 pi)
C_IOTA = PiLaurent({-1: GaussianRational(0, Fraction(-1, 2))})
PI = PiLaurent({1: 1})
INV_PI = PiLaurent({-1: 1})


# -- polynomials in Fock variables ----------------------------------------------------


class FockPolynomial:
    """Polynomial in z_{a,i}; exponent tuples are indexed by (a-1)*n + (i-1)."""

    __slots__ = ("p", "q", "n", "terms")

    def __init__(self, p: int, q: int, n: int, terms=None):
        if n not in (1, 2):
            raise ValueError("n must be 1 or 2")
        self.p, self.q, self.n = p, q, n
        clean = {}
        for mono, c in (terms or {}).items():
            c = PiLaurent.coerce(c)
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    @property
    def m(self) -> int:
        return self.p + self.q

    @property
    def nvars(self) -> int:
        return self.m * self.n

    def index(self, a: int, i: int) -> int:
        if not (1 <= a <= self.m and 1 <= i <= self.n):
            raise IndexError(f"variable z_({a},{i}) out of range")
        return (a - 1) * self.n + (i - 1)

    @classmethod
    def constant(cls, p, q, n, c=1) -> FockPolynomial:
        return cls(p, q, n, {(0,) * ((p + q) * n): c})

    @classmethod
    def variable(cls, p, q, n, a, i, c=1) -> FockPolynomial:
        P = cls(p, q, n)
        e = [0] * P.nvars
        e[P.index(a, i)] = 1
        P.terms = {tuple(e): PiLaurent.coerce(c)}
        return P

    def _like(self, terms) -> FockPolynomial:
        return FockPolynomial(self.p, self.q, self.n, terms)

    def _check(self, other):
        if (self.p, self.q, self.n) != (other.p, other.q, other.n):
            raise ValueError("polynomials live in different Fock spaces")

    def __add__(self, other):
        if not isinstance(other, FockPolynomial):
            other = FockPolynomial.constant(self.p, self.q, self.n, other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, FockPolynomial):
            return self._like({k: c * other for k, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t = c1 * c2
                out[k] = out[k] + t if k in out else t
        return self._like(out)

    def __rmul__(self, other):
        return self._like({k: other * c for k, c in self.terms.items()})

    def __pow__(self, e: int):
        result = FockPolynomial.constant(self.p, self.q, self.n)
        for _ in range(e):
            result = result * self
        return result

    def derivative(self, a: int, i: int) -> FockPolynomial:
        idx = self.index(a, i)
        out = {}
        for k, c in self.terms.items():
            e = k[idx]
            if e:
                k2 = list(k)
                k2[idx] -= 1
                out[tuple(k2)] = c * e
        return self._like(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, FockPolynomial):
            return (self.p, self.q, self.n) == (other.p, other.q, other.n) and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def first_difference(self, other: FockPolynomial):
        """(monomial, self coeff, other coeff) for the first differing monomial, or None."""
        keys = sorted(set(self.terms) | set(other.terms))
        zero = PiLaurent()
        for k in keys:
            a, b = self.terms.get(k, zero), other.terms.get(k, zero)
            if a != b:
                return k, a, b
        return None

    def degree_split(self, mono) -> tuple[int, int]:
        """(positive-variable degree, negative-variable degree) of a monomial."""
        pos = sum(mono[: self.p * self.n])
        return pos, sum(mono) - pos

    def monomial_str(self, mono) -> str:
        parts = []
        for a in range(1, self.m + 1):
            for i in range(1, self.n + 1):
                e = mono[self.index(a, i)]
                if e:
                    parts.append(f"z{a}{i}" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts) or "1"

    def embed_copy(self, i: int, n: int = 2) -> FockPolynomial:
        """View a one-copy polynomial as a polynomial in copy i of n copies."""
        if self.n != 1:
            raise ValueError("only one-copy polynomials can be embedded")
        out = {}
        for k, c in self.terms.items():
            e = [0] * (self.m * n)
            for a in range(self.m):
                e[a * n + (i - 1)] = k[a]
            out[tuple(e)] = c
        return FockPolynomial(self.p, self.q, n, out)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.monomial_str(k)}" for k, c in sorted(self.terms.items()))

    __repr__ = __str__


def raising(r: int, s: int, P: FockPolynomial) -> FockPolynomial:
    """omega(R_rs) = (1/8pi) sum_alpha z_{alpha r} z_{alpha s} - 2pi sum_mu d^2/dz_{mu r} dz_{mu s}.

    With n = 1 and r = s = 1 this is the SL_2 raising operator R.
    """
    if not (1 <= r <= P.n and 1 <= s <= P.n):
        raise IndexError("raising operator index out of range")
    out = FockPolynomial(P.p, P.q, P.n)
    coeff = PiLaurent({-1: Fraction(1, 8)})
    for alpha in range(1, P.p + 1):
        za = FockPolynomial.variable(P.p, P.q, P.n, alpha, r)
        zb = FockPolynomial.variable(P.p, P.q, P.n, alpha, s)
        out = out + (za * zb * P) * coeff
    for mu in range(P.p + 1, P.m + 1):
        out = out - P.derivative(mu, r).derivative(mu, s) * PiLaurent({1: 2})
    return out


# -- Schrodinger model ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _A_power(e: int) -> tuple:
    """A^e applied to 1, A(P) = 2xP - P'/(2pi); coefficients of x^k as PiLaurent."""
    poly = {0: PiLaurent.coerce(1)}
    for _ in range(e):
        new: dict = {}
        for k, c in poly.items():
            new[k + 1] = new.get(k + 1, PiLaurent()) + c * 2
            if k:
                new[k - 1] = new.get(k - 1, PiLaurent()) - c * PiLaurent({-1: Fraction(k, 2)})
        poly = {k: c for k, c in new.items() if c}
    return tuple(sorted(poly.items()))


def to_schrodinger(P: FockPolynomial) -> dict:
    """Polynomial part (in x_{a,i}) of the Schwartz function with Fock image P.

    Since z = (1/c)(x - d/2pi) = 2 pi i A, a monomial prod z^e maps to
    prod (2 pi i)^e A^e 1 variable by variable.
    """
    two_pi_i = PiLaurent({1: GaussianRational(0, 2)})
    out: dict = {}
    for mono, c in P.terms.items():
        partial = {(0,) * len(mono): c * two_pi_i ** sum(mono)}
        for idx, e in enumerate(mono):
            if not e:
                continue
            nxt = {}
            for key, val in partial.items():
                for k, a in _A_power(e):
                    k2 = list(key)
                    k2[idx] = k
                    k2 = tuple(k2)
                    nxt[k2] = nxt.get(k2, PiLaurent()) + val * a
            partial = nxt
        for key, val in partial.items():
            out[key] = out.get(key, PiLaurent()) + val
    return {k: v for k, v in out.items() if v}


# -- exterior algebra and symmetric tensors ----------------------------------------------------


def omega_basis(p: int, q: int) -> list[tuple[int, int]]:
    """The pairs (alpha, mu) in lexicographic order."""
    return [(a, mu) for a in range(1, p + 1) for mu in range(p + 1, p + q + 1)]


def wedge(I: tuple, J: tuple):
    """omega_I wedge omega_J = sign * omega_K, returned as (sign, K); sign 0 if they overlap."""
    if set(I) & set(J):
        return 0, ()
    seq = list(I) + list(J)
    inversions = sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y])
    return (-1) ** inversions, tuple(sorted(seq))


def hodge_star_basis(I: tuple, N: int):
    """*omega_I = sign * omega_{I^c} with omega_I wedge *omega_I = omega_0 wedge ... wedge omega_{N-1}."""
    comp = tuple(k for k in range(N) if k not in I)
    sign, _ = wedge(I, comp)
    return sign, comp


def _vector_sign(a: int, p: int) -> int:
    return 1 if a <= p else -1


@lru_cache(maxsize=None)
def _sym_inner_monomials(s: tuple, t: tuple, p: int) -> Fraction:
    """Recursive inner product (w_1...w_l, w'_1...w'_l) = (1/l) sum_j (w_1, w'_j)(rest)."""
    if len(s) != len(t):
        raise ValueError("degree mismatch")
    if not s:
        return Fraction(1)
    first, rest = s[0], s[1:]
    total = Fraction(0)
    for j, b in enumerate(t):
        if b == first:
            total += _vector_sign(first, p) * _sym_inner_monomials(rest, tuple(sorted(t[:j] + t[j + 1:])), p)
    return total / len(s)


def sym_inner(u: dict, w: dict, p: int):
    """Bilinear pairing of symmetric tensors given as {sorted index tuple: coefficient}."""
    total = None
    for s, a in u.items():
        for t, b in w.items():
            if len(s) != len(t):
                raise ValueError("degree mismatch")
            val = _sym_inner_monomials(tuple(s), tuple(t), p)
            if val:
                term = a * b * val
                total = term if total is None else total + term
    return total if total is not None else 0


def _exps(s: tuple, m: int) -> list[int]:
    e = [0] * m
    for a in s:
        e[a - 1] += 1
    return e


def _from_exps(e) -> tuple:
    return tuple(a + 1 for a, k in enumerate(e) for _ in range(k))


def sym_laplacian(u: dict, p: int, m: int) -> dict:
    """Delta = sum_alpha d^2/dv_alpha^2 - sum_mu d^2/dv_mu^2 on {monomial: coeff}."""
    out: dict = {}
    for s, c in u.items():
        e = _exps(s, m)
        for a in range(m):
            k = e[a]
            if k >= 2:
                e2 = list(e)
                e2[a] -= 2
                key = _from_exps(e2)
                term = c * (k * (k - 1) * _vector_sign(a + 1, p))
                out[key] = out[key] + term if key in out else term
    return {k: v for k, v in out.items() if v}


def r_squared_times(w: dict, p: int, m: int) -> dict:
    """Multiplication by r^2 = sum_alpha v_alpha^2 - sum_mu v_mu^2."""
    out: dict = {}
    for s, c in w.items():
        for a in range(1, m + 1):
            key = tuple(sorted(s + (a, a)))
            term = c * _vector_sign(a, p)
            out[key] = out[key] + term if key in out else term
    return {k: v for k, v in out.items() if v}


def sym_monomials(m: int, degree: int) -> list[tuple]:
    from itertools import combinations_with_replacement

    return list(combinations_with_replacement(range(1, m + 1), degree))


# -- Schwartz form symbols ----------------------------------------------------------------


class SchwartzFormSymbol:
    """sum 2^(e/2) F_{I,s}(z) omega_I (x) v^s with F one-copy Fock polynomials.

    ``sqrt2_exponent`` is e; keys are (exterior index tuple, sorted symmetric tuple).
    """

    def __init__(self, p: int, q: int, terms=None, sqrt2_exponent: int = 0):
        self.p, self.q = p, q
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self.sqrt2_exponent = sqrt2_exponent

    @property
    def m(self):
        return self.p + self.q

    @property
    def N(self) -> int:
        return self.p * self.q

    def __eq__(self, other):
        if not isinstance(other, SchwartzFormSymbol):
            return NotImplemented
        if (self.p, self.q) != (other.p, other.q):
            return False
        d = self.sqrt2_exponent - other.sqrt2_exponent
        if d % 2:
            return not self.terms and not other.terms
        a, b = (self, other)
        fa, fb = Fraction(1), Fraction(1)
        if d > 0:
            fa = Fraction(2) ** (d // 2)
        else:
            fb = Fraction(2) ** (-d // 2)
        keys = set(a.terms) | set(b.terms)
        zero = FockPolynomial(self.p, self.q, 1)
        return all(a.terms.get(k, zero) * fa == b.terms.get(k, zero) * fb for k in keys)

    __hash__ = None

    def map_coefficients(self, f) -> SchwartzFormSymbol:
        return SchwartzFormSymbol(self.p, self.q, {k: f(v) for k, v in self.terms.items()}, self.sqrt2_exponent)

    def exterior_degrees(self) -> set[int]:
        return {len(k[0]) for k in self.terms}

    def sym_degree(self) -> set[int]:
        return {len(k[1]) for k in self.terms}


def build_phi_KM(p: int, q: int) -> SchwartzFormSymbol:
    """2^(-q/2) prod_mu [sum_alpha c z_alpha (x) omega_{alpha mu}] applied to 1."""
    if p < 1 or q < 0:
        raise ValueError("need p >= 1 and q >= 0")
    basis = omega_basis(p, q)
    pos = {pair: k for k, pair in enumerate(basis)}
    terms = {((), ()): FockPolynomial.constant(p, q, 1)}
    for mu in range(p + q, p, -1):  # the rightmost factor acts first
        new: dict = {}
        for (I, s), F in terms.items():
            for alpha in range(1, p + 1):
                sign, K = wedge((pos[(alpha, mu)],), I)
                if not sign:
                    continue
                G = FockPolynomial.variable(p, q, 1, alpha, 1) * F * (C_IOTA * sign)
                key = (K, s)
                new[key] = new[key] + G if key in new else G
        terms = new
    return SchwartzFormSymbol(p, q, terms, -q)


def build_phi_q_ell(p: int, q: int, ell: int) -> SchwartzFormSymbol:
    """[1/2 sum_alpha c z_alpha (x) 1 (x) A_{v_alpha}]^ell applied to phi_KM."""
    phi = build_phi_KM(p, q)
    half_c = C_IOTA * Fraction(1, 2)
    terms = phi.terms
    for _ in range(ell):
        new: dict = {}
        for (I, s), F in terms.items():
            for alpha in range(1, p + 1):
                key = (I, tuple(sorted(s + (alpha,))))
                G = FockPolynomial.variable(p, q, 1, alpha, 1) * F * half_c
                new[key] = new[key] + G if key in new else G
        terms = new
    return SchwartzFormSymbol(p, q, terms, phi.sqrt2_exponent)


def laplacian_symbol(F: SchwartzFormSymbol) -> SchwartzFormSymbol:
    """Delta applied to the symmetric-tensor part."""
    grouped: dict = {}
    for (I, s), G in F.terms.items():
        grouped.setdefault(I, {})[s] = G
    out: dict = {}
    for I, u in grouped.items():
        for s, G in sym_laplacian(u, F.p, F.m).items():
            out[(I, s)] = G
    return SchwartzFormSymbol(F.p, F.q, out, F.sqrt2_exponent)


def sl2_raising_symbol(F: SchwartzFormSymbol) -> SchwartzFormSymbol:
    return F.map_coefficients(lambda G: raising(1, 1, G))


def harmonic_project(F: SchwartzFormSymbol) -> SchwartzFormSymbol:
    """Projection along Sym^l = H^l + r^2 Sym^(l-2): u -> u - r^2 w with Delta(r^2 w) = Delta u."""
    from .lattice import _inverse

    degs = F.sym_degree()
    if not degs:
        return F
    if len(degs) != 1:
        raise ValueError("symbol mixes symmetric degrees")
    ell = degs.pop()
    if ell < 2:
        return F
    p, m = F.p, F.m
    low = sym_monomials(m, ell - 2)
    idx = {s: k for k, s in enumerate(low)}
    # matrix of w -> Delta(r^2 w) on Sym^(l-2), column j = image of basis j
    M = [[Fraction(0)] * len(low) for _ in low]
    for j, s in enumerate(low):
        img = sym_laplacian(r_squared_times({s: Fraction(1)}, p, m), p, m)
        for t, c in img.items():
            M[idx[t]][j] = c
    Minv = _inverse(M)
    grouped: dict = {}
    for (I, s), G in F.terms.items():
        grouped.setdefault(I, {})[s] = G
    out: dict = {}
    for I, u in grouped.items():
        du = sym_laplacian(u, p, m)
        w = {}
        for j, s in enumerate(low):
            acc = None
            for t, G in du.items():
                c = Minv[j][idx[t]]
                if c:
                    acc = G * c if acc is None else acc + G * c
            if acc is not None and acc:
                w[s] = acc
        h = dict(u)
        for t, G in r_squared_times(w, p, m).items():
            h[t] = h[t] - G if t in h else -G
        for s, G in h.items():
            if G:
                out[(I, s)] = G
    return SchwartzFormSymbol(F.p, F.q, out, F.sqrt2_exponent)


def hodge_star(F: SchwartzFormSymbol) -> SchwartzFormSymbol:
    out = {}
    for (I, s), G in F.terms.items():
        sign, comp = hodge_star_basis(I, F.N)
        out[(comp, s)] = G * sign
    return SchwartzFormSymbol(F.p, F.q, out, F.sqrt2_exponent)


def _pow2_half(e: int):
    if e % 2:
        raise ValueError("odd power of sqrt(2) does not lie in the coefficient ring")
    return Fraction(2) ** (e // 2)


def pair_forms(F1: SchwartzFormSymbol, F2: SchwartzFormSymbol) -> FockPolynomial:
    """Scalar function phi with phi * mu = F1(x_1) wedge *F2(x_2), pairing Sym parts by sym_inner."""
    p, q = F1.p, F1.q
    N = F1.N
    full = tuple(range(N))
    star = hodge_star(F2)
    total = FockPolynomial(p, q, 2)
    by_I2: dict = {}
    for (J, t), G in star.terms.items():
        by_I2.setdefault(J, []).append((t, G.embed_copy(2)))
    for (I, s), G1 in F1.terms.items():
        G1e = G1.embed_copy(1)
        for J, items in by_I2.items():
            sign, K = wedge(I, J)
            if not sign or K != full:
                continue
            for t, G2e in items:
                val = _sym_inner_monomials(s, t, p) if len(s) == len(t) else 0
                if val:
                    total = total + G1e * G2e * (val * sign)
    return total * _pow2_half(F1.sqrt2_exponent + F2.sqrt2_exponent)


def pair_to_scalar(p: int, q: int, ell: int) -> FockPolynomial:
    """The scalar Schwartz function obtained by pairing phi_{q,l}(x_1) with *phi_{q,l}(x_2)."""
    phi = build_phi_q_ell(p, q, ell)
    return pair_forms(phi, phi)


# -- Sym^j Sym^2 C^2 -------------------------------------------------------------------------


class GL2SymElement:
    """Polynomial in a = e1^2, b = e1 e2, c = e2^2; keys (i, k, l) for a^i b^k c^l."""

    def __init__(self, terms=None):
        self.terms = {tuple(k): Fraction(v) for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GL2SymElement(out)

    def __sub__(self, other):
        return self + other * (-1)

    def __mul__(self, other):
        if isinstance(other, GL2SymElement):
            out: dict = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    k = tuple(x + y for x, y in zip(k1, k2))
                    out[k] = out.get(k, 0) + v1 * v2
            return GL2SymElement(out)
        return GL2SymElement({k: v * other for k, v in self.terms.items()})

    def __pow__(self, e):
        r = GL2SymElement({(0, 0, 0): 1})
        for _ in range(e):
            r = r * self
        return r

    def __eq__(self, other):
        return isinstance(other, GL2SymElement) and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def weights(self) -> set[tuple[int, int]]:
        """Torus weights: a^i b^k c^l has weight (2i + k, k + 2l)."""
        return {(2 * i + k, k + 2 * l) for (i, k, l) in self.terms}

    def E12(self) -> GL2SymElement:
        """The derivation e1 d/de2: a -> 0, b -> a, c -> 2b."""
        out: dict = {}
        for (i, k, l), v in self.terms.items():
            if k:
                key = (i + 1, k - 1, l)
                out[key] = out.get(key, 0) + v * k
            if l:
                key = (i, k + 1, l - 1)
                out[key] = out.get(key, 0) + v * 2 * l
        return GL2SymElement(out)

    def E21(self) -> GL2SymElement:
        """The derivation e2 d/de1: a -> 2b, b -> c, c -> 0."""
        out: dict = {}
        for (i, k, l), v in self.terms.items():
            if i:
                key = (i - 1, k + 1, l)
                out[key] = out.get(key, 0) + v * 2 * i
            if k:
                key = (i, k - 1, l + 1)
                out[key] = out.get(key, 0) + v * k
        return GL2SymElement(out)

    def __str__(self):
        parts = []
        for (i, k, l), v in sorted(self.terms.items()):
            mono = "*".join(
                f"{name}^{e}" if e > 1 else name for name, e in (("e1^2", i), ("e1e2", k), ("e2^2", l)) if e
            )
            parts.append(f"{v}*{mono or '1'}")
        return " + ".join(parts) or "0"


def alpha_vector(j: int) -> GL2SymElement:
    """sum_i binom([j/2], i) (-1)^i (e1^2)^i (e2^2)^i (e1e2)^(j-2i)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    h = j // 2
    return GL2SymElement({(i, j - 2 * i, i): math.comb(h, i) * (-1) ** i for i in range(h + 1)})


def apply_U(el: GL2SymElement, p: int, q: int) -> FockPolynomial:
    """omega(element of U(p_+)) applied to 1, with a, b, c acting as R_11, R_12, R_22."""
    out = FockPolynomial(p, q, 2)
    for (i, k, l), v in el.terms.items():
        P = FockPolynomial.constant(p, q, 2)
        for _ in range(i):
            P = raising(1, 1, P)
        for _ in range(k):
            P = raising(1, 2, P)
        for _ in range(l):
            P = raising(2, 2, P)
        out = out + P * v
    return out


def lemma_constant(p: int, q: int, ell: int) -> PiLaurent:
    """p^l (-1)^(q+l) / (2^l pi^(q+l))."""
    j = q + ell
    return PiLaurent({-j: Fraction(p ** ell * (-1) ** j, 2 ** ell)})


def build_xi(p: int, q: int, ell: int) -> FockPolynomial:
    return apply_U(alpha_vector(q + ell), p, q) * lemma_constant(p, q, ell)


def build_psi(p: int, q: int, ell: int) -> FockPolynomial:
    j = q + ell
    h = j // 2
    el = GL2SymElement({(i - 1, j - 2 * i, i - 1): math.comb(h, i) * (-1) ** i for i in range(1, h + 1)})
    return apply_U(el, p, q) * lemma_constant(p, q, ell)


def phiformel_rhs(p: int, q: int, ell: int) -> FockPolynomial:
    """The closed form p^l (-1)^(q+l) / (2^l pi^(q+l)) omega(R_12)^(q+l) applied to 1."""
    P = FockPolynomial.constant(p, q, 2)
    for _ in range(q + ell):
        P = raising(1, 2, P)
    return P * lemma_constant(p, q, ell)


# -- lemma verification -------------------------------------------------------------------------


LEMMAS = (
    "phiformel",
    "decomp",
    "brauer",
    "repsplit_dim",
    "alpha_highest_weight",
    "xi_vanishing",
    "weight_check",
    "p_to_ell_sum",
)

EXTRA_CHECKS = ("phiformel_rescaled", "decomp_operator", "decomp_rescaled")


@dataclass
class LemmaResult:
    name: str
    params: tuple
    passed: bool
    witness: str = ""
    applicable: bool = True


def _witness(lhs: FockPolynomial, rhs: FockPolynomial) -> str:
    d = lhs.first_difference(rhs)
    if d is None:
        return ""
    mono, a, b = d
    return f"monomial {lhs.monomial_str(mono)}: lhs {a}, rhs {b}"


def _repsplit_weights(j: int) -> tuple[Counter, Counter]:
    """Torus weight multisets of Sym^j Sym^2 and of the claimed direct sum."""
    lhs = Counter()
    for i in range(j + 1):
        for k in range(j - i + 1):
            l = j - i - k
            lhs[(2 * i + k, k + 2 * l)] += 1
    rhs = Counter()
    for i in range(j // 2 + 1):
        d = 2 * j - 4 * i
        for t in range(d + 1):
            rhs[(d - t + 2 * i, t + 2 * i)] += 1
    return lhs, rhs


def verify_lemma(name: str, p: int, q: int, ell: int) -> LemmaResult:
    """Exact check of one of the named identities at (p, q, l)."""
    if p < 1 or q < 0 or ell < 0:
        raise ValueError("need p >= 1, q >= 0, l >= 0")
    params = (p, q, ell)
    j = q + ell
    if name == "phiformel":
        lhs, rhs = pair_to_scalar(p, q, ell), phiformel_rhs(p, q, ell)
        return LemmaResult(name, params, lhs == rhs, _witness(lhs, rhs))
    if name == "phiformel_rescaled":
        lhs = pair_to_scalar(p, q, ell)
        rhs = phiformel_rhs(p, q, ell) * Fraction(1, p ** ell)
        return LemmaResult(name, params, lhs == rhs, _witness(lhs, rhs))
    if name == "decomp":
        lhs = pair_to_scalar(p, q, ell)
        rhs = build_xi(p, q, ell) + raising(1, 1, raising(2, 2, build_psi(p, q, ell)))
        return LemmaResult(name, params, lhs == rhs, _witness(lhs, rhs))
    if name == "decomp_operator":
        # (e1e2)^j - alpha_j = -e1^2 e2^2 * (the sum defining psi), hence the minus sign
        lhs = phiformel_rhs(p, q, ell)
        rhs = build_xi(p, q, ell) - raising(1, 1, raising(2, 2, build_psi(p, q, ell)))
        return LemmaResult(name, params, lhs == rhs, _witness(lhs, rhs))
    if name == "decomp_rescaled":
        lhs = pair_to_scalar(p, q, ell)
        rhs = (build_xi(p, q, ell) - raising(1, 1, raising(2, 2, build_psi(p, q, ell)))) * Fraction(1, p ** ell)
        return LemmaResult(name, params, lhs == rhs, _witness(lhs, rhs))
    if name == "brauer":
        lhs = laplacian_symbol(build_phi_q_ell(p, q, ell))
        if ell < 2:
            ok = not lhs.terms
            return LemmaResult(name, params, ok, "" if ok else "Laplacian of a tensor of degree < 2 is nonzero")
        lower = sl2_raising_symbol(build_phi_q_ell(p, q, ell - 2))
        rhs = lower.map_coefficients(lambda G: G * PiLaurent({-1: Fraction(-ell * (ell - 1), 2)}))
        ok = lhs == rhs
        witness = ""
        if not ok:
            for key in sorted(set(lhs.terms) | set(rhs.terms)):
                a = lhs.terms.get(key, FockPolynomial(p, q, 1))
                b = rhs.terms.get(key, FockPolynomial(p, q, 1))
                if a != b:
                    witness = f"component {key}: {_witness(a, b)}"
                    break
        return LemmaResult(name, params, ok, witness)
    if name == "repsplit_dim":
        dims = sum(2 * j - 4 * i + 1 for i in range(j // 2 + 1))
        lhs, rhs = _repsplit_weights(j)
        ok = dims == (j + 1) * (j + 2) // 2 and lhs == rhs
        return LemmaResult(name, params, ok, "" if ok else f"dimension {dims} vs {(j + 1) * (j + 2) // 2}")
    if name == "alpha_highest_weight":
        a = alpha_vector(j)
        weight_ok = a.weights() == {(j, j)}
        if j % 2 == 0:
            ok = weight_ok and not a.E12() and not a.E21()
            witness = "" if ok else f"E12 alpha = {a.E12()}, E21 alpha = {a.E21()}"
        else:
            # odd j: alpha_j spans the weight-(j, j) line of Sym^2 (x) det^(j-1), not its top
            ok = weight_ok and bool(a.E12()) and not a.E12().E12()
            witness = "" if ok else f"E12 alpha = {a.E12()}"
        return LemmaResult(name, params, ok, witness)
    if name == "xi_vanishing":
        xi = build_xi(p, q, ell)
        expected_zero = p == 1 and j > 1
        ok = xi.is_zero() == expected_zero
        return LemmaResult(name, params, ok, "" if ok else f"xi is {'zero' if xi.is_zero() else 'nonzero'}")
    if name == "weight_check":
        phi = build_phi_q_ell(p, q, ell)
        for (I, s), G in phi.terms.items():
            for mono in G.terms:
                pos, neg = G.degree_split(mono)
                if pos != j or neg != 0 or len(I) != q or len(s) != ell:
                    return LemmaResult(name, params, False, f"component {(I, s)} monomial {G.monomial_str(mono)}")
        return LemmaResult(name, params, bool(phi.terms), "" if phi.terms else "phi is zero")
    if name == "p_to_ell_sum":
        total = Fraction(0)
        for s in product(range(1, p + 1), repeat=ell):
            for t in product(range(1, p + 1), repeat=ell):
                total += _sym_inner_monomials(tuple(sorted(s)), tuple(sorted(t)), p)
        ok = total == p ** ell
        return LemmaResult(name, params, ok, "" if ok else f"sum {total} vs {p ** ell}")
    raise ValueError(f"unknown lemma {name!r}; choose from {', '.join(LEMMAS + EXTRA_CHECKS)}")
