"""zeta values, the standard L-function D_f(s) by two routes, and the norm-ratio report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import mpmath

from .arith.numbers import PiMultiple, bernoulli
from .modforms import HeckeEigenform, primes_up_to


@dataclass
class LValue:
    """A numeric value with a rigorous absolute error bound."""

    value: Any
    bound: Any
    method: str
    params: dict = field(default_factory=dict)

    def interval(self):
        return self.value - self.bound, self.value + self.bound


def _mp(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


# -- zeta -----------------------------------------------------------------------------


def zeta_even_exact(n: int) -> PiMultiple:
    """zeta(2k) = (-1)^(k+1) B_{2k} (2 pi)^(2k) / (2 (2k)!)."""
    if n < 2 or n % 2:
        raise ValueError("zeta_even_exact needs an even argument >= 2")
    k = n // 2
    c = (-1) ** (k + 1) * bernoulli(n) * Fraction(2) ** n / (2 * math.factorial(n))
    return PiMultiple(c, n)


def zeta_numeric(s, precision_bits: int = 128) -> LValue:
    """Euler-Maclaurin with N terms and J correction terms.

    For real s > 1 the remainder is bounded by the absolute value of the first
    omitted correction term.
    """
    with mpmath.workprec(precision_bits + 30):
        s = _mp(s) if not isinstance(s, mpmath.mpf) else s
        if s <= 1:
            raise ValueError("zeta_numeric needs s > 1")
        N = max(10, precision_bits // 4)
        N_ = mpmath.mpf(N)
        total = mpmath.fsum(mpmath.mpf(n) ** (-s) for n in range(1, N))
        total += N_ ** (1 - s) / (s - 1) + N_ ** (-s) / 2
        target = mpmath.mpf(2) ** (-precision_bits - 4)
        rising = s  # s (s+1) ... (s+2j-2)
        j = 1
        while True:
            term = _mp(bernoulli(2 * j)) / math.factorial(2 * j) * rising * N_ ** (-s - 2 * j + 1)
            nxt_rising = rising * (s + 2 * j - 1) * (s + 2 * j)
            nxt = abs(_mp(bernoulli(2 * j + 2)) / math.factorial(2 * j + 2) * nxt_rising * N_ ** (-s - 2 * j - 1))
            total += term
            if nxt < target or j > 200:
                break
            rising = nxt_rising
            j += 1
        rounding = abs(total) * mpmath.mpf(2) ** (-precision_bits - 20)
        return LValue(+total, nxt + rounding, "euler-maclaurin", {"s": s, "N": N, "J": j})


def zeta_value(n: int, precision_bits: int = 128) -> tuple[Any, LValue]:
    """(exact PiMultiple or None, numeric LValue) for an integer argument n >= 2."""
    if n % 2 == 0:
        exact = zeta_even_exact(n)
        with mpmath.workprec(precision_bits + 30):
            return exact, LValue(exact.to_mpf(), mpmath.mpf(2) ** (-precision_bits - 20), "exact", {"s": n})
    return None, zeta_numeric(n, precision_bits)


# -- standard L-function -----------------------------------------------------------------


def _eigen_numeric(f: HeckeEigenform, embedding: int, order: int, dps: int):
    if f.is_rational():
        return [_mp(c) for c in f.integer_coefficients(order)]
    roots = f.real_embeddings(dps)
    if embedding >= len(roots):
        raise ValueError(f"eigenform has only {len(roots)} real embeddings")
    return f.numeric_coefficients(roots[embedding], order)


def _exact_cp_squared(f: HeckeEigenform, p: int, embedding: int, dps: int):
    c = f.c(p)
    if c.is_rational():
        return _mp(c.to_fraction() ** 2)
    roots = f.real_embeddings(dps)
    return (c * c).embed(roots[embedding])


def standard_L_euler(
    f: HeckeEigenform, s, prime_bound: int, precision_bits: int = 128, embedding: int = 0
) -> LValue:
    """prod_{p <= P} [(1 - p^-s)(1 - 2 Re(alpha_1) p^-s + p^-2s)]^-1 with a bound for the rest.

    2 Re(alpha_1) = c(p)^2 / p^(k-1) - 2. Each omitted factor has
    |log| <= 3 sum_k p^(-ks)/k, giving |log(D/partial)| <= 3/(1 - P0^-s) * P^(1-s)/(s-1).
    """
    with mpmath.workprec(precision_bits + 40):
        s = _mp(s)
        if s <= 1:
            raise ValueError("the Euler product converges only for s > 1")
        primes = primes_up_to(prime_bound)
        if primes and primes[-1] >= f.order:
            raise ValueError(f"need c(p) for p <= {prime_bound}; eigenform order is {f.order}")
        dps = int(precision_bits * 0.31) + 20
        k1 = f.weight - 1
        log_total = mpmath.mpf(0)
        for p in primes:
            x = mpmath.mpf(p) ** (-s)
            two_re = _exact_cp_squared(f, p, embedding, dps) / mpmath.mpf(p) ** k1 - 2
            local = (1 - x) * (1 - two_re * x + x * x)
            if local <= 0:
                raise ArithmeticError(f"non-positive local factor at p={p}")
            log_total -= mpmath.log(local)
        value = mpmath.exp(log_total)
        P = max(prime_bound, 1)
        P0 = max(prime_bound, 2)
        delta = 3 / (1 - mpmath.mpf(P0) ** (-s)) * mpmath.mpf(P) ** (1 - s) / (s - 1)
        bound = value * (mpmath.exp(delta) - 1) + value * mpmath.mpf(2) ** (-precision_bits)
        return LValue(value, bound, "euler-product", {"s": s, "P": prime_bound, "primes": len(primes)})


def divisor_count_list(n: int, square: bool = False) -> list[int]:
    """d(k) (or d(k^2) when square) for 0 <= k <= n; entry 0 is 0."""
    spf = list(range(n + 1))
    for i in range(2, int(n ** 0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    out = [0] * (n + 1)
    if n >= 1:
        out[1] = 1
    for k in range(2, n + 1):
        p = spf[k]
        m, e = k, 0
        while m % p == 0:
            m //= p
            e += 1
        out[k] = out[m] * ((2 * e + 1) if square else (e + 1))
    return out


def standard_L_rankin(
    f: HeckeEigenform,
    s,
    n_max: int,
    route: str = "c(n^2)",
    precision_bits: int = 128,
    embedding: int = 0,
) -> LValue:
    """D_f(s) = zeta(2s) sum c(n^2) n^(1-s-k) = zeta(2s)/zeta(s) sum c(n)^2 n^(1-s-k).

    The tail uses |c(n)| <= d(n) n^((k-1)/2) together with the exact Dirichlet
    series sum d(n^2) n^-s = zeta(s)^3/zeta(2s) and sum d(n)^2 n^-s = zeta(s)^4/zeta(2s),
    so the omitted part is bounded by the full series minus its computed head.
    """
    if route not in ("c(n^2)", "c(n)^2"):
        raise ValueError("route must be 'c(n^2)' or 'c(n)^2'")
    with mpmath.workprec(precision_bits + 40):
        s = _mp(s)
        if s <= 1:
            raise ValueError("the Rankin series converges only for s > 1")
        need = n_max * n_max + 1 if route == "c(n^2)" else n_max + 1
        if f.order < need:
            raise ValueError(f"need {need} coefficients, eigenform has {f.order}")
        dps = int(precision_bits * 0.31) + 20
        z_s = zeta_numeric(s, precision_bits + 20)
        z_2s = zeta_numeric(2 * s, precision_bits + 20)
        k1 = f.weight - 1
        if route == "c(n^2)":
            c = _eigen_numeric(f, embedding, need, dps)
            terms = [c[n * n] * mpmath.mpf(n) ** (-s - k1) for n in range(1, n_max + 1)]
            d = divisor_count_list(n_max, square=True)
            head = mpmath.fsum(mpmath.mpf(d[n]) * mpmath.mpf(n) ** (-s) for n in range(1, n_max + 1))
            full = z_s.value ** 3 / z_2s.value
            factor = z_2s.value
        else:
            c = _eigen_numeric(f, embedding, need, dps)
            terms = [c[n] ** 2 * mpmath.mpf(n) ** (-s - k1) for n in range(1, n_max + 1)]
            d = divisor_count_list(n_max)
            head = mpmath.fsum(mpmath.mpf(d[n]) ** 2 * mpmath.mpf(n) ** (-s) for n in range(1, n_max + 1))
            full = z_s.value ** 4 / z_2s.value
            factor = z_2s.value / z_s.value
        partial = mpmath.fsum(terms)
        value = factor * partial
        # tail of the majorant series; zeta errors enter through |d full| and |d factor|
        rel_z = 8 * (z_s.bound / z_s.value + z_2s.bound / z_2s.value)
        tail = max(full - head, 0) + full * rel_z
        bound = abs(factor) * tail * (1 + rel_z) + abs(value) * (rel_z + mpmath.mpf(2) ** (-precision_bits))
        return LValue(value, bound, f"rankin-{route}", {"s": s, "Nmax": n_max})


def _gamma_exact_or_numeric(x: Fraction):
    """Gamma at integers and half-integers by recursion from Gamma(1)=1, Gamma(1/2)=sqrt(pi)."""
    if x.denominator == 1 and x > 0:
        return mpmath.mpf(math.factorial(int(x) - 1))
    if x.denominator == 2 and x > 0:
        n = int(x - Fraction(1, 2))
        return mpmath.mpf(math.factorial(2 * n)) / (mpmath.mpf(4) ** n * math.factorial(n)) * mpmath.sqrt(mpmath.pi)
    return mpmath.gamma(_mp(x))


def completed_Psi(f: HeckeEigenform, s, precision_bits: int = 128, prime_bound: int = 2000) -> LValue:
    """pi^(-3s/2) Gamma((s+1)/2) Gamma((s+k-1)/2) Gamma((s+k)/2) D_f(s) for s > 1."""
    s = Fraction(s) if not isinstance(s, float) else Fraction(s).limit_denominator(10 ** 12)
    if s <= 1:
        raise ValueError("completed_Psi is only implemented for s > 1")
    with mpmath.workprec(precision_bits + 40):
        k = f.weight
        g = (
            _gamma_exact_or_numeric((s + 1) / 2)
            * _gamma_exact_or_numeric((s + k - 1) / 2)
            * _gamma_exact_or_numeric((s + k) / 2)
        )
        pref = mpmath.pi ** (-3 * _mp(s) / 2) * g
        D = standard_L_euler(f, s, prime_bound, precision_bits)
        return LValue(pref * D.value, pref * D.bound * (1 + mpmath.mpf(2) ** (-precision_bits)), "completed", {"s": s})


# -- archimedean constant and the report ---------------------------------------------------


def mu_constant(m: int, ell: int, q: int | None = None) -> PiMultiple:
    """2^(3 - m/2) (-1)^(kappa/2) pi / ((m + ell)/2 - 1), kappa = m/2 + ell."""
    if m % 2:
        raise ValueError("m must be even")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if q is not None and (q + ell) % 2:
        raise ValueError("q + ell must be even")
    kappa = m // 2 + ell
    if kappa % 2:
        raise ValueError("kappa = m/2 + ell must be even")
    if m + ell < 4:
        raise ValueError("need m + ell >= 4")
    x = Fraction(m + ell, 2)
    sign = -1 if (kappa // 2) % 2 else 1
    return PiMultiple(Fraction(2) ** (3 - m // 2) * sign / (x - 1), 1)


@dataclass
class NormRatioReport:
    p: int
    q: int
    ell: int
    m: int
    kappa: int
    s0: Fraction
    mu_exact: PiMultiple | None
    L_value: LValue | None
    zeta_m_half: tuple
    zeta_m_minus_2: tuple
    ratio_sans_C: LValue | None
    convergence_ok: Any
    injectivity_verdict: str
    notes: list[str] = field(default_factory=list)

    def render(self) -> list[tuple[str, str]]:
        def num(x):
            return mpmath.nstr(x, 25) if x is not None else "n/a"

        def zeta_str(z):
            exact, numeric = z
            if numeric is None:
                return "n/a"
            if exact is not None:
                return f"{exact} (exact)"
            return f"{num(numeric.value)} (bounded-numeric, bound {mpmath.nstr(numeric.bound, 3)})"

        rows = [
            ("p", str(self.p)),
            ("q", str(self.q)),
            ("ell", str(self.ell)),
            ("m", str(self.m)),
            ("kappa", str(self.kappa)),
            ("s0", str(self.s0)),
            ("L_point", str(Fraction(self.m, 2) - 1)),
            ("mu", f"{self.mu_exact} (exact)" if self.mu_exact is not None else "n/a"),
        ]
        if self.L_value is not None:
            rows.append(("L_value", f"{num(self.L_value.value)} (bounded-numeric, {self.L_value.method})"))
            rows.append(("L_value_bound", mpmath.nstr(self.L_value.bound, 3)))
        else:
            rows.append(("L_value", "n/a"))
        rows.append(("zeta_m_half", zeta_str(self.zeta_m_half)))
        rows.append(("zeta_m_minus_2", zeta_str(self.zeta_m_minus_2)))
        if self.ratio_sans_C is not None:
            rows.append(("ratio_sans_C", f"{num(self.ratio_sans_C.value)} (bounded-numeric)"))
            rows.append(("ratio_sans_C_bound", mpmath.nstr(self.ratio_sans_C.bound, 3)))
        else:
            rows.append(("ratio_sans_C", "n/a"))
        rows.append(("C_s0", "symbolic (not explicit)"))
        rows.append(("convergence_ok", str(self.convergence_ok).lower()))
        rows.append(("verdict", self.injectivity_verdict))
        for i, n in enumerate(self.notes):
            rows.append((f"note_{i + 1}", n))
        return rows


def norm_ratio_report(
    p: int,
    q: int,
    ell: int,
    f: HeckeEigenform | None,
    witt_r: int | None = None,
    precision_bits: int = 128,
    prime_bound: int = 10 ** 4,
    embedding: int = 0,
) -> NormRatioReport:
    """Right-hand side of the norm-ratio formula, up to the non-explicit factor C(s0) and the volume."""
    m = p + q
    if (p - q) % 8:
        raise ValueError("an even unimodular lattice needs p - q divisible by 8")
    if (q + ell) % 2:
        raise ValueError("q + ell must be even")
    kappa = m // 2 + ell
    if f is not None and f.weight != kappa:
        raise ValueError(f"eigenform weight {f.weight} does not match kappa = {kappa}")
    s0 = Fraction(m - 3, 2)
    notes = []
    vanishes = p == 1 and q + ell > 1
    try:
        mu = mu_constant(m, ell, q)
    except ValueError as exc:
        mu = None
        notes.append(f"mu unavailable: {exc}")

    r_cert = witt_r if witt_r is not None else None
    if witt_r is not None:
        convergence = m > 3 + witt_r
    elif m > 3 + min(p, q):
        convergence = True  # r <= min(p, q)
    else:
        convergence = "unknown"

    L_value = ratio = None
    z_half = z_m2 = (None, None)
    s_L = Fraction(m, 2) - 1
    with mpmath.workprec(precision_bits + 40):
        if m // 2 >= 2:
            z_half = zeta_value(m // 2, precision_bits)
        if m - 2 >= 2:
            z_m2 = zeta_value(m - 2, precision_bits)
        if f is not None and s_L > 1 and not vanishes:
            L_value = standard_L_euler(f, s_L, prime_bound, precision_bits, embedding)
            if mu is not None and z_half[1] is not None and z_m2[1] is not None:
                a, b = z_half[1], z_m2[1]
                den = a.value * b.value
                val = mu.to_mpf() * L_value.value / den
                rel = L_value.bound / L_value.value + 2 * (a.bound / a.value + b.bound / b.value)
                ratio = LValue(val, abs(val) * rel * 2, "product", {})
        elif f is not None and s_L <= 1:
            notes.append("L-point m/2 - 1 lies outside the region of absolute convergence")

    if vanishes:
        verdict = "vanishes_identically"
    elif (
        convergence is True
        and m > 4
        and p > 1
        and L_value is not None
        and L_value.value - L_value.bound > 0
    ):
        verdict = "injective"
    else:
        verdict = "undetermined"
    if r_cert is None and convergence == "unknown":
        notes.append("Witt index unknown; convergence criterion unverified")
    return NormRatioReport(
        p, q, ell, m, kappa, s0, mu, L_value, z_half, z_m2, ratio, convergence, verdict, notes
    )
