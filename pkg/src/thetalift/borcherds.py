"""Weakly holomorphic level-one inputs and Borcherds product data."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith.series import BivariateQExpansion, QExpansion, mul_dense_int, pow_dense_int
from .lattice import _inverse, rational_diagonalization
from .modforms import _delta_coeffs, _e4_e6_monomial, _euler_function, dim_modular_forms


@dataclass
class WeaklyHolomorphicForm:
    """Scalar form of weight ``weight`` given by a q-expansion with a finite principal part."""

    weight: int
    qexp: QExpansion
    name: str = ""

    @property
    def principal_part(self) -> list[tuple[int, Fraction]]:
        return [(int(n), c) for n, c in self.qexp.items() if n < 0]

    @property
    def c0(self):
        return self.qexp[0]

    def coefficient(self, n) -> Fraction:
        n = Fraction(n)
        v = self.qexp.valuation()
        if v is not None and n < v:
            return 0
        return self.qexp[n]

    def has_integral_principal_part(self) -> bool:
        return all(Fraction(c).denominator == 1 for _, c in self.principal_part)

    def __add__(self, other):
        if self.weight != other.weight:
            raise ValueError("weights differ")
        return WeaklyHolomorphicForm(self.weight, self.qexp + other.qexp, f"{self.name}+{other.name}")

    def __mul__(self, c):
        return WeaklyHolomorphicForm(self.weight, self.qexp * c, f"{c}*{self.name}")

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + (-1) * other


@lru_cache(maxsize=4)
def _inverse_eta24(order: int) -> tuple[int, ...]:
    """prod (1 - q^n)^-24, i.e. q / Delta, to the given order."""
    P = list(_euler_function(order))
    # invert the pentagonal series: partition numbers, integral since P(0) = 1
    inv = [0] * order
    inv[0] = 1
    nz = [(k, c) for k, c in enumerate(P) if c and k]
    for n in range(1, order):
        s = 0
        for k, c in nz:
            if k > n:
                break
            s -= c * inv[n - k]
        inv[n] = s
    return tuple(pow_dense_int(inv, 24, order))


def weakly_holomorphic_basis(w: int, b: int, order: int) -> list[WeaklyHolomorphicForm]:
    """Echelonized forms of weight w with pole order <= b, built as Delta^-b M_{w+12b}.

    ``order`` is the truncation exponent: coefficients of q^n, n < order, are exact.
    """
    if w % 2:
        raise ValueError("weight must be even")
    if b < 0:
        raise ValueError("pole order must be nonnegative")
    k = w + 12 * b
    d = dim_modular_forms(k)
    if d == 0:
        return []
    length = order + b
    D = list(_delta_coeffs(length + 1))[1:]  # Delta / q
    inv = list(_inverse_eta24(length))
    inv_b = pow_dense_int(inv, b, length) if b else [1] + [0] * (length - 1)
    rows = []
    Dj = [1] + [0] * (length - 1)
    for j in range(d):
        # Delta^j E4^a E6^c / Delta^b = q^(j-b) (Delta/q)^j E4^a E6^c (q/Delta)^b
        core = mul_dense_int(Dj, _e4_e6_monomial(k - 12 * j, length), length)
        core = mul_dense_int(core, inv_b, length)
        rows.append([0] * j + core[: length - j])
        Dj = mul_dense_int(Dj, D, length)
    for i in range(d - 1, -1, -1):
        for r in range(i):
            c = rows[r][i]
            if c:
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[i])]
    out = []
    for i, r in enumerate(rows):
        q = QExpansion({n - b: c for n, c in enumerate(r)}, order)
        out.append(WeaklyHolomorphicForm(w, q, f"basis_{i - b}"))
    return out


def form_from_principal_part(w: int, principal: dict[int, int], order: int, c0=None) -> WeaklyHolomorphicForm:
    """The weight-w form with the given principal part (and constant term, if free)."""
    b = max([-n for n in principal if n < 0] + [0])
    basis = weakly_holomorphic_basis(w, b, order)
    by_lead = {int(f.qexp.valuation()): f for f in basis}
    total = QExpansion({}, order)
    targets = {n: c for n, c in principal.items() if n < 0 and c}
    if c0 is not None:
        targets[0] = c0
    for n, c in sorted(targets.items()):
        if n not in by_lead:
            raise ValueError(f"no weight-{w} weakly holomorphic form has leading term q^{n}")
        total = total + by_lead[n].qexp * c
    f = WeaklyHolomorphicForm(w, total)
    got = {n: c for n, c in f.principal_part}
    if got != {n: c for n, c in targets.items() if n < 0}:
        raise ValueError("principal part is not realized by a weakly holomorphic form")
    return f


def named_form(name: str, order: int) -> WeaklyHolomorphicForm:
    """'J' (= j - 744), 'E4^2/Delta', '0', or an integer multiple such as '2J'."""
    text = name.replace(" ", "").replace("*", "")
    if text == "0":
        return WeaklyHolomorphicForm(0, QExpansion({}, None), name)
    mult = 1
    head = 0
    while head < len(text) and (text[head].isdigit() or (head == 0 and text[head] == "-")):
        head += 1
    if head and text[:head] not in ("-",):
        mult = int(text[:head])
        text = text[head:]
    elif text.startswith("-"):
        mult, text = -1, text[1:]
    if text == "J":
        f = form_from_principal_part(0, {-1: 1}, order, c0=0)
    elif text in ("E4^2/Delta", "E4sq/Delta", "E8/Delta"):
        f = form_from_principal_part(-4, {-1: 1}, order)
    else:
        raise ValueError(f"unknown input form {name!r}")
    f = f * mult if mult != 1 else f
    f.name = name
    return f


def borcherds_weight(f: WeaklyHolomorphicForm) -> Fraction:
    """c(0)/2."""
    if not f.has_integral_principal_part():
        raise ValueError("principal part is not integral")
    return Fraction(f.c0) / 2


def borcherds_divisor(f: WeaklyHolomorphicForm) -> list[tuple[tuple, int, int]]:
    """Formal Heegner divisor: (label, n, multiplicity c(n)) for n < 0."""
    if not f.has_integral_principal_part():
        raise ValueError("principal part is not integral")
    return [((), n, int(c)) for n, c in f.principal_part]


# -- product expansions ---------------------------------------------------------------


@dataclass
class HyperbolicSplitting:
    """Cusp data: the Lorentzian lattice K, a chamber vector W and a timelike grading G.

    Monomials are indexed by lambda in K: e((lambda, z)) = prod_i q_i^(lambda_i).
    Positivity of a factor means (lambda, W) > 0; the truncation degree of a
    monomial is (lambda, G).
    """

    K: list[list[int]]
    W: tuple
    G: tuple
    ell: tuple = ()
    ell_prime: tuple = ()

    def __post_init__(self):
        d, _ = rational_diagonalization(self.K)
        if sum(1 for x in d if x > 0) != 1 or any(x == 0 for x in d):
            raise ValueError("K must be Lorentzian of signature (1, rank-1)")
        if self.pair(self.G, self.G) <= 0:
            raise ValueError("the grading vector must be timelike")

    @property
    def rank(self) -> int:
        return len(self.K)

    def pair(self, x, y):
        return sum(x[i] * self.K[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def Q(self, x):
        return Fraction(self.pair(x, x)) / 2

    @property
    def grading(self) -> tuple:
        """Coefficients g with (lambda, G) = sum g_i lambda_i."""
        return tuple(sum(self.K[i][j] * self.G[j] for j in range(self.rank)) for i in range(self.rank))


def split_UU() -> HyperbolicSplitting:
    """U + U split along the first U; K = U with chamber vector (1, 2) and grading (1, 1)."""
    return HyperbolicSplitting(
        K=[[0, 1], [1, 0]], W=(1, 2), G=(1, 1), ell=(1, 0, 0, 0), ell_prime=(0, 1, 0, 0)
    )


@dataclass
class ProductDatum:
    weight_of_product: Fraction
    divisor: list
    weyl_vector: tuple
    expansion: BivariateQExpansion
    factors: list = field(default_factory=list)

    def weyl_check(self, split: HyperbolicSplitting) -> bool:
        """The term of least (., W)-degree is exactly e((rho, z)) with coefficient 1."""
        if not self.expansion.coeffs:
            return False
        key = min(self.expansion.coeffs, key=lambda k: split.pair(k, split.W))
        low = split.pair(key, split.W)
        lows = [k for k in self.expansion.coeffs if split.pair(k, split.W) == low]
        return lows == [tuple(Fraction(x) for x in self.weyl_vector)] and self.expansion.coeffs[lows[0]] == 1


def _lambda_candidates(split: HyperbolicSplitting, max_degree, min_norm):
    """All lambda in K with 0 <= (lambda, G) < max_degree and Q(lambda) >= min_norm.

    Uses the positive definite majorant 2 (lambda, G)^2 / (G, G) - (lambda, lambda).
    """
    r = split.rank
    gg = split.pair(split.G, split.G)
    g = split.grading
    M = [[Fraction(2 * g[i] * g[j], gg) - split.K[i][j] for j in range(r)] for i in range(r)]
    bound = Fraction(2 * max_degree * max_degree, gg) - 2 * min_norm
    inv = _inverse(M)
    box = [math.isqrt(int(math.ceil(bound * inv[i][i]))) + 1 for i in range(r)]
    out = []
    from itertools import product

    for lam in product(*[range(-b, b + 1) for b in box]):
        deg = sum(gi * li for gi, li in zip(g, lam))
        if deg < 0 or deg >= max_degree:
            continue
        if split.Q(lam) < min_norm:
            continue
        out.append(lam)
    return out


def _binomial_series(c: int, max_power: int) -> list[int]:
    """Coefficients of (1 - x)^c up to x^max_power."""
    out = [1]
    coef = 1
    for k in range(1, max_power + 1):
        coef = coef * (c - k + 1) // k  # exact: this is binom(c, k)
        out.append((-1) ** k * coef)
        if c >= 0 and k >= c:
            out.extend([0] * (max_power - k))
            break
    return out[: max_power + 1]


def borcherds_product_expansion(
    split: HyperbolicSplitting, f: WeaklyHolomorphicForm, weyl_vector, order
) -> ProductDatum:
    """e((rho, z)) prod_{(lambda, W) > 0} (1 - e((lambda, z)))^c(Q(lambda)), truncated.

    The expansion is exact for all monomials of degree (lambda, G) < order.
    """
    if weyl_vector is None:
        raise ValueError("a Weyl vector must be supplied")
    if split.rank != 2:
        raise ValueError("product expansions are implemented for rank(K) = 2")
    if not f.has_integral_principal_part():
        raise ValueError("principal part is not integral")
    rho = tuple(Fraction(x) for x in weyl_vector)
    g = split.grading
    rho_deg = sum(gi * ri for gi, ri in zip(g, rho))
    bound = Fraction(order) - rho_deg  # degree budget for the product itself
    v = f.qexp.valuation()
    min_norm = v if v is not None and v < 0 else 0
    factors = []
    for lam in _lambda_candidates(split, bound, min_norm):
        if split.pair(lam, split.W) <= 0:
            continue
        n = split.Q(lam)
        if f.qexp.prec is not None and n >= f.qexp.prec:
            raise ValueError(f"c({n}) is beyond the expansion order of the input form")
        c = f.coefficient(n)
        if not c:
            continue
        if Fraction(c).denominator != 1:
            raise ValueError(f"non-integral exponent c({n}) = {c}")
        factors.append((lam, int(c)))
    factors.sort()
    result = BivariateQExpansion({(0, 0): 1}, g, bound)
    for lam, c in factors:
        deg = sum(gi * li for gi, li in zip(g, lam))
        if deg == 0:
            if c < 0:
                raise ValueError(f"degree-0 factor at {lam} has negative exponent {c}; product is not a power series")
            kmax = c
        else:
            kmax = int(math.ceil(bound / deg))
        coeffs = _binomial_series(c, kmax)
        fac = {(k * lam[0], k * lam[1]): a for k, a in enumerate(coeffs) if a}
        result = result * BivariateQExpansion(fac, g, None if deg == 0 else bound)
    shifted = BivariateQExpansion(
        {(a + rho[0], b + rho[1]): c for (a, b), c in result.coeffs.items()}, g, Fraction(order)
    )
    return ProductDatum(borcherds_weight(f), borcherds_divisor(f), rho, shifted, factors)


def j_difference(order: int) -> BivariateQExpansion:
    """j(tau_1) - j(tau_2) from E4^3 / Delta, for monomials of total degree < order."""
    from .arith.series import series_invert
    from .modforms import delta, eisenstein

    n = order + 2
    e4 = eisenstein(4, n).qexp
    d = delta(n + 1).qexp
    j = (e4 * e4 * e4) * series_invert(d)
    terms = {}
    for k, c in j.items():
        if k < order:
            terms[(k, 0)] = terms.get((k, 0), 0) + c
            terms[(0, k)] = terms.get((0, k), 0) - c
    return BivariateQExpansion(terms, (1, 1), order)


def injectivity_to_surjectivity_note(p: int, witt_r: int | None, report=None, q: int = 2, ell: int = 0) -> str:
    """How an injectivity verdict for the lift feeds the converse theorem in signature (p, 2)."""
    lines = [f"signature: ({p},{q}), ell = {ell}, kappa = {p // 2 + 1 + ell}"]
    if q != 2 or ell != 0:
        return "\n".join(lines + ["status: the converse theorem concerns signature (p,2) with ell = 0 only"])
    pre = p >= 2 and witt_r is not None and p > witt_r
    lines.append(f"converse_theorem_hypotheses: {'satisfied' if pre else 'not certified'} (needs p >= 2 and p > r, r = {witt_r})")
    from .modforms import dim_cusp_forms

    kappa = p // 2 + 1
    if report is not None:
        verdict = report.injectivity_verdict
    elif dim_cusp_forms(kappa) == 0:
        verdict = "injective"
        lines.append(f"note: S_{kappa} is zero, so the lift is injective trivially")
    else:
        verdict = "undetermined"
    lines.append(f"lift_verdict: {verdict}")
    if pre and verdict == "injective":
        lines.append(
            "conclusion: every meromorphic modular form whose divisor is a Heegner divisor is, up to a constant, "
            "the Borcherds lift of a weakly holomorphic input form"
        )
    else:
        lines.append("conclusion: surjectivity of the Borcherds lift is not established by this computation")
    return "\n".join(lines)
