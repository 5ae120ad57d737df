"""Theta series: exact q-expansions for definite lattices, numeric Siegel theta otherwise."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .arith.series import Bounded, QExpansion, complex_eval
from .lattice import EvenLattice, NegativePlane, enumerate_scaled
from .weilrep import WeilMatrix, rho_S, rho_T


@dataclass
class VectorQExpansion:
    """Components indexed by discriminant-group labels; component h has exponents in Z + q(h)."""

    components: dict[tuple[int, ...], QExpansion]
    weight: Fraction
    representation: str = "rho_L"
    labels: list[tuple[int, ...]] = field(default_factory=list)

    def __getitem__(self, h) -> QExpansion:
        return self.components[tuple(h)]

    def rows(self):
        """(label, exponent, coefficient) triples in label order."""
        for h in self.labels:
            for n, c in self.components[h].items():
                yield h, n, c


def _norm_counts(gram, shift, bound) -> Counter:
    """Counter of x^T gram x / 2 over x in shift + Z^m with that value <= bound."""
    X, den = enumerate_scaled(gram, shift, bound)
    if len(X) == 0:
        return Counter()
    G = np.array(gram, dtype=np.int64)
    vals = np.einsum("ij,jk,ik->i", X, G, X)
    uniq, counts = np.unique(vals, return_counts=True)
    scale = 2 * den * den
    return Counter({Fraction(int(v), scale): int(c) for v, c in zip(uniq, counts)})


def theta_definite(L: EvenLattice, order) -> VectorQExpansion:
    """Component h counts the x in L + h with Q(x) = n, for every n < order."""
    if not L.is_positive_definite():
        raise ValueError("theta_definite needs a positive definite lattice")
    order = Fraction(order)
    A = L.discriminant_form
    comps = {}
    for h in A.labels:
        counts = _norm_counts(L.gram, A.representative(h), order)
        comps[h] = QExpansion({n: c for n, c in counts.items() if n < order}, order)
    return VectorQExpansion(comps, Fraction(L.rank, 2), "rho_L", list(A.labels))


def theta_coefficient_growth(L: EvenLattice) -> tuple[float, float]:
    """(C, k) with #{x in L + h : Q(x) <= n} <= C n^k for n >= 1 (box count)."""
    Ginv = L.gram_inverse
    C = 1.0
    for i in range(L.rank):
        C *= 2 * math.sqrt(2 * float(Ginv[i][i])) + 1
    return C * (1 + 1e-12), L.rank / 2


def theta_definite_numeric(L: EvenLattice, order, tau, precision_bits: int = 128) -> list[Bounded]:
    """complex_eval of every component of theta_definite, with rigorous tail bounds."""
    th = theta_definite(L, order)
    growth = theta_coefficient_growth(L)
    return [complex_eval(th[h], tau, precision_bits, growth) for h in th.labels]


# -- Siegel theta -----------------------------------------------------------------


def _box_count(ginv_diag, t) -> mpmath.mpf:
    out = mpmath.mpf(1)
    for g in ginv_diag:
        out *= 2 * mpmath.sqrt(2 * t * g) + 1
    return out


def _siegel_tail(ginv_diag, R, v) -> mpmath.mpf:
    """Bound for sum over x with Q_z(x) > R of exp(-2 pi v Q_z(x)), via unit shells."""
    a = 2 * mpmath.pi * v
    total = mpmath.mpf(0)
    k = 0
    while True:
        term = _box_count(ginv_diag, R + k + 1) * mpmath.exp(-a * (R + k))
        nxt = _box_count(ginv_diag, R + k + 2) * mpmath.exp(-a * (R + k + 1))
        ratio = nxt / term
        total += term
        if ratio <= 0.5:
            return total + nxt / (1 - ratio)
        k += 1
        if k > 10 ** 5:
            raise ValueError("Siegel theta tail bound did not converge")


def siegel_theta_numeric(
    L: EvenLattice, z: NegativePlane, tau, precision_bits: int = 128
) -> list[Bounded]:
    """v^(q/2) sum_{x in L+h} e(tau Q(x_+) + conj(tau) Q(x_-)) for every label h.

    The sum runs over the majorant ball Q_z(x) <= R with R grown until the
    shell-count tail bound drops below 2^-precision_bits.
    """
    if z.lattice != L:
        raise ValueError("plane belongs to a different lattice")
    if z.dim != L.signature.q:
        raise ValueError("z must be a maximal negative definite subspace")
    A = L.discriminant_form
    Gz = z.majorant_gram
    den = 1
    for row in Gz:
        for g in row:
            den = den * g.denominator // math.gcd(den, g.denominator)
    from .lattice import _inverse

    ginv = _inverse(Gz)
    with mpmath.workprec(precision_bits + 30):
        tau = mpmath.mpc(tau)
        u, v = tau.real, tau.imag
        if v <= 0:
            raise ValueError("tau must lie in the upper half plane")
        ginv_diag = [mpmath.mpf(ginv[i][i].numerator) / ginv[i][i].denominator for i in range(L.rank)]
        target = mpmath.mpf(2) ** (-precision_bits)
        R = max(1, int(precision_bits * math.log(2) / (2 * math.pi * float(v))) + 1)
        while _siegel_tail(ginv_diag, R, v) > target:
            R += max(1, R // 4)
        tail = _siegel_tail(ginv_diag, R, v)
        prefactor = v ** (mpmath.mpf(z.dim) / 2)
        out = []
        for h in A.labels:
            shift = A.representative(h)
            X, d = enumerate_scaled(Gz, shift, Fraction(R))
            groups: Counter = Counter()
            G = L.gram
            for row in X:
                x = [Fraction(int(c), d) for c in row]
                qz = sum(x[i] * Gz[i][j] * x[j] for i in range(L.rank) for j in range(L.rank)) / 2
                if qz > R:
                    continue
                groups[(L.Q(x), qz)] += 1
            total = mpmath.mpc(0)
            for (q, qz), c in sorted(groups.items()):
                total += c * mpmath.expjpi(2 * u * mpmath.mpf(q.numerator) / q.denominator) * mpmath.exp(
                    -2 * mpmath.pi * v * mpmath.mpf(qz.numerator) / qz.denominator
                )
            out.append(Bounded(prefactor * total, prefactor * tail))
        return out


def _automorphy(L: EvenLattice, gamma: str, tau):
    p, q = L.signature
    if (p - q) % 2:
        raise ValueError("odd p - q needs the metaplectic group, which is not supported")
    if gamma == "S":
        return mpmath.mpc(tau) ** ((p - q) // 2)
    return mpmath.mpc(1)


def _gamma_tau(gamma: str, tau):
    tau = mpmath.mpc(tau)
    if gamma == "S":
        return -1 / tau
    if gamma == "T":
        return tau + 1
    raise ValueError("gamma must be 'S' or 'T'")


def modularity_residual(
    values_gamma_tau: list[Bounded],
    values_tau: list[Bounded],
    factor,
    rho_matrix: WeilMatrix,
) -> Bounded:
    """max_h |Theta(gamma tau) - factor * (rho(gamma) Theta(tau))_h|, with a bound on its own error."""
    R = rho_matrix.numeric()
    worst = mpmath.mpf(0)
    err = mpmath.mpf(0)
    for i, lhs in enumerate(values_gamma_tau):
        rhs = mpmath.mpc(0)
        e = lhs.error
        for j, val in enumerate(values_tau):
            rhs += R[i][j] * val.value
            e += abs(factor) * abs(R[i][j]) * val.error
        worst = max(worst, abs(lhs.value - factor * rhs))
        err = max(err, e)
    return Bounded(worst, err)


def check_modularity(
    L: EvenLattice, z: NegativePlane, gamma: str, tau, precision_bits: int = 128
) -> Bounded:
    """Residual of Theta(gamma tau) = phi_gamma(tau) rho(gamma) Theta(tau) for gamma in {S, T}."""
    with mpmath.workprec(precision_bits + 30):
        A = L.discriminant_form
        lhs = siegel_theta_numeric(L, z, _gamma_tau(gamma, tau), precision_bits)
        rhs = siegel_theta_numeric(L, z, tau, precision_bits)
        rho_matrix = rho_S(A) if gamma == "S" else rho_T(A)
        return modularity_residual(lhs, rhs, _automorphy(L, gamma, tau), rho_matrix)
