from fractions import Fraction

import mpmath
import pytest

from thetalift.arith import PiMultiple
from thetalift.lfunctions import (
    completed_Psi,
    divisor_count_list,
    mu_constant,
    norm_ratio_report,
    standard_L_euler,
    standard_L_rankin,
    zeta_even_exact,
    zeta_numeric,
    zeta_value,
)
from thetalift.modforms import eigenforms

DELTA = eigenforms(12, 90001)[0]


def test_zeta_exact():
    assert zeta_even_exact(2) == PiMultiple(Fraction(1, 6), 2)
    assert zeta_even_exact(6) == PiMultiple(Fraction(1, 945), 6)
    assert zeta_even_exact(10) == PiMultiple(Fraction(1, 93555), 10)
    with pytest.raises(ValueError):
        zeta_even_exact(3)


@pytest.mark.parametrize("s", [2, 3, 5, Fraction(9, 2), Fraction(5, 2)])
def test_zeta_numeric_bound(s):
    with mpmath.workprec(200):
        z = zeta_numeric(s, 128)
        truth = mpmath.zeta(mpmath.mpf(s.numerator) / s.denominator if isinstance(s, Fraction) else s)
        assert abs(z.value - truth) <= z.bound + mpmath.mpf(2) ** -150


def test_zeta_value_routes_agree():
    with mpmath.workprec(200):
        exact, num = zeta_value(6, 128)
        assert abs(exact.to_mpf() - num.value) <= num.bound + mpmath.mpf(2) ** -150
        exact, num = zeta_value(5, 128)
        assert exact is None


def test_divisor_counts():
    assert divisor_count_list(12) == [0, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]
    assert divisor_count_list(6, square=True) == [0, 1, 3, 3, 5, 3, 9]


def test_delta_at_five_dual_route():
    with mpmath.workprec(160):
        e = standard_L_euler(DELTA, 5, 10 ** 4)
        r1 = standard_L_rankin(DELTA, 5, 300, "c(n^2)")
        r2 = standard_L_rankin(DELTA, 5, 300, "c(n)^2")
        for a, b in [(e, r1), (e, r2), (r1, r2)]:
            assert abs(a.value - b.value) <= a.bound + b.bound
        assert e.value - e.bound > 0
        assert mpmath.nstr(e.value, 12) == "0.975952293248"


def test_euler_bound_shrinks():
    with mpmath.workprec(160):
        a = standard_L_euler(DELTA, 5, 100)
        b = standard_L_euler(DELTA, 5, 1000)
        assert b.bound < a.bound
        assert abs(a.value - b.value) <= a.bound + b.bound


def test_completed_psi_positive():
    with mpmath.workprec(160):
        v = completed_Psi(DELTA, 5)
        assert v.value - v.bound > 0


def test_mu_constant_frozen():
    assert mu_constant(12, 6) == PiMultiple(Fraction(1, 64), 1)
    assert str(mu_constant(12, 6)) == "pi/64"
    assert str(mu_constant(12, 0)) == "-pi/40"


@pytest.mark.parametrize("m", range(2, 31, 2))
@pytest.mark.parametrize("ell", range(0, 7))
def test_mu_constant_sign(m, ell):
    kappa = m // 2 + ell
    if kappa % 2:
        return
    if m + ell < 4:
        # (m + ell)/2 - 1 vanishes
        with pytest.raises(ValueError):
            mu_constant(m, ell)
        return
    mu = mu_constant(m, ell)
    assert mu.power == 1
    assert (mu.coeff > 0) == ((-1) ** (kappa // 2) > 0)


def test_norm_ratio_injective():
    rep = norm_ratio_report(10, 2, 6, DELTA, witt_r=2, prime_bound=10 ** 4)
    assert rep.injectivity_verdict == "injective"
    rows = dict(rep.render())
    assert rows["mu"] == "pi/64 (exact)"
    assert rows["zeta_m_half"] == "pi^6/945 (exact)"


def test_norm_ratio_vanishing():
    rep = norm_ratio_report(1, 9, 7, None)
    assert rep.injectivity_verdict == "vanishes_identically"


def test_norm_ratio_rejects_bad_parameters():
    with pytest.raises(ValueError):
        norm_ratio_report(10, 3, 6, None)
    with pytest.raises(ValueError):
        norm_ratio_report(10, 2, 5, None)
