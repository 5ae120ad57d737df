from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from thetalift.arith import (
    BivariateQExpansion,
    Cyclotomic,
    GaussianRational,
    I,
    NumberField,
    PiLaurent,
    PiMultiple,
    QExpansion,
    bernoulli,
    complex_eval,
    euler_phi,
    mul_dense_int,
    pow_dense_int,
    series_invert,
    series_mul,
    sqrt_integer,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


# -- cyclotomic ------------------------------------------------------------------


def test_euler_phi_matches_sympy():
    for n in range(1, 80):
        assert euler_phi(n) == sympy.totient(n)


small_24ths = st.integers(-72, 72).map(lambda k: Fraction(k, 24))


@given(small_24ths, small_24ths)
def test_e_is_a_character(x, y):
    assert Cyclotomic.e(x, 24) * Cyclotomic.e(y, 24) == Cyclotomic.e(x + y, 24)


@given(st.fractions(min_value=0, max_value=1, max_denominator=40))
def test_e_conjugate_and_numeric(x):
    z = Cyclotomic.e(x)
    assert z.conjugate() == Cyclotomic.e(-x, x.denominator)
    assert z * z.conjugate() == 1
    with mpmath.workdps(40):
        assert abs(z.to_complex() - mpmath.expjpi(2 * mpmath.mpf(x.numerator) / x.denominator)) < 1e-30


def test_equality_across_moduli():
    assert Cyclotomic.e(Fraction(1, 4), 4) == Cyclotomic.e(Fraction(3, 12), 24)
    assert Cyclotomic.e(Fraction(1, 2)) == -1
    assert Cyclotomic.e(Fraction(1, 3)) + Cyclotomic.e(Fraction(2, 3)) == -1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 12, 30, 49])
def test_sqrt_integer_squares(n):
    r = sqrt_integer(n)
    assert r * r == n
    with mpmath.workdps(40):
        assert abs(r.to_complex() - mpmath.sqrt(n)) < 1e-30


def test_sqrt_integer_rejects_nonpositive():
    with pytest.raises(ValueError):
        sqrt_integer(0)


@given(st.lists(fractions, min_size=1, max_size=6), st.lists(fractions, min_size=1, max_size=6))
def test_cyclotomic_ring_axioms(a, b):
    x = Cyclotomic(12, (a + [0] * 4)[:4])
    y = Cyclotomic(12, (b + [0] * 4)[:4])
    assert x * y == y * x
    assert (x + y) * y == x * y + y * y
    with mpmath.workdps(40):
        assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-25


# -- numbers -------------------------------------------------------------------------


def test_bernoulli_matches_sympy():
    for k in range(0, 40):
        expected = sympy.bernoulli(k)
        if k == 1:
            expected = sympy.Rational(-1, 2)
        assert bernoulli(k) == Fraction(int(expected.p), int(expected.q))


@given(fractions, fractions, fractions, fractions)
def test_gaussian_rational_field(a, b, c, d):
    x, y = GaussianRational(a, b), GaussianRational(c, d)
    assert x * y == y * x
    if y:
        assert (x / y) * y == x
    assert I * I == -1


def test_pi_laurent_arithmetic():
    pi = PiLaurent({1: 1})
    x = pi * pi - PiLaurent({-1: Fraction(1, 4)})
    assert x * PiLaurent({-2: 1}) == PiLaurent({0: 1, -3: Fraction(-1, 4)})
    assert abs(x.to_complex() - (mpmath.pi ** 2 - 1 / (4 * mpmath.pi))) < 1e-30


def test_pi_multiple_str():
    assert str(PiMultiple(Fraction(1, 64), 1)) == "pi/64"
    assert str(PiMultiple(Fraction(-1, 40), 1)) == "-pi/40"
    assert str(PiMultiple(Fraction(1, 945), 6)) == "pi^6/945"


# -- series -----------------------------------------------------------------------------


def _series(values, prec):
    return QExpansion.from_list(values, prec=prec)


series_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=10)


@given(series_lists, series_lists, series_lists)
def test_series_ring_axioms(a, b, c):
    x, y, z = _series(a, 10), _series(b, 10), _series(c, 10)
    assert series_mul(x, y) == series_mul(y, x)
    assert series_mul(series_mul(x, y), z) == series_mul(x, series_mul(y, z))
    assert series_mul(x, y + z) == series_mul(x, y) + series_mul(x, z)


@given(series_lists)
def test_series_inverse(a):
    a = [1] + a
    x = _series(a, 12)
    inv = series_invert(x)
    assert series_mul(x, inv) == QExpansion({0: 1}, 12)


def test_precision_propagation():
    a = QExpansion({0: 1, 1: 1}, 5)
    b = QExpansion({2: 1}, 7)
    assert series_mul(a, b).prec == 7  # min(5 + 2, 7 + 0)
    with pytest.raises(IndexError):
        series_mul(a, b)[7]


def test_fractional_exponents():
    a = QExpansion({Fraction(1, 3): 1}, 2)
    b = a * a * a
    assert b[1] == 1


@given(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=30), st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=30))
def test_kronecker_product_matches_schoolbook(a, b):
    n = 25
    naive = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n:
                naive[i + j] += x * y
    assert mul_dense_int(a, b, n) == naive


def test_dense_power():
    assert pow_dense_int([1, 1], 5, 6) == [1, 5, 10, 10, 5, 1]


def test_bivariate_product_bound():
    x = BivariateQExpansion({(0, 0): 1, (1, 0): -1}, (1, 1), 4)
    y = BivariateQExpansion({(0, 0): 1, (0, 1): -1}, (1, 1), 4)
    z = x * y
    assert z.coeffs == {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}
    assert z.swap() == z


def test_complex_eval_bound_contains_truth():
    # 1/(1-q) = sum q^n, coefficients bounded by 1
    s = QExpansion.from_list([1] * 60, prec=60)
    with mpmath.workprec(100):
        tau = mpmath.mpc(0.1, 1.2)
        b = complex_eval(s, tau, 64, (1, 0))
        q = mpmath.expjpi(2 * tau)
        assert abs(b.value - 1 / (1 - q)) <= b.error + mpmath.mpf(2) ** -60
    with pytest.raises(ValueError):
        complex_eval(QExpansion.from_list([1] * 3, prec=3), tau, 128, (1, 0))


# -- number fields -----------------------------------------------------------------------


def test_number_field_arithmetic():
    K = NumberField([-2, 0, 1])  # x^2 - 2
    a = K.gen()
    assert a * a == K([2])
    assert (a + 1) * (a + 1).inverse() == K([1])
    assert str(a * 3 - 1) == "-1 + 3*a"
    with mpmath.workdps(40):
        roots = sorted(K.embeddings())
        assert abs(roots[1] - mpmath.sqrt(2)) < 1e-30


@given(st.lists(fractions, min_size=3, max_size=3), st.lists(fractions, min_size=3, max_size=3))
def test_number_field_field_axioms(u, v):
    K = NumberField([1, -3, 0, 1])  # x^3 - 3x + 1, irreducible
    x, y = K(u), K(v)
    assert x * y == y * x
    if y:
        assert (x * y) * y.inverse() == x
