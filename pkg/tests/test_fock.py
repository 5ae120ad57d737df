from fractions import Fraction
import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetalift.arith import PiLaurent
from thetalift.fock import (
    C_IOTA,
    EXTRA_CHECKS,
    LEMMAS,
    FockPolynomial,
    alpha_vector,
    build_phi_KM,
    build_phi_q_ell,
    build_xi,
    harmonic_project,
    hodge_star_basis,
    laplacian_symbol,
    pair_to_scalar,
    r_squared_times,
    raising,
    sym_inner,
    sym_laplacian,
    sym_monomials,
    to_schrodinger,
    verify_lemma,
    wedge,
)

GRID = [(p, q, ell) for p in (1, 2, 3) for q in (0, 1, 2) for ell in range(4)]


def _S(p, q):
    """sum_alpha z_{alpha 1} z_{alpha 2}."""
    out = FockPolynomial(p, q, 2)
    for a in range(1, p + 1):
        out = out + FockPolynomial.variable(p, q, 2, a, 1) * FockPolynomial.variable(p, q, 2, a, 2)
    return out


def test_phi_KM_smallest_case():
    phi = build_phi_KM(1, 1)
    assert phi.sqrt2_exponent == -1
    assert list(phi.terms) == [((0,), ())]
    assert phi.terms[((0,), ())] == FockPolynomial.variable(1, 1, 1, 1, 1, C_IOTA)


def test_raising_constant_term_without_positive_variables():
    P = FockPolynomial.variable(0, 1, 2, 1, 1) * FockPolynomial.variable(0, 1, 2, 1, 2)
    assert raising(1, 2, P) == FockPolynomial.constant(0, 1, 2, PiLaurent({1: -2}))


def test_raising_on_vacuum():
    R = raising(1, 2, FockPolynomial.constant(2, 1, 2))
    assert R == _S(2, 1) * PiLaurent({-1: Fraction(1, 8)})


def test_sym_inner_examples():
    assert sym_inner({(1,): 1}, {(1,): 1}, 2) == 1
    assert sym_inner({(1, 2): 1}, {(1, 2): 1}, 2) == Fraction(1, 2)
    assert sym_inner({(3,): 1}, {(3,): 1}, 2) == -1
    assert sym_inner({(1, 1): 1}, {(1, 1): 1}, 2) == 1
    with pytest.raises(ValueError):
        sym_inner({(1,): 1}, {(1, 2): 1}, 2)


def _tensor(coeffs, m, degree):
    mons = sym_monomials(m, degree)
    return {s: Fraction(c) for s, c in zip(mons, coeffs) if c}


@given(st.lists(st.integers(-5, 5), min_size=35, max_size=35), st.lists(st.integers(-5, 5), min_size=15, max_size=15), st.integers(1, 4))
def test_laplacian_r2_adjoint(a, b, p):
    # signature (p, 5 - p), u in Sym^4, w in Sym^2
    m, ell = 5, 4
    u = _tensor(a, m, ell)
    w = _tensor(b, m, ell - 2)
    lhs = sym_inner(sym_laplacian(u, p, m), w, p)
    rhs = ell * (ell - 1) * sym_inner(u, r_squared_times(w, p, m), p)
    assert lhs == rhs


@given(st.integers(1, 3), st.integers(0, 2), st.data())
def test_hodge_star_involution(p, q, data):
    N = p * q
    k = data.draw(st.integers(0, N))
    I = tuple(sorted(data.draw(st.sets(st.integers(0, max(N - 1, 0)), min_size=k, max_size=k)))) if N else ()
    s1, J = hodge_star_basis(I, N)
    s2, K = hodge_star_basis(J, N)
    assert K == I
    assert s1 * s2 == (-1) ** (len(I) * (N - len(I)))
    sign, full = wedge(I, J)
    assert sign * s1 == 1 and full == tuple(range(N))


@pytest.mark.parametrize("p,q,ell", [(2, 0, 2), (2, 1, 3), (3, 1, 2), (1, 2, 3)])
def test_harmonic_projection(p, q, ell):
    phi = build_phi_q_ell(p, q, ell)
    h = harmonic_project(phi)
    assert not laplacian_symbol(h).terms
    assert harmonic_project(h) == h


def test_pairing_trivial_case():
    assert pair_to_scalar(2, 0, 0) == FockPolynomial.constant(2, 0, 2)


@pytest.mark.parametrize("p,q,ell", GRID)
def test_pairing_closed_form(p, q, ell):
    # phi_{q,l} paired with itself is 2^(-q-2l) c^(2(q+l)) S^(q+l), with no p-dependent constant
    j = q + ell
    expected = _S(p, q) ** j * (C_IOTA ** (2 * j) * Fraction(1, 2 ** (q + 2 * ell)))
    assert pair_to_scalar(p, q, ell) == expected


@pytest.mark.parametrize("p,q,ell", [(2, 0, 1), (3, 1, 1), (2, 2, 2), (3, 2, 3)])
def test_closed_form_with_p_power_overcounts(p, q, ell):
    """The closed formula carrying the factor p^l is off by exactly that factor once p, l >= 1."""
    res = verify_lemma("phiformel", p, q, ell)
    assert not res.passed and "monomial" in res.witness
    assert verify_lemma("phiformel_rescaled", p, q, ell).passed


@pytest.mark.parametrize("name", EXTRA_CHECKS)
@pytest.mark.parametrize("p,q,ell", GRID)
def test_corrected_identities(name, p, q, ell):
    assert verify_lemma(name, p, q, ell).passed


@pytest.mark.parametrize("p", [2, 3, 4])
def test_signature_p2_example(p):
    """phi_{2,0} = 4 sum_a (x_a1^2 - 1/4pi)(x_a2^2 - 1/4pi) + 4 sum_{a != b} x_a1 x_b1 x_a2 x_b2."""
    got = to_schrodinger(pair_to_scalar(p, 2, 0))
    n, m = 2, p + 2
    quarter = PiLaurent({-1: Fraction(1, 4)})
    expected: dict = {}

    def add(key, c):
        expected[key] = expected.get(key, PiLaurent()) + c

    def idx(a, i):
        return (a - 1) * n + (i - 1)

    for a in range(1, p + 1):
        for e1, c1 in ((2, PiLaurent.coerce(1)), (0, -quarter)):
            for e2, c2 in ((2, PiLaurent.coerce(1)), (0, -quarter)):
                key = [0] * (m * n)
                key[idx(a, 1)] += e1
                key[idx(a, 2)] += e2
                add(tuple(key), c1 * c2 * 4)
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            if a != b:
                key = [0] * (m * n)
                for v in (idx(a, 1), idx(b, 1), idx(a, 2), idx(b, 2)):
                    key[v] += 1
                add(tuple(key), PiLaurent.coerce(4))
    expected = {k: v for k, v in expected.items() if v}
    assert got == expected


def test_alpha_vector_examples():
    assert str(alpha_vector(0)) == "1*1"
    assert alpha_vector(2).terms == {(0, 2, 0): 1, (1, 0, 1): -1}
    assert alpha_vector(3).terms == {(0, 3, 0): 1, (1, 1, 1): -1}
    a4 = alpha_vector(4)
    assert a4 == alpha_vector(2) ** 2


def test_xi_vanishing_examples():
    assert build_xi(1, 2, 0).is_zero()
    assert not build_xi(2, 2, 0).is_zero()
    assert not build_xi(1, 1, 0).is_zero()


def test_brauer_example():
    assert verify_lemma("brauer", 2, 1, 2).passed
    assert verify_lemma("brauer", 3, 0, 3).passed


@pytest.mark.parametrize("name", [n for n in LEMMAS if n not in ("phiformel", "decomp")])
@pytest.mark.parametrize("p,q,ell", GRID)
def test_lemmas_on_grid(name, p, q, ell):
    res = verify_lemma(name, p, q, ell)
    assert res.passed, res.witness


def test_phiformel_example_point():
    assert verify_lemma("phiformel", 2, 2, 0).passed


def test_decomp_example_point_reports_witness():
    res = verify_lemma("decomp", 2, 1, 1)
    assert not res.passed
    assert res.witness.startswith("monomial")


def test_unknown_lemma():
    with pytest.raises(ValueError):
        verify_lemma("nonsense", 1, 1, 1)
    with pytest.raises(ValueError):
        verify_lemma("brauer", 0, 1, 1)


def test_symbols_have_expected_shape():
    phi = build_phi_q_ell(3, 2, 2)
    assert phi.exterior_degrees() == {2}
    assert phi.sym_degree() == {2}
    # each exterior monomial pairs distinct negative indices
    for I, _ in phi.terms:
        assert len(set(I)) == len(I)
