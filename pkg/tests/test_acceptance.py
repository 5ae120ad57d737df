"""Acceptance criteria 1-10, one PASS/FAIL line each (also runnable as a script)."""

import time
from fractions import Fraction

import mpmath
import pytest
import sympy

RESULTS: dict[int, str] = {}

CORPUS = ["U", "UU", "A2", "E8", "diag(2,-2)", "A2+U"]
GRID = [(p, q, ell) for p in (1, 2, 3) for q in (0, 1, 2) for ell in range(4)]


def record(n: int, ok: bool, title: str, detail: str, seconds: float) -> None:
    line = f"AC{n:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail} [{seconds:.2f}s]"
    RESULTS[n] = line
    print(line)


def test_ac01_weil_relations():
    from thetalift.lattice import named_lattice
    from thetalift.weilrep import verify_relations

    t = time.perf_counter()
    bad = []
    for name in CORPUS:
        rel = verify_relations(named_lattice(name).discriminant_form)
        bad += [f"{name}: {k}" for k, ok in rel.items() if not ok]
    dt = time.perf_counter() - t
    ok = not bad and dt < 10
    record(1, ok, "Weil relations", "; ".join(bad) or f"all relations exact on {len(CORPUS)} lattices", dt)
    assert ok


def test_ac02_milgram():
    from thetalift.lattice import named_lattice
    from thetalift.weilrep import milgram_check

    t = time.perf_counter()
    bad = [name for name in CORPUS if not milgram_check(named_lattice(name).discriminant_form)]
    dt = time.perf_counter() - t
    record(2, not bad, "Milgram", ", ".join(bad) or "Gauss sum matches signature on the corpus", dt)
    assert not bad


def test_ac03_theta_e8():
    from thetalift.lattice import named_lattice
    from thetalift.modforms import eisenstein
    from thetalift.thetaseries import theta_definite

    t = time.perf_counter()
    th = theta_definite(named_lattice("E8"), 11)[()]
    e4 = eisenstein(4, 11)
    lhs = [th[n] for n in range(11)]
    rhs = [e4[n] for n in range(11)]
    independent = [1] + [240 * int(sympy.divisor_sigma(n, 3)) for n in range(1, 11)]
    dt = time.perf_counter() - t
    ok = lhs == rhs == independent and dt < 30
    record(3, ok, "E8 theta = E4", f"n <= 10: {lhs[:6]}...", dt)
    assert ok


def test_ac04_siegel_modularity():
    from thetalift.lattice import NegativePlane, named_lattice
    from thetalift.thetaseries import check_modularity

    t = time.perf_counter()
    L = named_lattice("diag(2,-2)")
    z = NegativePlane(L, [[1, 2]])
    taus = [mpmath.mpc(0.1, 1.1), mpmath.mpc(-0.3, 0.8), mpmath.mpc(0.25, 1.5)]
    res = [check_modularity(L, z, "S", tau, 128) for tau in taus]
    worst = max(r.value + r.error for r in res)
    dt = time.perf_counter() - t
    ok = worst < 1e-10
    record(4, ok, "Siegel theta S-residual", f"max residual + bound {mpmath.nstr(worst, 3)}", dt)
    assert ok


def test_ac05_hecke_suite():
    from thetalift.modforms import (
        charpoly,
        delta,
        dim_cusp_forms,
        eigenforms,
        hecke,
        hecke_matrix,
        is_squarefree,
    )

    t = time.perf_counter()
    checks = {}
    d = delta(200)
    checks["T2 Delta = -24 Delta"] = hecke(d, 2).coeffs == [-24 * c for c in d.coeffs[:100]]

    def classical(k):
        if k < 12 or k % 2:
            return 0
        return k // 12 - 1 if k % 12 == 2 else k // 12

    checks["dim S_k, k <= 40"] = all(dim_cusp_forms(k) == classical(k) for k in range(0, 41, 2))
    cp = charpoly(hecke_matrix(24, 2))
    roots = sympy.Poly(list(reversed(cp)), sympy.Symbol("x")).real_roots()
    checks["weight 24 charpoly"] = is_squarefree(cp) and len(roots) == 2
    worst = mpmath.mpf(0)
    with mpmath.workdps(30):
        for k in range(12, 41, 2):
            for f in eigenforms(k, 102):
                for root in f.embeddings(30):
                    c = f.numeric_coefficients(root, 101)
                    for p in sympy.primerange(2, 101):
                        worst = max(worst, abs(c[p]) / (2 * mpmath.mpf(p) ** (Fraction(k - 1, 2))))
    checks["Deligne bound p <= 100"] = worst <= 1
    dt = time.perf_counter() - t
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    record(5, ok, "Hecke/eigenforms", ", ".join(failed) or f"all checks (max |c(p)|/2p^((k-1)/2) = {mpmath.nstr(worst, 4)})", dt)
    assert ok


def test_ac06_lvalue_dual_route():
    from thetalift.lfunctions import standard_L_euler, standard_L_rankin
    from thetalift.modforms import eigenforms

    t = time.perf_counter()
    f = eigenforms(12, 90001)[0]
    with mpmath.workprec(160):
        e = standard_L_euler(f, 5, 10 ** 4)
        r = standard_L_rankin(f, 5, 300, "c(n^2)")
        agree = abs(e.value - r.value) <= e.bound + r.bound
        margin = min(e.value - e.bound, r.value - r.bound) > max(e.bound, r.bound)
    dt = time.perf_counter() - t
    ok = agree and margin and dt < 60
    detail = f"Euler {mpmath.nstr(e.value, 15)} +- {mpmath.nstr(e.bound, 2)}, Rankin {mpmath.nstr(r.value, 15)} +- {mpmath.nstr(r.bound, 2)}"
    record(6, ok, "D_Delta(5) dual route", detail, dt)
    assert ok


def test_ac07_mu_constant():
    from thetalift.arith import PiMultiple
    from thetalift.lfunctions import mu_constant

    t = time.perf_counter()
    ok = mu_constant(12, 6) == PiMultiple(Fraction(1, 64), 1)
    count = 0
    for m in range(2, 31, 2):
        for ell in range(0, 7):
            kappa = m // 2 + ell
            if kappa % 2 or m + ell < 4:  # q + ell even; the formula has a pole at m + ell = 2
                continue
            mu = mu_constant(m, ell)
            ok &= isinstance(mu.coeff, Fraction) and mu.power == 1
            ok &= (mu.coeff > 0) == (kappa % 4 == 0)
            count += 1
    dt = time.perf_counter() - t
    record(7, ok, "mu constant", f"mu(12,6) = {mu_constant(12, 6)}; {count} grid points rational*pi with sign (-1)^(kappa/2)", dt)
    assert ok


def test_ac08_vanishing():
    from thetalift.fock import build_xi
    from thetalift.lfunctions import norm_ratio_report

    t = time.perf_counter()
    rep = norm_ratio_report(1, 9, 7, None)
    xi_zero = all(build_xi(1, q, ell).is_zero() for q in range(3) for ell in range(4) if q + ell > 1)
    dt = time.perf_counter() - t
    ok = rep.injectivity_verdict == "vanishes_identically" and xi_zero
    record(8, ok, "p = 1 vanishing", f"verdict {rep.injectivity_verdict}; xi(1,q,l) = 0 for q+l > 1: {xi_zero}", dt)
    assert ok


def test_ac09_borcherds():
    from thetalift.borcherds import borcherds_product_expansion, borcherds_weight, j_difference, named_form, split_UU

    t = time.perf_counter()
    split = split_UU()
    datum = borcherds_product_expansion(split, named_form("J", 40), (-1, 0), 7)
    exact = datum.expansion == j_difference(7)
    integral = all(Fraction(c).denominator == 1 for c in datum.expansion.coeffs.values())
    has_c1 = datum.expansion.coeffs.get((1, 0)) == 196884
    w_j = borcherds_weight(named_form("J", 4))
    w_e = borcherds_weight(named_form("E4^2/Delta", 4))
    dt = time.perf_counter() - t
    ok = exact and integral and has_c1 and w_j == 0 and w_e == 252 and dt < 60
    record(9, ok, "Borcherds U+U", f"product = j(t1) - j(t2) through degree 6: {exact}; weights {w_j}, {w_e}", dt)
    assert ok


def _fock_suite():
    from thetalift.fock import LEMMAS, verify_lemma

    failures = {}
    for name in LEMMAS:
        for p, q, ell in GRID:
            res = verify_lemma(name, p, q, ell)
            if not res.passed:
                failures.setdefault(name, []).append(((p, q, ell), res.witness))
    return failures


@pytest.mark.xfail(
    strict=True,
    reason="the closed pairing formula and the decomposition carry a spurious factor p^l, and the "
    "decomposition has the wrong sign in front of omega(R_1)omega(R_2)psi; see notes/decisions.md",
)
def test_ac10_fock_suite():
    t = time.perf_counter()
    failures = _fock_suite()
    dt = time.perf_counter() - t
    ok = not failures and dt < 120
    if failures:
        parts = []
        for name, items in failures.items():
            (p, q, ell), witness = items[0]
            parts.append(f"{name} fails at {len(items)}/{len(GRID)} points, first {(p, q, ell)}: {witness}")
        detail = "; ".join(parts)
    else:
        detail = f"8 lemmas x {len(GRID)} grid points exact"
    record(10, ok, "Fock lemma suite", detail, dt)
    assert ok


def test_ac10_other_lemmas_hold():
    """The six lemmas not affected by the constant defects hold everywhere on the grid."""
    failures = _fock_suite()
    assert set(failures) <= {"phiformel", "decomp"}


if __name__ == "__main__":
    import sys

    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac") and callable(fn) and name != "test_ac10_other_lemmas_hold":
            try:
                fn()
            except AssertionError:
                pass
    sys.exit(0 if all("PASS" in line for line in RESULTS.values()) else 1)
