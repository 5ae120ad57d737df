from collections import Counter
from fractions import Fraction
from itertools import product

import mpmath
import pytest

from thetalift.lattice import NegativePlane, named_lattice
from thetalift.thetaseries import (
    check_modularity,
    siegel_theta_numeric,
    theta_definite,
    theta_definite_numeric,
)


def _brute_counts(gram, shift, bound, box=6):
    out = Counter()
    m = len(gram)
    for x in product(range(-box, box + 1), repeat=m):
        v = [Fraction(a) + s for a, s in zip(x, shift)]
        q = sum(v[i] * gram[i][j] * v[j] for i in range(m) for j in range(m)) / 2
        if q < bound:
            out[q] += 1
    return out


def test_a2_theta_against_brute_force():
    L = named_lattice("A2")
    th = theta_definite(L, 8)
    A = L.discriminant_form
    for h in A.labels:
        counts = _brute_counts(L.gram, A.representative(h), 8)
        assert dict(th[h].items()) == dict(counts)


def test_a2_theta_frozen():
    th = theta_definite(named_lattice("A2"), 8)
    assert [th[(0,)][n] for n in range(8)] == [1, 6, 0, 6, 6, 0, 0, 12]
    # the two nonzero classes are swapped by x -> -x
    assert th[(1,)] == th[(2,)]
    assert th[(1,)][Fraction(1, 3)] == 3


def test_weight_and_labels():
    th = theta_definite(named_lattice("A2"), 3)
    assert th.weight == 1
    assert th.labels == [(0,), (1,), (2,)]
    with pytest.raises(ValueError):
        theta_definite(named_lattice("U"), 3)


def test_definite_numeric_matches_siegel_route():
    # for a definite lattice the Siegel theta with z = 0 is the holomorphic theta series
    L = named_lattice("A2")
    tau = mpmath.mpc(0.2, 0.9)
    with mpmath.workprec(160):
        a = theta_definite_numeric(L, 30, tau, 100)
        b = siegel_theta_numeric(L, NegativePlane(L, []), tau, 100)
        for x, y in zip(a, b):
            assert abs(x.value - y.value) <= x.error + y.error + mpmath.mpf(2) ** -90


@pytest.mark.parametrize("plane", [[[0, 1]], [[1, 2]]])
@pytest.mark.parametrize("tau", [mpmath.mpc(0.1, 1.1), mpmath.mpc(-0.3, 0.8), mpmath.mpc(0.25, 1.5)])
def test_siegel_theta_modularity(plane, tau):
    L = named_lattice("diag(2,-2)")
    z = NegativePlane(L, plane)
    s = check_modularity(L, z, "S", tau, 128)
    t = check_modularity(L, z, "T", tau, 128)
    assert s.value + s.error < 1e-30
    assert t.value + t.error < 1e-30


def test_modularity_detects_wrong_plane_use():
    L = named_lattice("diag(2,-2)")
    with pytest.raises(ValueError):
        siegel_theta_numeric(L, NegativePlane(L, []), mpmath.mpc(0, 1))
