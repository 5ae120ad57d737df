import json
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetalift.lattice import (
    EvenLattice,
    NegativePlane,
    _det,
    _matmul,
    _transpose,
    enumerate_coset_vectors,
    load_lattice_file,
    named_lattice,
    smith_normal_form,
    witt_index_bounded,
)

CORPUS = ["U", "UU", "A2", "E8", "diag(2,-2)", "A2+U"]


def test_named_lattices():
    assert [list(r) for r in named_lattice("U").gram] == [[0, 1], [1, 0]]
    assert named_lattice("A2").det == 3
    assert named_lattice("E8").det == 1
    assert named_lattice("A2+U").rank == 4
    assert tuple(named_lattice("UU").signature) == (2, 2)
    assert tuple(named_lattice("A2+U").signature) == (3, 1)


def test_invalid_lattices():
    with pytest.raises(ValueError):
        EvenLattice([[1, 0], [0, 2]])  # odd
    with pytest.raises(ValueError):
        EvenLattice([[2, 1], [0, 2]])  # not symmetric
    with pytest.raises(ValueError):
        EvenLattice([[2, 2], [2, 2]])  # degenerate
    with pytest.raises(ValueError):
        named_lattice("Z7")


def test_lattice_file(tmp_path):
    path = tmp_path / "l.json"
    path.write_text(json.dumps({"name": "A2", "gram": [[2, -1], [-1, 2]]}))
    assert load_lattice_file(path).det == 3
    path.write_text(json.dumps({"name": "A2", "gram": [[2, -1], [-1, 2]], "colour": "red"}))
    with pytest.raises(ValueError):
        load_lattice_file(path)


matrices = st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3)


@given(matrices)
def test_smith_normal_form(A):
    U, D, V = smith_normal_form(A)
    assert _matmul(_matmul(U, A), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [D[i][i] for i in range(3)]
    assert all(D[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    nonzero = [d for d in diag if d]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


@pytest.mark.parametrize("name", CORPUS)
def test_discriminant_form_order(name):
    L = named_lattice(name)
    A = L.discriminant_form
    assert A.order == abs(L.det)
    assert len(A.labels) == A.order
    for h in A.labels:
        # q is well defined: the representative has Q(x) = q(h) mod 1
        assert (L.Q(A.representative(h)) - A.q(h)) % 1 == 0
        assert A.label_of(A.representative(h)) == h


def test_discriminant_forms_frozen():
    A = named_lattice("diag(2,-2)").discriminant_form
    assert sorted(A.q(h) for h in A.labels) == [0, 0, Fraction(1, 4), Fraction(3, 4)]
    assert A.level == 4
    A2 = named_lattice("A2").discriminant_form
    assert sorted(A2.q(h) for h in A2.labels) == [0, Fraction(1, 3), Fraction(1, 3)]
    assert A2.level == 3


@given(st.integers(0, 5), st.integers(0, 5))
def test_discriminant_group_law(i, j):
    A = named_lattice("A2+U").discriminant_form
    g, h = A.labels[i % A.order], A.labels[j % A.order]
    # q(g+h) - q(g) - q(h) = b(g, h) mod 1
    assert (A.q(A.add(g, h)) - A.q(g) - A.q(h) - A.b(g, h)) % 1 == 0


def test_witt_index():
    assert witt_index_bounded(named_lattice("U+E8")) == 1
    assert witt_index_bounded(named_lattice("UU")) == 2
    assert witt_index_bounded(named_lattice("diag(2,-6)")) == 0
    assert witt_index_bounded(named_lattice("E8")) == 0


def test_e8_shell_counts():
    L = named_lattice("E8")
    vecs = enumerate_coset_vectors(L, (), 2)
    counts = Counter(L.Q(v) for v in vecs)
    assert counts == {0: 1, 1: 240, 2: 2160}


def test_a2_coset():
    L = named_lattice("A2")
    vecs = enumerate_coset_vectors(L, (1,), Fraction(1, 3))
    assert len(vecs) == 3


unimodular = st.sampled_from(
    [
        [[1, 0], [0, 1]],
        [[1, 1], [0, 1]],
        [[2, 1], [1, 1]],
        [[1, -2], [0, 1]],
        [[0, 1], [-1, 0]],
        [[3, 2], [1, 1]],
    ]
)


@given(unimodular)
def test_enumeration_invariant_under_basis_change(U):
    L = named_lattice("A2")
    G2 = _matmul(_matmul(_transpose(U), L.gram), U)
    M = EvenLattice(G2)
    a = Counter(L.Q(v) for v in enumerate_coset_vectors(L, (0,), 6))
    b = Counter(M.Q(v) for v in enumerate_coset_vectors(M, (0,), 6))
    assert a == b


def test_negative_plane_majorant():
    L = named_lattice("diag(2,-2)")
    z = NegativePlane(L, [[0, 1]])
    assert z.majorant_gram == [[2, 0], [0, 2]]
    assert z.split_norms([1, 1]) == (1, -1)
    with pytest.raises(ValueError):
        NegativePlane(L, [[1, 0]])
