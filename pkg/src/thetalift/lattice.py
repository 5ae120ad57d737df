"""Even lattices, discriminant forms, signatures and vector enumeration."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from pathlib import Path

import numpy as np

Matrix = list[list[int]]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _frac_mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _det(mat) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def _inverse(mat) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _bilinear(G, x, y):
    return sum(x[i] * G[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])


def smith_normal_form(A: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*A*V = D diagonal, d_1 | d_2 | ..., U and V unimodular."""
    n, m = len(A), len(A[0])
    D = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(n, m)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, n) for j in range(t, m) if D[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            done = True
            for i in range(t + 1, n):
                q = D[i][t] // p
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, m):
                q = D[t][j] // p
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


def rational_diagonalization(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Congruence diagonalization over Q: returns (d, P) with P^T G P = diag(d).

    Columns of P are the new basis vectors.
    """
    n = len(gram)
    A = [[Fraction(x) for x in row] for row in gram]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def col_op(dst, src, c):  # basis vector dst += c * src, applied as congruence
        for row in P:
            row[dst] += c * row[src]
        for row in A:
            row[dst] += c * row[src]
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]

    def swap(i, j):
        for row in P:
            row[i], row[j] = row[j], row[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        A[i], A[j] = A[j], A[i]

    for k in range(n):
        if not A[k][k]:
            j = next((j for j in range(k + 1, n) if A[j][j]), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if A[k][j]), None)
                if j is None:
                    continue
                col_op(k, j, 1)
        for j in range(k + 1, n):
            if A[k][j]:
                col_op(j, k, -A[k][j] / A[k][k])
    return [A[i][i] for i in range(n)], P


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    @property
    def m(self) -> int:
        return self.p + self.q

    def __iter__(self):
        return iter((self.p, self.q))


class EvenLattice:
    """Z^m with an even, non-degenerate integral Gram matrix."""

    def __init__(self, gram, name: str | None = None):
        G = [[int(x) for x in row] for row in gram]
        m = len(G)
        if m == 0:
            raise ValueError("lattice of rank 0")
        if any(len(row) != m for row in G):
            raise ValueError("Gram matrix must be square")
        if any(G[i][j] != G[j][i] for i in range(m) for j in range(m)):
            raise ValueError("Gram matrix must be symmetric")
        if any(G[i][i] % 2 for i in range(m)):
            raise ValueError("lattice is not even: odd diagonal entry")
        if _det(G) == 0:
            raise ValueError("Gram matrix is degenerate")
        self.gram = tuple(tuple(r) for r in G)
        self.name = name or "L"

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return int(_det(self.gram))

    @cached_property
    def gram_inverse(self) -> list[list[Fraction]]:
        return _inverse(self.gram)

    def Q(self, x) -> Fraction:
        return Fraction(_bilinear(self.gram, x, x)) / 2

    def bilinear(self, x, y):
        return _bilinear(self.gram, x, y)

    @cached_property
    def signature(self) -> Signature:
        return signature(self)

    def is_positive_definite(self) -> bool:
        return self.signature.q == 0

    def __neg__(self) -> EvenLattice:
        return EvenLattice([[-x for x in r] for r in self.gram], f"{self.name}^-")

    def __add__(self, other: EvenLattice) -> EvenLattice:
        return direct_sum(self, other)

    def __eq__(self, other):
        return isinstance(other, EvenLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"EvenLattice({self.name}, rank={self.rank})"

    @cached_property
    def discriminant_form(self) -> DiscriminantForm:
        return discriminant_form(self)


def direct_sum(*lattices: EvenLattice) -> EvenLattice:
    m = sum(L.rank for L in lattices)
    G = [[0] * m for _ in range(m)]
    off = 0
    for L in lattices:
        for i, row in enumerate(L.gram):
            for j, v in enumerate(row):
                G[off + i][off + j] = v
        off += L.rank
    return EvenLattice(G, "+".join(L.name for L in lattices))


E8_GRAM = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]

NAMED = {
    "U": [[0, 1], [1, 0]],
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "E8": E8_GRAM,
}


def named_lattice(spec: str) -> EvenLattice:
    """Parse names like 'U', 'A2+U', 'U⊕U', 'UU', 'E8(-1)', 'diag(2,-2)'."""
    text = spec.strip()
    if not text:
        raise ValueError("empty lattice name")
    parts = [p.strip() for p in re.split(r"[⊕+]", text)]
    pieces = []
    for part in parts:
        pieces.extend(_parse_piece(part))
    return EvenLattice(direct_sum(*pieces).gram, text)


def _parse_piece(part: str) -> list[EvenLattice]:
    m = re.fullmatch(r"diag\(([-\d,\s]+)\)", part)
    if m:
        entries = [int(x) for x in m.group(1).split(",")]
        n = len(entries)
        return [EvenLattice([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], part)]
    m = re.fullmatch(r"(\w+?)(?:\((-?\d+)\))?", part)
    if m and m.group(1) in NAMED:
        scale = int(m.group(2) or 1)
        return [EvenLattice([[scale * x for x in r] for r in NAMED[m.group(1)]], part)]
    if part and set(part) == {"U"}:
        return [EvenLattice(NAMED["U"], "U") for _ in part]
    raise ValueError(f"unknown lattice component {part!r}; known: {', '.join(NAMED)}, diag(...)")


def load_lattice_file(path: str | Path) -> EvenLattice:
    """Read a JSON document {"name": ..., "gram": [[...], ...]}."""
    data = json.loads(Path(path).read_text())
    unknown = set(data) - {"name", "gram"}
    if unknown:
        raise ValueError(f"unknown fields in lattice file: {sorted(unknown)}")
    if "gram" not in data:
        raise ValueError("lattice file lacks 'gram'")
    return EvenLattice(data["gram"], data.get("name"))


def signature(L: EvenLattice) -> Signature:
    d, _ = rational_diagonalization(L.gram)
    if any(x == 0 for x in d):
        raise ValueError("degenerate Gram matrix")
    p = sum(1 for x in d if x > 0)
    return Signature(p, len(d) - p)


# -- discriminant forms ---------------------------------------------------------


@dataclass
class DiscriminantForm:
    """The finite quadratic module L#/L with Q mod 1.

    Elements are labelled by tuples (a_1, ..., a_k), 0 <= a_i < d_i, over the
    nontrivial elementary divisors d_i; the label stands for sum a_i g_i with
    g_i = V[:, i] / d_i. Labels are ordered with the first coordinate varying
    fastest.
    """

    lattice: EvenLattice
    divisors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    _coords: list[list[int]] = field(repr=False)

    @cached_property
    def labels(self) -> list[tuple[int, ...]]:
        ranges = [range(d) for d in reversed(self.divisors)]
        return [tuple(reversed(t)) for t in iproduct(*ranges)]

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {h: i for i, h in enumerate(self.labels)}

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    def __len__(self):
        return self.order

    def representative(self, h) -> tuple[Fraction, ...]:
        """Coset representative with all coordinates in [0, 1)."""
        m = self.lattice.rank
        v = [Fraction(0)] * m
        for a, g in zip(h, self.generators):
            for i in range(m):
                v[i] += a * g[i]
        return tuple(_frac_mod1(x) for x in v)

    @cached_property
    def representatives(self) -> list[tuple[Fraction, ...]]:
        return [self.representative(h) for h in self.labels]

    def label_of(self, x) -> tuple[int, ...]:
        """Label of the class of a vector x in L#."""
        k = len(self.divisors)
        off = len(self._coords) - k
        out = []
        for i, d in enumerate(self.divisors):
            row = self._coords[off + i]
            a = d * sum(Fraction(r) * Fraction(xi) for r, xi in zip(row, x))
            if a.denominator != 1:
                raise ValueError("vector does not lie in the dual lattice")
            out.append(int(a) % d)
        return tuple(out)

    def add(self, h, g) -> tuple[int, ...]:
        return tuple((a + b) % d for a, b, d in zip(h, g, self.divisors))

    def neg(self, h) -> tuple[int, ...]:
        return tuple((-a) % d for a, d in zip(h, self.divisors))

    def scale(self, n: int, h) -> tuple[int, ...]:
        return tuple((n * a) % d for a, d in zip(h, self.divisors))

    def q(self, h) -> Fraction:
        return _frac_mod1(self.lattice.Q(self.representative(h)))

    def b(self, h, g) -> Fraction:
        return _frac_mod1(Fraction(self.lattice.bilinear(self.representative(h), self.representative(g))))

    @cached_property
    def q_values(self) -> dict[tuple[int, ...], Fraction]:
        return {h: self.q(h) for h in self.labels}

    @cached_property
    def level(self) -> int:
        N = 1
        for i, g in enumerate(self.generators):
            N = _lcm(N, self.lattice.Q(g).denominator)
            for g2 in self.generators[i + 1:]:
                N = _lcm(N, Fraction(self.lattice.bilinear(g, g2)).denominator)
        return N

    @property
    def signature_mod_8(self) -> int:
        p, q = self.lattice.signature
        return (p - q) % 8


def discriminant_form(L: EvenLattice) -> DiscriminantForm:
    U, D, V = smith_normal_form([list(r) for r in L.gram])
    m = L.rank
    divisors = [D[i][i] for i in range(m)]
    Vinv = _inverse(V)
    start = next((i for i, d in enumerate(divisors) if d != 1), m)
    gens = tuple(tuple(Fraction(V[r][i], divisors[i]) for r in range(m)) for i in range(start, m))
    coords = [[int(x) for x in row] for row in Vinv]
    return DiscriminantForm(L, tuple(divisors[start:]), gens, coords)


# -- Witt index -------------------------------------------------------------------


def _is_rational_square(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _nullspace(rows: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    """Basis of {x : r.x = 0 for every row r} over Q."""
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -A[i][f]
        basis.append(v)
    return basis


def _find_isotropic(G, search_bound: int):
    """A nonzero rational isotropic vector of G, or None if none is found."""
    n = len(G)
    for i in range(n):
        if G[i][i] == 0:
            return [Fraction(int(j == i)) for j in range(n)]
    d, P = rational_diagonalization(G)
    for i in range(n):
        for j in range(i + 1, n):
            s = _is_rational_square(-d[i] / d[j])
            if s is not None:
                return [P[r][i] + s * P[r][j] for r in range(n)]
    # small-support integer box search
    rng = range(-search_bound, search_bound + 1)
    for support in range(2, min(n, 4) + 1):
        for idx in _combinations(n, support):
            for vals in iproduct(rng, repeat=support):
                if 0 in vals or vals[0] < 0:
                    continue
                x = [0] * n
                for k, v in zip(idx, vals):
                    x[k] = v
                if _bilinear(G, x, x) == 0:
                    return [Fraction(v) for v in x]
    return None


def _combinations(n, k):
    from itertools import combinations

    return combinations(range(n), k)


def _witt(G, search_bound: int) -> int | None:
    n = len(G)
    if n == 0:
        return 0
    d, _ = rational_diagonalization(G)
    p = sum(1 for x in d if x > 0)
    q = n - p
    if p == 0 or q == 0:
        return 0
    v = _find_isotropic(G, search_bound)
    if v is None:
        if n == 2:
            return 0  # the diagonal-pair test above is exact in rank 2
        return None
    Gv = [sum(G[i][j] * v[j] for j in range(n)) for i in range(n)]
    k = next(i for i in range(n) if Gv[i])
    w = [Fraction(int(i == k)) / Gv[k] for i in range(n)]
    ww = _bilinear(G, w, w)
    w = [wi - ww / 2 * vi for wi, vi in zip(w, v)]
    Gw = [sum(G[i][j] * w[j] for j in range(n)) for i in range(n)]
    basis = _nullspace([Gv, Gw], n)
    sub = [[_bilinear(G, a, b) for b in basis] for a in basis]
    den = 1
    for row in sub:
        for x in row:
            den = _lcm(den, Fraction(x).denominator)
    sub = [[int(x * den) for x in row] for row in sub]
    rest = _witt(sub, search_bound) if sub else 0
    return None if rest is None else 1 + rest


def witt_index_bounded(L: EvenLattice, search_bound: int = 3) -> int | None:
    """Witt index of L (x) Q, or None when the bounded search cannot decide it.

    Each found isotropic vector splits off a hyperbolic plane over Q, and the
    search continues on the orthogonal complement.
    """
    return _witt([list(r) for r in L.gram], search_bound)


# -- negative planes and enumeration ----------------------------------------------


class NegativePlane:
    """A negative definite subspace z of V(R), spanned by rational vectors."""

    def __init__(self, lattice: EvenLattice, basis, oriented: bool = True):
        B = [[Fraction(x) for x in v] for v in basis]
        if any(len(v) != lattice.rank for v in B):
            raise ValueError("basis vectors have the wrong length")
        self.lattice = lattice
        self.basis = B
        self.oriented = oriented
        gz = [[Fraction(lattice.bilinear(a, b)) for b in B] for a in B]
        if B:
            d, _ = rational_diagonalization(gz)
            if any(x >= 0 for x in d):
                raise ValueError("spanning vectors are not negative definite")
        self.gram_z = gz

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def majorant_gram(self) -> list[list[Fraction]]:
        """Gram matrix of the positive form (x,x)_z = (x,x) - 2(x_z,x_z)."""
        G = [[Fraction(x) for x in r] for r in self.lattice.gram]
        if not self.basis:
            return G
        m = len(G)
        GB = [[sum(G[i][k] * b[k] for k in range(m)) for b in self.basis] for i in range(m)]
        inv = _inverse(self.gram_z)
        core = _matmul(_matmul(GB, inv), _transpose(GB))
        return [[G[i][j] - 2 * core[i][j] for j in range(m)] for i in range(m)]

    @cached_property
    def _projector(self):
        # x -> coordinates c of x_z in the basis, c = (B^T G B)^{-1} B^T G x
        m = self.lattice.rank
        G = self.lattice.gram
        inv = _inverse(self.gram_z)
        BtG = [[sum(b[k] * G[k][j] for k in range(m)) for j in range(m)] for b in self.basis]
        return _matmul(inv, BtG)

    def split_norms(self, x) -> tuple[Fraction, Fraction]:
        """(Q(x_{z-perp}), Q(x_z)) for a rational vector x; the second is <= 0."""
        if not self.basis:
            return self.lattice.Q(x), Fraction(0)
        c = [sum(r[j] * x[j] for j in range(len(x))) for r in self._projector]
        qz = sum(c[i] * self.gram_z[i][j] * c[j] for i in range(len(c)) for j in range(len(c))) / 2
        return self.lattice.Q(x) - qz, qz


def _ldl(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    """q_ii and q_ij (j > i) with x^T G x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    n = len(gram)
    A = [[Fraction(x) for x in r] for r in gram]
    qd = [Fraction(0)] * n
    qo = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if A[i][i] <= 0:
            raise ValueError("form is not positive definite")
        qd[i] = A[i][i]
        for j in range(i + 1, n):
            qo[i][j] = A[i][j] / A[i][i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                A[j][k] -= qo[i][j] * A[i][k]
    return qd, qo


def enumerate_scaled(gram, shift, bound: Fraction) -> tuple[np.ndarray, int]:
    """All x in shift + Z^m with x^T gram x <= 2*bound, gram positive definite.

    Returns (X, den) with X an integer array of the vectors den * x. The search
    prunes in floating point with a safety margin; membership is then decided
    exactly in integer arithmetic.
    """
    n = len(gram)
    shift = [Fraction(s) for s in shift]
    den = 1
    for s in shift:
        den = _lcm(den, s.denominator)
    bound = Fraction(bound)
    if bound < 0:
        return np.zeros((0, n), dtype=np.int64), den
    qd, qo = _ldl(gram)
    qdf = np.array([float(x) for x in qd])
    qof = np.array([[float(x) for x in r] for r in qo])
    hf = np.array([float(s) for s in shift])
    budget = 2 * float(bound)
    margin = 1e-9 * (budget + 1)
    # partial assignments of coordinates i..n-1 as integer offsets y with x = y + h
    ys = np.zeros((1, 0), dtype=np.int64)
    rem = np.array([budget])
    for i in range(n - 1, -1, -1):
        if ys.shape[1]:
            xs = ys + hf[i + 1:]
            center = -(xs @ qof[i, i + 1:])
        else:
            center = np.zeros(len(ys))
        radius = np.sqrt(np.maximum(rem + margin, 0) / qdf[i])
        lo = np.ceil(center - radius - hf[i] - 1e-12).astype(np.int64)
        hi = np.floor(center + radius - hf[i] + 1e-12).astype(np.int64)
        counts = np.maximum(hi - lo + 1, 0)
        total = int(counts.sum())
        if total == 0:
            return np.zeros((0, n), dtype=np.int64), den
        parent = np.repeat(np.arange(len(ys)), counts)
        starts = np.repeat(lo, counts)
        offs = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        yi = starts + offs
        t = yi + hf[i] - center[parent]
        rem = rem[parent] - qdf[i] * t * t
        ys = np.concatenate([yi[:, None], ys[parent]], axis=1)
        keep = rem > -margin
        ys, rem = ys[keep], rem[keep]
    hnum = np.array([int(s * den) for s in shift], dtype=np.int64)
    X = ys * den + hnum
    # exact filter: X^T (c*gram) X <= 2*bound*den^2*c with c clearing denominators of gram
    c = 1
    for row in gram:
        for g in row:
            c = _lcm(c, Fraction(g).denominator)
    Gi = [[int(Fraction(g) * c) for g in row] for row in gram]
    limit = Fraction(2) * bound * den * den * c
    norms = _quad_int(X, Gi)
    ok = np.array([v <= limit for v in norms], dtype=bool) if len(norms) else np.zeros(0, dtype=bool)
    return X[ok], den


def _quad_int(X: np.ndarray, G) -> list[int]:
    """Exact values x^T G x for each row of X (Python ints when int64 could overflow)."""
    if len(X) == 0:
        return []
    maxx = int(np.abs(X).max())
    maxg = max(abs(g) for r in G for g in r)
    n = len(G)
    if maxx * maxx * maxg * n * n < 2 ** 62:
        Ga = np.array(G, dtype=np.int64)
        return list(np.einsum("ij,jk,ik->i", X, Ga, X))
    Xo = X.astype(object)
    return [int(sum(row[i] * G[i][j] * row[j] for i in range(n) for j in range(n))) for row in Xo]


def enumerate_coset_vectors(
    L: EvenLattice, coset, norm_bound, plane: NegativePlane | None = None
) -> list[tuple[Fraction, ...]]:
    """All x in L + h with Q(x) <= norm_bound (definite L) or (x,x)_z / 2 <= norm_bound.

    ``coset`` is a discriminant-form label or a rational representative. The
    result is sorted lexicographically.
    """
    h = _coset_vector(L, coset)
    if plane is None:
        if not L.is_positive_definite():
            raise ValueError("indefinite lattice requires a negative plane for majorant enumeration")
        gram = L.gram
    else:
        if plane.lattice != L:
            raise ValueError("plane belongs to a different lattice")
        gram = plane.majorant_gram
    X, den = enumerate_scaled(gram, h, Fraction(norm_bound))
    out = [tuple(Fraction(int(v), den) for v in row) for row in X]
    out.sort()
    return out


def _coset_vector(L: EvenLattice, coset) -> tuple[Fraction, ...]:
    if coset is None:
        return tuple(Fraction(0) for _ in range(L.rank))
    A = L.discriminant_form
    # integer tuples of label length are labels; anything else is a vector
    if isinstance(coset, tuple) and all(type(a) is int for a in coset) and coset in A.index:
        return A.representative(coset)
    v = tuple(Fraction(x) for x in coset)
    if len(v) != L.rank:
        raise ValueError("coset representative has the wrong length")
    L.discriminant_form.label_of(v)  # validates membership in L#
    return v
