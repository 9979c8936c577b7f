"""Triality Lie superalgebras of symmetric composition superalgebras.

A triality element is a triple (d0, d1, d2) of same-parity
orthosymplectic maps intertwined through the product:

    d0(x * y) = d1(x) * y + (-1)^{i|x|} x * d2(y)

for homogeneous x, y, where i is the common parity.  The whole space is
computed as one joined kernel (orthosymplectic conditions plus the
intertwining relation) so the basis is canonical; the bracket is the
componentwise supercommutator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .composition import SymCompSuperalgebra, catalog
from .linalg import coords_in_basis, kernel, rref
from .spaces import vector_parity


@dataclass
class TrialityElement:
    """Triple of maps on S with a common parity."""

    d0: np.ndarray
    d1: np.ndarray
    d2: np.ndarray

    parity: int

    def slots(self):
        return (self.d0, self.d1, self.d2)

    def flat(self) -> np.ndarray:
        return np.concatenate([self.d0.ravel(), self.d1.ravel(), self.d2.ravel()])


@dataclass
class TrialityAlgebra:
    """Basis of tri(S) (even block first) with its bracket tensor."""

    S: SymCompSuperalgebra
    basis: list[TrialityElement]
    parity: np.ndarray
    bracket: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def p(self) -> int:
        return self.S.p

    @property
    def superdim(self) -> tuple[int, int]:
        ev = int(np.sum(self.parity == 0))
        return ev, self.dim - ev

    def flat_basis(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, 3 * self.S.dim * self.S.dim), dtype=np.int64)
        return np.stack([el.flat() for el in self.basis]) % self.p

    def coords(self, el: TrialityElement) -> np.ndarray:
        """Coordinates of a triple in the computed basis; raises if outside."""
        return coords_in_basis(self.flat_basis(), el.flat() % self.p, self.p)

    def element(self, coeffs) -> TrialityElement:
        c = np.asarray(coeffs, dtype=np.int64) % self.p
        n = self.S.dim
        acc = np.zeros((3, n, n), dtype=np.int64)
        par = None
        for co, el in zip(c, self.basis):
            if co:
                acc = acc + co * np.stack(el.slots())
                par = el.parity if par is None else par
        acc %= self.p
        return TrialityElement(acc[0], acc[1], acc[2], par or 0)


def _triality_system(S: SymCompSuperalgebra, d_parity: int) -> np.ndarray:
    """Equation matrix over the stacked unknowns (d0, d1, d2).

    Unknown layout: three n*n blocks in row-major (row, col) order.
    Rows: orthosymplectic condition for each slot and basis pair, then
    the intertwining relation for each basis pair and coordinate.
    """
    n = S.dim
    p = S.p
    par = S.parity
    B = S.norm.gram % p
    P = S.product % p
    rows = []

    def unk(slot, r, c):
        return slot * n * n + r * n + c

    # b(d(e_i), e_j) + (-1)^{|d||e_i|} b(e_i, d(e_j)) = 0
    for slot in range(3):
        for i in range(n):
            si = -1 if (d_parity * par[i]) % 2 else 1
            for j in range(n):
                row = np.zeros(3 * n * n, dtype=np.int64)
                for r in range(n):
                    row[unk(slot, r, i)] += B[r, j]
                    row[unk(slot, r, j)] += si * B[i, r]
                rows.append(row % p)
    # d0(e_i * e_j) - d1(e_i) * e_j - (-1)^{|d||e_i|} e_i * d2(e_j) = 0
    for i in range(n):
        si = -1 if (d_parity * par[i]) % 2 else 1
        for j in range(n):
            for out in range(n):
                row = np.zeros(3 * n * n, dtype=np.int64)
                for c in range(n):
                    row[unk(0, out, c)] += P[i, j, c]
                for r in range(n):
                    row[unk(1, r, i)] -= P[r, j, out]
                    row[unk(2, r, j)] -= si * P[i, r, out]
                rows.append(row % p)
    return np.asarray(rows, dtype=np.int64)


def _parity_pattern_columns(S: SymCompSuperalgebra, d_parity: int) -> np.ndarray:
    """Columns (over the stacked layout) allowed for maps of given parity."""
    n = S.dim
    par = S.parity
    keep = []
    for slot in range(3):
        for r in range(n):
            for c in range(n):
                if (par[r] + par[c] + d_parity) % 2 == 0:
                    keep.append(slot * n * n + r * n + c)
    return np.asarray(keep, dtype=np.int64)


@lru_cache(maxsize=None)
def compute_tri(name: str, p: int = 3, lam: int = 0) -> TrialityAlgebra:
    return compute_tri_of(catalog(name, p, lam))


_tri_cache: dict[int, TrialityAlgebra] = {}


def compute_tri_of(S: SymCompSuperalgebra) -> TrialityAlgebra:
    cached = _tri_cache.get(id(S))
    if cached is not None and cached.S is S:
        return cached
    out = _compute_tri_of(S)
    _tri_cache[id(S)] = out
    return out


def _compute_tri_of(S: SymCompSuperalgebra) -> TrialityAlgebra:
    """Solve for tri(S) and assemble its bracket; closure is asserted."""
    n = S.dim
    p = S.p
    basis: list[TrialityElement] = []
    parities: list[int] = []
    for d_parity in (0, 1):
        if d_parity == 1 and S.space.odd_dim == 0:
            continue
        cols = _parity_pattern_columns(S, d_parity)
        M = _triality_system(S, d_parity)[:, cols]
        K = kernel(M, p)
        for vec in K:
            full = np.zeros(3 * n * n, dtype=np.int64)
            full[cols] = vec
            mats = full.reshape(3, n, n)
            basis.append(TrialityElement(mats[0], mats[1], mats[2], d_parity))
            parities.append(d_parity)
    parity = np.asarray(parities, dtype=np.int64)
    alg = TrialityAlgebra(S, basis, parity, np.zeros((len(basis),) * 3, dtype=np.int64))
    if basis:
        C = np.zeros((len(basis), len(basis), len(basis)), dtype=np.int64)
        flat = alg.flat_basis()
        for a, ea in enumerate(basis):
            for b, eb in enumerate(basis):
                br = _super_commutator_triple(ea, eb, p)
                C[a, b] = coords_in_basis(flat, br.flat() % p, p)
        alg.bracket = C % p
    return alg


def _super_commutator_triple(a: TrialityElement, b: TrialityElement, p: int) -> TrialityElement:
    sign = -1 if (a.parity * b.parity) % 2 else 1
    mats = tuple(
        (da @ db - sign * db @ da) % p for da, db in zip(a.slots(), b.slots())
    )
    return TrialityElement(*mats, parity=(a.parity + b.parity) % 2)


def t_element(x, y, S: SymCompSuperalgebra, tri: TrialityAlgebra | None = None) -> TrialityElement:
    """The distinguished triality element attached to homogeneous x, y.

    t_{x,y} = (sigma_{x,y}, b(x,y)/2 - r_x l_y, b(x,y)/2 - l_x r_y).
    Membership in tri(S) is asserted when a computed tri(S) is passed;
    a failure there signals a product-table bug.
    """
    from .spaces import sigma

    fld = S.field
    p = S.p
    x = fld.asarray(x)
    y = fld.asarray(y)
    px = vector_parity(x, S.parity, p) or 0
    py = vector_parity(y, S.parity, p) or 0
    bxy = S.norm.b(x, y)
    half_b = (fld.half * bxy) % p
    I = fld.eye(S.dim)
    lx = S.left_mul(x)
    ly = S.left_mul(y)
    rx = S.right_mul(x, px)
    ry = S.right_mul(y, py)
    d0 = sigma(x, y, S.norm).matrix
    d1 = (half_b * I - rx @ ly) % p
    d2 = (half_b * I - lx @ ry) % p
    el = TrialityElement(d0, d1, d2, (px + py) % 2)
    if tri is not None:
        tri.coords(el)  # raises if t_{x,y} is not a triality element
    return el


def theta(el: TrialityElement) -> TrialityElement:
    """The order-3 shift (d0, d1, d2) -> (d2, d0, d1)."""
    return TrialityElement(el.d2, el.d0, el.d1, el.parity)


def t_span_dimension(S: SymCompSuperalgebra, tri: TrialityAlgebra) -> int:
    """Dimension of span{theta^i(t_{x,y})} over basis pairs of S."""
    p = S.p
    vecs = []
    n = S.dim
    I = np.eye(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            el = t_element(I[i], I[j], S, tri)
            for _ in range(3):
                vecs.append(el.flat() % p)
                el = theta(el)
    R, _ = rref(np.asarray(vecs), p)
    return R.shape[0]
