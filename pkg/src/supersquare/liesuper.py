"""Lie superalgebra engine: axioms, ideals, simplicity probes, isomorphisms.

A Lie superalgebra is a basis-indexed bracket 3-tensor over GF(p)
together with a parity vector.  The graded Jacobi identity is verified
exhaustively in adjoint form: with super-anticommutativity checked
first, ad([x,y]) = ad(x) ad(y) - (-1)^{|x||y|} ad(y) ad(x) over all
basis pairs x <= y covers every homogeneous triple.  The matrix work
runs through float64 BLAS in chunks; all values stay far below 2^53 so
the arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

import numpy as np

from .gfp import PrimeField
from .linalg import coords_in_basis, in_span, kernel, rref, span_basis
from .spaces import SuperSpace


@dataclass
class LieSuperalgebra:
    """Structure constants of a Lie superalgebra over GF(p)."""

    space: SuperSpace
    field: PrimeField
    bracket: np.ndarray  # [i, j, k]: [e_i, e_j] = sum_k bracket[i,j,k] e_k
    provenance: str = ""

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def parity(self) -> np.ndarray:
        return self.space.parity

    @property
    def superdim(self) -> tuple[int, int]:
        return self.space.superdim

    def ad(self, vec) -> np.ndarray:
        """Matrix of [x, .] for a coordinate vector x."""
        x = self.field.asarray(vec)
        return np.einsum("i,ijk->kj", x, self.bracket) % self.p

    def brk(self, x, y) -> np.ndarray:
        x = self.field.asarray(x)
        y = self.field.asarray(y)
        return np.einsum("i,j,ijk->k", x, y, self.bracket) % self.p


@dataclass
class Subspace:
    """Row-span subspace of a Lie superalgebra, RREF-canonical."""

    basis: np.ndarray
    pivots: list[int]

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def contains(self, vectors, p: int) -> bool:
        return in_span(self.basis, self.pivots, vectors, p)


@dataclass
class JacobiReport:
    """Outcome of the exhaustive graded-axiom check."""

    anticommutative: bool
    parity_additive: bool
    failing_triples: int
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return self.anticommutative and self.parity_additive and self.failing_triples == 0


def check_super_jacobi(L: LieSuperalgebra, chunk: int = 48) -> JacobiReport:
    """Exhaustive super-anticommutativity + graded Jacobi verification.

    Returns the number of basis triples (i <= j, any k) violating the
    graded Jacobi identity, with a first witness.
    """
    p = L.p
    n = L.dim
    C = L.bracket % p
    par = L.parity

    sg = np.where((par[:, None] * par[None, :]) % 2 == 1, -1, 1)
    anti = not ((C + sg[:, :, None] * C.transpose(1, 0, 2)) % p).any()

    expected = (par[:, None] + par[None, :])[:, :, None] % 2
    padd = not (C * (expected != par[None, None, :])).any()

    if n == 0:
        return JacobiReport(anti, padd, 0, None)

    # ad tensor: A[x] = matrix of [e_x, .]
    A = C.transpose(0, 2, 1).astype(np.float64)
    Aflat = A.reshape(n, n * n)
    Cf = C.astype(np.float64)
    failing = 0
    witness = None
    for x in range(n):
        for y0 in range(x, n, chunk):
            ys = slice(y0, min(y0 + chunk, n))
            P1 = np.matmul(A[x], A[ys])              # ad_x ad_y
            P2 = np.matmul(A[ys], A[x])              # ad_y ad_x
            signs = sg[x, ys].astype(np.float64)[:, None, None]
            R = np.matmul(Cf[x, ys, :], Aflat).reshape(P1.shape)  # ad([x,y])
            D = (P1 - signs * P2 - R).astype(np.int64) % p
            if D.any():
                bad = np.argwhere(D)
                # D axes: (y offset, out coordinate, z)
                cols = {(int(b[0]), int(b[2])) for b in bad}
                failing += len(cols)
                if witness is None:
                    b = bad[0]
                    witness = (x, y0 + int(b[0]), int(b[2]))
    return JacobiReport(anti, padd, failing, witness)


def assert_lie(L: LieSuperalgebra):
    rep = check_super_jacobi(L)
    if not rep.ok:
        raise AssertionError(
            f"{L.provenance or 'algebra'}: super-Jacobi fails "
            f"(anti={rep.anticommutative}, parity={rep.parity_additive}, "
            f"triples={rep.failing_triples}, witness={rep.witness})"
        )
    return L


def derived_subalgebra(L: LieSuperalgebra) -> Subspace:
    """Span of all brackets; verified to be an ideal."""
    n = L.dim
    vecs = L.bracket.reshape(n * n, n)
    basis, piv = span_basis(vecs, L.p)
    sub = Subspace(basis, piv)
    if not _is_ideal(L, sub):
        raise AssertionError("derived subalgebra failed the ideal check")
    return sub


def center(L: LieSuperalgebra) -> Subspace:
    """Kernel of the adjoint action; verified to be an ideal."""
    n = L.dim
    M = L.bracket.transpose(1, 2, 0).reshape(n * n, n)
    K = kernel(M, L.p)
    R, piv = rref(K, L.p)
    sub = Subspace(R, piv)
    if not _is_ideal(L, sub):
        raise AssertionError("center failed the ideal check")
    return sub


def _is_ideal(L: LieSuperalgebra, sub: Subspace) -> bool:
    if sub.dim == 0:
        return True
    brs = np.einsum("ijk,bj->ibk", L.bracket, sub.basis) % L.p
    return sub.contains(brs.reshape(-1, L.dim), L.p)


def ideal_closure(L: LieSuperalgebra, seed) -> Subspace:
    """Smallest ad-invariant subspace containing the seed vector."""
    p = L.p
    seed = L.field.asarray(seed)
    if not seed.any():
        raise ValueError("ideal closure needs a nonzero seed")
    basis, piv = span_basis(seed[None, :], p)
    while True:
        new = np.einsum("ijk,bj->ibk", L.bracket, basis) % p
        stacked = np.vstack([basis, new.reshape(-1, L.dim)])
        nb, npiv = span_basis(stacked, p)
        if nb.shape[0] == basis.shape[0]:
            return Subspace(nb, npiv)
        basis, piv = nb, npiv


@dataclass
class SimplicityVerdict:
    simple: bool
    reason: str
    witness: Subspace | None = None

    @property
    def label(self) -> str:
        return "probably_simple" if self.simple else f"not_simple({self.reason})"


def probe_simplicity(L: LieSuperalgebra, trials: int = 25, rng_seed: int = 2024) -> SimplicityVerdict:
    """Heuristic simplicity probe.

    Sound for "not simple" (returns an explicit proper ideal); for
    "probably simple" it has run ideal closure from every basis vector
    and `trials` random homogeneous vectors without finding a proper
    ideal.
    """
    n = L.dim
    if n == 0:
        return SimplicityVerdict(False, "zero algebra")
    z = center(L)
    if z.dim:
        return SimplicityVerdict(False, f"center of dim {z.dim}", z)
    d = derived_subalgebra(L)
    if d.dim != n:
        return SimplicityVerdict(False, f"derived subalgebra of dim {d.dim}", d)
    seeds = [np.eye(n, dtype=np.int64)[i] for i in range(n)]
    rng = np.random.default_rng(rng_seed)
    par = L.parity
    for _ in range(trials):
        pi = int(rng.integers(0, 2)) if L.space.odd_dim else 0
        idxs = np.nonzero(par == pi)[0]
        v = np.zeros(n, dtype=np.int64)
        v[idxs] = rng.integers(0, L.p, size=idxs.size)
        if v.any():
            seeds.append(v)
    for s in seeds:
        sub = ideal_closure(L, s)
        if 0 < sub.dim < n:
            return SimplicityVerdict(False, f"proper ideal of dim {sub.dim}", sub)
    return SimplicityVerdict(True, f"{len(seeds)} closures reached the whole algebra")


def check_isomorphism(F, A: LieSuperalgebra, B: LieSuperalgebra) -> bool:
    """Whether the even linear map F: A -> B is a Lie superalgebra isomorphism.

    F is a dim(B) x dim(A) matrix.  True iff F is parity-preserving,
    invertible and F[x,y] = [Fx, Fy] on all basis pairs.
    """
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    p = A.p
    if B.p != p:
        raise ValueError("field mismatch")
    F = np.asarray(F, dtype=np.int64) % p
    if F.shape != (B.dim, A.dim):
        raise ValueError("map shape mismatch")
    mask = B.parity[:, None] != A.parity[None, :]
    if (F * mask).any():
        return False
    R, piv = rref(F, p)
    if R.shape[0] != A.dim:
        return False
    lhs = np.einsum("ijm,dm->ijd", A.bracket, F) % p
    t = np.einsum("ia,abd->ibd", F.T, B.bracket) % p
    rhs = np.einsum("jb,ibd->ijd", F.T, t) % p
    return not ((lhs - rhs) % p).any()


def subalgebra_closure(L: LieSuperalgebra, vectors) -> Subspace:
    """Span-closure of the given vectors under the bracket."""
    p = L.p
    basis, piv = span_basis(np.asarray(vectors, dtype=np.int64) % p, p)
    while True:
        brs = np.einsum("aj,ijk,bi->abk", basis, L.bracket, basis) % p
        stacked = np.vstack([basis, brs.reshape(-1, L.dim)])
        nb, npiv = span_basis(stacked, p)
        if nb.shape[0] == basis.shape[0]:
            return Subspace(nb, npiv)
        basis, piv = nb, npiv


def quotient_dims(L: LieSuperalgebra, sub: Subspace) -> tuple[int, int]:
    """Superdimension (even, odd) of a graded subspace given by rows."""
    par = L.parity
    ev = 0
    for row in sub.basis:
        nz = np.nonzero(row)[0]
        pars = set(int(par[i]) for i in nz)
        if len(pars) != 1:
            raise ValueError("subspace basis row is not homogeneous")
        ev += 1 if pars.pop() == 0 else 0
    return ev, sub.dim - ev
