"""Z2-graded spaces, parity-homogeneous maps and even supersymmetric forms.

Conventions used by every module downstream:

* basis order is always even block first, then odd block;
* vectors are int64 coordinate arrays, maps are matrices acting on the
  left (``M @ v``);
* a bilinear form is its Gram matrix ``B`` with ``b(x, y) = x^T B y``;
* ``b`` is supersymmetric even: zero between blocks, symmetric on the
  even block, alternating on the odd block.

Operations that take homogeneous arguments reject mixed-parity input
instead of splitting it; callers must be explicit about parity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gfp import PrimeField


@dataclass(frozen=True)
class SuperSpace:
    """A Z2-graded vector space with labelled basis, even block first."""

    even_dim: int
    odd_dim: int
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise ValueError("label count does not match dimension")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    @property
    def parity(self) -> np.ndarray:
        par = np.zeros(self.dim, dtype=np.int64)
        par[self.even_dim :] = 1
        return par

    @property
    def superdim(self) -> tuple[int, int]:
        return (self.even_dim, self.odd_dim)

    def describe(self) -> str:
        return f"{self.even_dim}|{self.odd_dim}"


def space(even_labels, odd_labels=()) -> SuperSpace:
    even_labels = tuple(even_labels)
    odd_labels = tuple(odd_labels)
    return SuperSpace(len(even_labels), len(odd_labels), even_labels + odd_labels)


def vector_parity(vec, parity, p: int):
    """Parity of a homogeneous vector, or None for 0; raises on mixed input."""
    v = np.asarray(vec, dtype=np.int64) % p
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        return None
    pars = set(int(parity[i]) for i in nz)
    if len(pars) > 1:
        raise ValueError("vector is not parity-homogeneous")
    return pars.pop()


@dataclass
class GradedLinearMap:
    """Parity-homogeneous linear map between graded spaces.

    The matrix is codomain-dim x domain-dim; entries must vanish
    whenever row parity != column parity + map parity (mod 2).
    """

    domain: SuperSpace
    codomain: SuperSpace
    parity: int
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.int64)
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise ValueError("matrix shape does not match spaces")
        bad = self.matrix[_parity_mask(self.codomain, self.domain, self.parity)]
        if bad.size and bad.any():
            raise ValueError("matrix has entries outside its parity block pattern")

    def __call__(self, vec, p: int):
        return (self.matrix @ (np.asarray(vec, dtype=np.int64) % p)) % p

    def compose(self, other: "GradedLinearMap", p: int) -> "GradedLinearMap":
        if other.codomain != self.domain:
            raise ValueError("composition domain mismatch")
        return GradedLinearMap(
            other.domain,
            self.codomain,
            (self.parity + other.parity) % 2,
            (self.matrix @ other.matrix) % p,
        )


def _parity_mask(codomain: SuperSpace, domain: SuperSpace, parity: int):
    rp = codomain.parity[:, None]
    cp = domain.parity[None, :]
    return (rp != (cp + parity) % 2)


def homogeneous_parts(mat, parity_vec) -> dict[int, np.ndarray]:
    """Split a square matrix into its even and odd parity components."""
    M = np.asarray(mat, dtype=np.int64)
    rp = np.asarray(parity_vec)[:, None]
    cp = np.asarray(parity_vec)[None, :]
    out = {}
    for pi in (0, 1):
        part = np.where((rp + cp) % 2 == pi, M, 0)
        out[pi] = part
    return out


class QuadraticSuperform:
    """Regular quadratic superform q = (q0, b) on a super space.

    Only the Gram matrix of b is stored; in odd characteristic the
    quadratic form on the even block is recovered as q0(x) = b(x,x)/2,
    which inverts the polarization b(x,y) = q0(x+y) - q0(x) - q0(y).
    """

    def __init__(self, sp: SuperSpace, gram, fld: PrimeField, regular: bool = True):
        self.space = sp
        self.field = fld
        self.gram = fld.asarray(gram)
        n0 = sp.even_dim
        B = self.gram
        if B.shape != (sp.dim, sp.dim):
            raise ValueError("gram matrix shape mismatch")
        if (B[:n0, n0:] % fld.p).any() or (B[n0:, :n0] % fld.p).any():
            raise ValueError("form must vanish between even and odd blocks")
        if ((B[:n0, :n0] - B[:n0, :n0].T) % fld.p).any():
            raise ValueError("form must be symmetric on the even block")
        if ((B[n0:, n0:] + B[n0:, n0:].T) % fld.p).any():
            raise ValueError("form must be alternating on the odd block")
        if regular:
            from .linalg import rank

            if rank(B, fld.p) != sp.dim:
                raise ValueError("form is not regular (degenerate gram matrix)")

    @property
    def p(self) -> int:
        return self.field.p

    def b(self, x, y) -> int:
        x = self.field.asarray(x)
        y = self.field.asarray(y)
        return int(x @ self.gram @ y % self.p)

    def q0(self, x) -> int:
        """q0(x) for x supported on the even block."""
        x = self.field.asarray(x)
        if x[self.space.even_dim :].any():
            raise ValueError("q0 is only defined on the even block")
        return (self.field.half * self.b(x, x)) % self.p

    def q0_table(self) -> np.ndarray:
        """Coefficient table of q0: q0(sum x_i e_i) = sum_{i<=j} Q[i,j] x_i x_j."""
        n0 = self.space.even_dim
        B0 = self.gram[:n0, :n0]
        Q = np.triu(B0, 1) % self.p
        Q[np.diag_indices(n0)] = (np.diag(B0) * self.field.half) % self.p
        return Q


def sigma(x, y, form: QuadraticSuperform) -> GradedLinearMap:
    """The rank-<=2 orthosymplectic operator attached to homogeneous x, y.

    sigma_{x,y}(z) = (-1)^{|y||z|} b(x,z) y - (-1)^{|x|(|y|+|z|)} b(y,z) x.
    """
    fld = form.field
    p = fld.p
    sp = form.space
    par = sp.parity
    x = fld.asarray(x)
    y = fld.asarray(y)
    px = vector_parity(x, par, p)
    py = vector_parity(y, par, p)
    px = 0 if px is None else px
    py = 0 if py is None else py
    Bx = (form.gram.T @ x) % p  # z -> b(x, z) coefficients
    By = (form.gram.T @ y) % p
    M = np.zeros((sp.dim, sp.dim), dtype=np.int64)
    for z in range(sp.dim):
        pz = int(par[z])
        s1 = -1 if (py * pz) % 2 else 1
        s2 = -1 if (px * (py + pz)) % 2 else 1
        M[:, z] = (s1 * int(Bx[z]) * y - s2 * int(By[z]) * x) % p
    return GradedLinearMap(sp, sp, (px + py) % 2, M)


def gamma(u, v, pairing, fld: PrimeField) -> np.ndarray:
    """gamma_{u,v} = <u|.>v + <v|.>u on a 2-dim symplectic space.

    `pairing` is the 2x2 alternating Gram matrix; returns the operator
    matrix.  These operators span sp(V) as u, v run over a basis.
    """
    P = fld.asarray(pairing)
    if P.shape != (2, 2):
        raise ValueError("gamma needs a 2-dimensional space")
    if ((P + P.T) % fld.p).any() or not (P % fld.p).any():
        raise ValueError("pairing must be a nonzero alternating form")
    u = fld.asarray(u)
    v = fld.asarray(v)
    # column z: <u|e_z> v + <v|e_z> u
    cu = (u @ P) % fld.p
    cv = (v @ P) % fld.p
    return (np.outer(v, cu) + np.outer(u, cv)) % fld.p


def osp_membership(d: GradedLinearMap | np.ndarray, form: QuadraticSuperform,
                   parity: int | None = None) -> bool:
    """Whether b(d(x), y) + (-1)^{|d||x|} b(x, d(y)) = 0 on all basis pairs."""
    fld = form.field
    p = fld.p
    if isinstance(d, GradedLinearMap):
        M = d.matrix % p
        pd = d.parity
    else:
        M = fld.asarray(d)
        if parity is None:
            raise ValueError("parity required for a bare matrix")
        pd = parity
    B = form.gram
    par = form.space.parity
    # rows x, columns y of the defect b(d e_x, e_y) + sign b(e_x, d e_y)
    t1 = (M.T @ B) % p
    signs = np.where((pd * par) % 2 == 1, -1, 1)[:, None]
    t2 = (B @ M) % p
    return not ((t1 + signs * t2) % p).any()


def osp_basis(form: QuadraticSuperform, parity: int) -> list[np.ndarray]:
    """Deterministic matrix basis of the parity component of osp(b).

    Even part: block so(even Gram) + sp(odd Gram); odd part is
    parametrized by the free even-to-odd block.  Used as ansatz space
    by the derivation solvers (derivations preserve the form — polarize
    the quadratic axiom — so this loses nothing, and results are
    re-verified against the full defining equations).
    """
    from .linalg import solve

    fld = form.field
    p = fld.p
    n0 = form.space.even_dim
    n1 = form.space.odd_dim
    n = n0 + n1
    B0 = form.gram[:n0, :n0]
    B1 = form.gram[n0:, n0:]
    inv0 = solve(B0, fld.eye(n0), p) if n0 else fld.zeros((0, 0))
    inv1 = solve(B1, fld.eye(n1), p) if n1 else fld.zeros((0, 0))
    out: list[np.ndarray] = []
    if parity == 0:
        for i in range(n0):  # antisymmetric generators on the even block
            for j in range(i + 1, n0):
                A = fld.zeros((n0, n0))
                A[i, j] = 1
                A[j, i] = p - 1
                M = fld.zeros((n, n))
                M[:n0, :n0] = (inv0 @ A) % p
                out.append(M)
        for i in range(n1):  # symmetric generators on the odd block
            for j in range(i, n1):
                S = fld.zeros((n1, n1))
                S[i, j] += 1
                S[j, i] += 1
                S %= p
                M = fld.zeros((n, n))
                M[n0:, n0:] = (inv1 @ S) % p
                out.append(M)
    else:
        for r in range(n0):  # free block X: odd -> even; partner forced
            for c in range(n1):
                X = fld.zeros((n0, n1))
                X[r, c] = 1
                Y = (inv1 @ ((X.T @ B0) % p)) % p
                M = fld.zeros((n, n))
                M[:n0, n0:] = X
                M[n0:, :n0] = Y
                out.append(M)
    return out
