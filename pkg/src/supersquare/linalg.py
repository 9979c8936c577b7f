"""Dense exact linear algebra over GF(p): RREF, kernel, solve, spans.

All matrices are numpy int64 arrays of canonical residues.  Row
reduction is vectorized over full rows; incremental helpers keep the
large systems (derivation algebras, ideal closures in dimension ~250)
inside numpy instead of per-entry Python loops.  Kernel bases come back
in reduced-row-echelon, pivot-sorted order so downstream structure
constants are reproducible run to run.
"""

from __future__ import annotations

import numpy as np


def rref(mat, p: int):
    """Reduced row echelon form over GF(p).

    Returns (R, pivots) where R holds the nonzero rows only and
    pivots[i] is the pivot column of row i.
    """
    A = np.asarray(mat, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        a = int(A[r, c])
        if a != 1:
            A[r] = (A[r] * pow(a, p - 2, p)) % p
        other = np.nonzero(A[:, c])[0]
        other = other[other != r]
        if other.size:
            A[other] = (A[other] - np.outer(A[other, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(mat, p: int) -> int:
    return rref(mat, p)[0].shape[0]


def kernel(mat, p: int) -> np.ndarray:
    """Basis of the right null space of `mat`, as rows.

    The vectors are independent, annihilated by the matrix, and span
    the kernel (rank-nullity).  Output is RREF-canonical.
    """
    A = np.asarray(mat, dtype=np.int64)
    rows, cols = A.shape
    R, piv = rref(A, p)
    free = [c for c in range(cols) if c not in piv]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    K = np.zeros((len(free), cols), dtype=np.int64)
    for idx, f in enumerate(free):
        K[idx, f] = 1
        for j, pc in enumerate(piv):
            K[idx, pc] = (-R[j, f]) % p
    KR, _ = rref(K, p)
    return KR


def solve(A, B, p: int) -> np.ndarray:
    """Solve A @ X = B over GF(p) for X; raises if inconsistent.

    A is (m, n) with full column rank; B is (m,) or (m, k).
    """
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    vec = B.ndim == 1
    if vec:
        B = B[:, None]
    m, n = A.shape
    aug = np.hstack([A, B])
    R, piv = rref(aug, p)
    if len(piv) and piv[-1] >= n and any(pc >= n for pc in piv):
        raise ValueError("inconsistent linear system")
    if len([pc for pc in piv if pc < n]) < n:
        raise ValueError("solve requires full column rank")
    X = R[:n, n:]
    if (np.asarray(A, dtype=np.int64) @ X % p != B % p).any():
        raise ValueError("inconsistent linear system")
    return X[:, 0] if vec else X


def span_basis(vectors, p: int, chunk: int = 8192):
    """RREF basis (rows, pivots) of the row space of `vectors`.

    Rows are folded in chunks: each chunk is first reduced against the
    current basis with one matrix product, so only genuinely new
    directions reach the row-reduction.  Handles tall stacks (10^5
    rows) that a direct RREF would grind through.
    """
    V = np.asarray(vectors, dtype=np.int64)
    if V.ndim != 2:
        V = V.reshape(-1, V.shape[-1])
    cols = V.shape[1]
    basis = np.zeros((0, cols), dtype=np.int64)
    pivots: list[int] = []
    for start in range(0, V.shape[0], chunk):
        C = V[start : start + chunk] % p
        if basis.shape[0]:
            C = (C - C[:, pivots] @ basis) % p
        if not C.any():
            continue
        stacked = np.vstack([basis, C])
        basis, pivots = rref(stacked, p)
        if basis.shape[0] == cols:
            break
    return basis, pivots


def in_span(basis, pivots, vectors, p: int) -> bool:
    """Whether all row `vectors` lie in the span of an RREF `basis`."""
    V = np.asarray(vectors, dtype=np.int64).reshape(-1, basis.shape[1]) % p
    if basis.shape[0] == 0:
        return not V.any()
    red = (V - V[:, pivots] @ basis) % p
    return not red.any()


def coords_in_basis(basis, vectors, p: int) -> np.ndarray:
    """Coordinates of row `vectors` in the given independent row basis.

    Raises if some vector is outside the span.
    """
    B = np.asarray(basis, dtype=np.int64)
    V = np.asarray(vectors, dtype=np.int64)
    vec = V.ndim == 1
    if vec:
        V = V[None, :]
    X = solve(B.T % p, V.T % p, p)
    return X[:, 0] if vec else X.T


def kernel_refine(equation_batches, n_unknowns: int, p: int, start=None):
    """Common kernel of a stream of equation matrices.

    Maintains a row basis K of the running solution space and replaces
    it by the kernel of (E @ K.T) after each batch; the final K is
    RREF-canonical.  Equivalent to one kernel of the stacked system but
    far cheaper when early batches already slash the dimension.
    """
    if start is None:
        K = np.eye(n_unknowns, dtype=np.int64)
    else:
        K = np.asarray(start, dtype=np.int64) % p
    for E in equation_batches:
        if K.shape[0] == 0:
            break
        E = np.asarray(E, dtype=np.int64) % p
        if not E.any():
            continue
        D = _matmul_mod(E, K.T, p)
        if not D.any():
            continue
        N = kernel(D, p)
        K = _matmul_mod(N, K, p)
    KR, _ = rref(K, p)
    return KR


def _matmul_mod(A, B, p: int) -> np.ndarray:
    """Exact A @ B mod p via float64 BLAS when the sizes warrant it."""
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    # residues < p and inner dim n keep products below n*(p-1)^2 << 2^53
    if A.shape[0] * A.shape[1] * (B.shape[1] if B.ndim == 2 else 1) > 1 << 20:
        C = np.matmul(A.astype(np.float64), B.astype(np.float64))
        return C.astype(np.int64) % p
    return (A @ B) % p


def matrix_to_text(mat, p: int) -> str:
    """Matrix text format: first line "rows cols p", then row-major residues."""
    A = np.asarray(mat, dtype=np.int64) % p
    lines = [f"{A.shape[0]} {A.shape[1]} {p}"]
    lines += [" ".join(str(int(v)) for v in row) for row in A]
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str):
    """Inverse of :func:`matrix_to_text`; returns (matrix, p)."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    rows, cols, p = (int(t) for t in lines[0].split())
    data = [[int(t) for t in ln.split()] for ln in lines[1 : 1 + rows]]
    A = np.asarray(data, dtype=np.int64)
    if A.shape != (rows, cols):
        raise ValueError("matrix text header does not match body")
    return A % p, p
