"""The two-algebra Lie superalgebra g(S, S') behind the magic supersquare.

g(S, S') = (tri(S) + tri(S')) + iota_0(S x S') + iota_1(S x S') +
iota_2(S x S'), with the bracket acting as: the trialities bracket
componentwise and act slotwise on the iota blocks; adjacent iota blocks
multiply into the third through the two bullet products; equal iota
blocks land in the trialities through the distinguished t-elements and
the two norms, with Koszul signs throughout.

The ambient basis is ordered tri(S), tri(S'), iota blocks in row-major
S x S' order, then re-sorted even parities first; the recorded
decomposition keeps every block addressable after the sort.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .composition import SymCompSuperalgebra, catalog
from .gfp import PrimeField
from .liesuper import LieSuperalgebra, assert_lie
from .spaces import SuperSpace
from .triality import TrialityAlgebra, compute_tri_of, t_element, theta


@dataclass
class MagicSquareDecomposition:
    """Index bookkeeping for the blocks of g(S, S') after parity sorting."""

    S: SymCompSuperalgebra
    Sp: SymCompSuperalgebra
    triS: TrialityAlgebra
    triSp: TrialityAlgebra
    idx_triS: np.ndarray        # (nt,) final positions
    idx_triSp: np.ndarray
    idx_iota: np.ndarray        # (3, dim S, dim S') final positions
    perm: np.ndarray            # original position -> final position

    def iota(self, i: int, p: int, q: int) -> int:
        return int(self.idx_iota[i, p, q])


def magic_square(S: SymCompSuperalgebra, Sp: SymCompSuperalgebra,
                 check: bool = False) -> tuple[LieSuperalgebra, MagicSquareDecomposition]:
    """Build g(S, S') and its block decomposition.

    With check=True the graded Jacobi identity is verified exhaustively
    before returning (a failure is a construction bug, not user error).
    """
    if S.p != Sp.p:
        raise ValueError("mixed characteristics")
    p = S.p
    fld = S.field
    tS = compute_tri_of(S)
    tSp = compute_tri_of(Sp)
    n, m = S.dim, Sp.dim
    nt, ntp = tS.dim, tSp.dim
    parS, parSp = S.parity, Sp.parity
    N = nt + ntp + 3 * n * m

    # parity vector in pre-sort block order
    par = np.concatenate([
        tS.parity, tSp.parity,
        np.concatenate([((parS[:, None] + parSp[None, :]) % 2).ravel()] * 3),
    ]).astype(np.int64)

    off_tS, off_tSp, off_i = 0, nt, nt + ntp

    def iota_pos(i, pi, qi):
        return off_i + i * n * m + pi * m + qi

    # coordinates of theta^i(t_{x,y}) over basis pairs, for both factors
    TcS = _theta_t_coords(S, tS)
    TcSp = _theta_t_coords(Sp, tSp)

    C = np.zeros((N, N, N), dtype=np.int64)

    C[:nt, :nt, :nt] = tS.bracket
    C[off_tSp:off_i, off_tSp:off_i, off_tSp:off_i] = tSp.bracket

    sgnS = np.where(parS % 2 == 1, -1, 1)
    sgnSp = np.where(parSp % 2 == 1, -1, 1)

    # triality action on the iota blocks, and its mirror
    for i in range(3):
        blk = slice(off_i + i * n * m, off_i + (i + 1) * n * m)
        if nt:
            DS = np.stack([el.slots()[i] for el in tS.basis])  # (a, r, p)
            act = np.einsum("arp,qs->apqrs", DS, np.eye(m, dtype=np.int64)) % p
            act = act.reshape(nt, n * m, n * m)
            C[:nt, blk, blk] = act
            tpar = tS.parity[:, None]
            ipar = ((parS[:, None] + parSp[None, :]) % 2).ravel()[None, :]
            msign = np.where((tpar * ipar) % 2 == 1, -1, 1)[:, :, None]
            C[blk.start:blk.stop, :nt, blk] = (-msign * act).transpose(1, 0, 2) % p
        if ntp:
            DSp = np.stack([el.slots()[i] for el in tSp.basis])  # (b, s, q)
            sleft = np.where((tSp.parity[:, None] * parS[None, :]) % 2 == 1, -1, 1)
            act = np.einsum("bsq,bp,pr->bpqrs", DSp,
                            sleft, np.eye(n, dtype=np.int64)) % p
            act = act.reshape(ntp, n * m, n * m)
            C[off_tSp:off_i, blk, blk] = act
            tpar = tSp.parity[:, None]
            ipar = ((parS[:, None] + parSp[None, :]) % 2).ravel()[None, :]
            msign = np.where((tpar * ipar) % 2 == 1, -1, 1)[:, :, None]
            C[blk.start:blk.stop, off_tSp:off_i, blk] = (-msign * act).transpose(1, 0, 2) % p

    # adjacent iota blocks multiply into the third
    PS, PSp = S.product % p, Sp.product % p
    for i in range(3):
        j = (i + 1) % 3
        k = (i + 2) % 3
        bi = slice(off_i + i * n * m, off_i + (i + 1) * n * m)
        bj = slice(off_i + j * n * m, off_i + (j + 1) * n * m)
        bk = slice(off_i + k * n * m, off_i + (k + 1) * n * m)
        sign = np.where((parSp[None, :, None, None] * parS[None, None, :, None]) % 2 == 1,
                        -1, 1)
        T = np.einsum("pru,qsv->pqrsuv", PS, PSp) % p
        T = (T * sign[..., None, None]) % p
        C[bi, bj, bk] = T.reshape(n * m, n * m, n * m)
        # mirror with the super sign of the two iota parities
        pi_ = ((parS[:, None] + parSp[None, :]) % 2).ravel()
        msign = np.where((pi_[:, None] * pi_[None, :]) % 2 == 1, -1, 1)
        C[bj, bi, bk] = (-(msign.T)[:, :, None] *
                         C[bi, bj, bk].transpose(1, 0, 2)) % p

    # equal iota blocks land in the trialities
    x = parS[:, None, None, None]
    xp = parSp[None, :, None, None]
    y = parS[None, None, :, None]
    yp = parSp[None, None, None, :]
    e1 = (x * xp + x * yp + y * yp) % 2
    e2 = (y * xp) % 2
    s1 = np.where(e1 == 1, -1, 1)
    s2 = np.where(e2 == 1, -1, 1)
    BS, BSp = S.norm.gram % p, Sp.norm.gram % p
    for i in range(3):
        bi = slice(off_i + i * n * m, off_i + (i + 1) * n * m)
        if nt:
            T1 = np.einsum("qs,pra->pqrsa", BSp, TcS[i]) % p
            T1 = (T1 * s1[..., None]) % p
            C[bi, bi, :nt] = T1.reshape(n * m, n * m, nt)
        if ntp:
            T2 = np.einsum("pr,qsa->pqrsa", BS, TcSp[i]) % p
            T2 = (T2 * s2[..., None]) % p
            C[bi, bi, off_tSp:off_i] = T2.reshape(n * m, n * m, ntp)

    C %= p

    # sort parities even-first (stable), keep the permutation
    order = np.argsort(par, kind="stable")
    perm = np.empty(N, dtype=np.int64)
    perm[order] = np.arange(N)
    Cs = C[order][:, order][:, :, order]
    pars = par[order]

    labels = _labels(S, Sp, tS, tSp)
    labels_sorted = tuple(labels[i] for i in order)
    ne = int(np.sum(pars == 0))
    spc = SuperSpace(ne, N - ne, labels_sorted)
    L = LieSuperalgebra(spc, fld, Cs, provenance=f"g({S.name},{Sp.name})")

    dec = MagicSquareDecomposition(
        S, Sp, tS, tSp,
        idx_triS=perm[:nt].copy(),
        idx_triSp=perm[off_tSp:off_i].copy(),
        idx_iota=perm[off_i:].reshape(3, n, m).copy(),
        perm=perm,
    )
    if check:
        assert_lie(L)
    return L, dec


def _theta_t_coords(S: SymCompSuperalgebra, tS: TrialityAlgebra) -> list[np.ndarray]:
    """Coordinates of theta^i(t_{e_p, e_r}) in the tri(S) basis, i = 0, 1, 2."""
    n = S.dim
    p = S.p
    out = [np.zeros((n, n, tS.dim), dtype=np.int64) for _ in range(3)]
    if tS.dim == 0:
        # t elements must then vanish identically
        I = np.eye(n, dtype=np.int64)
        for a in range(n):
            for b in range(n):
                if t_element(I[a], I[b], S).flat().any():
                    raise AssertionError("nonzero t-element with empty triality")
        return out
    I = np.eye(n, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            el = t_element(I[a], I[b], S, tS)
            for i in range(3):
                out[i][a, b] = tS.coords(el)
                el = theta(el)
    return out


def _labels(S, Sp, tS, tSp) -> list[str]:
    labels = [f"tS{a}" for a in range(tS.dim)]
    labels += [f"tS'{b}" for b in range(tSp.dim)]
    for i in range(3):
        for ls in S.space.labels:
            for lq in Sp.space.labels:
                labels.append(f"i{i}({ls}|{lq})")
    return labels


@lru_cache(maxsize=None)
def magic_square_named(nameA: str, nameB: str, p: int = 3):
    return magic_square(catalog(nameA, p), catalog(nameB, p))


def flip_map(g: LieSuperalgebra, dec: MagicSquareDecomposition,
             gf: LieSuperalgebra, decf: MagicSquareDecomposition) -> np.ndarray:
    """The evident isomorphism g(S, S') -> g(S', S).

    Trialities swap roles; iota_i(x tensor x') goes to
    (-1)^{|x||x'|} iota_i(x' tensor x).
    """
    p = g.p
    F = np.zeros((gf.dim, g.dim), dtype=np.int64)
    for a in range(dec.triS.dim):
        F[decf.idx_triSp[a], dec.idx_triS[a]] = 1
    for b in range(dec.triSp.dim):
        F[decf.idx_triS[b], dec.idx_triSp[b]] = 1
    parS, parSp = dec.S.parity, dec.Sp.parity
    for i in range(3):
        for pi in range(dec.S.dim):
            for qi in range(dec.Sp.dim):
                s = -1 if (parS[pi] * parSp[qi]) % 2 else 1
                F[decf.iota(i, qi, pi), dec.iota(i, pi, qi)] = s % p
    return F
