"""Dense linear algebra over a GaloisField on integer-encoded numpy arrays.

Plain Gaussian elimination with first-nonzero pivoting; results are exact and
deterministic.  All matrices are 2-D ``int64`` arrays of element encodings.
"""

from __future__ import annotations

import numpy as np

from gkcodes.gf import GaloisField


def _as_matrix(M) -> np.ndarray:
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return A


def rref(F: GaloisField, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.

    Returns the nonzero rows of the RREF and the list of pivot columns.
    """
    R = _as_matrix(M)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r, c:] = F.vmul(R[r, c:], F.vinv(R[r, c]))
        col = R[:, c].copy()
        col[r] = 0
        targets = np.flatnonzero(col)
        if targets.size:
            # row r is zero left of c
            R[targets, c:] = F.vsub(R[targets, c:], F.vmul(col[targets, None], R[r, None, c:]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F: GaloisField, M) -> int:
    """Rank by forward elimination (no back substitution)."""
    R = _as_matrix(M)
    rows, cols = R.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        below = r + 1 + np.flatnonzero(R[r + 1 :, c])
        if below.size:
            factor = F.vmul(R[below, c], F.vinv(R[r, c]))
            R[below, c:] = F.vsub(R[below, c:], F.vmul(factor[:, None], R[r, None, c:]))
        r += 1
    return r


def independent_rows(F: GaloisField, M) -> list[int]:
    """Indices of a maximal independent set of rows, chosen greedily in order.

    Row ``i`` is kept iff it is not in the span of the rows kept before it.
    """
    R = _as_matrix(M)
    rows = R.shape[0]
    kept: list[int] = []
    for r in range(rows):
        nz = np.flatnonzero(R[r])
        if nz.size == 0:
            continue
        c = int(nz[0])
        kept.append(r)
        below = r + 1 + np.flatnonzero(R[r + 1 :, c])
        if below.size:
            factor = F.vmul(R[below, c], F.vinv(R[r, c]))
            R[below, c:] = F.vsub(R[below, c:], F.vmul(factor[:, None], R[r, None, c:]))
    return kept


def nullspace(F: GaloisField, M, ncols: int | None = None, dtype=np.int64) -> np.ndarray:
    """Basis of {x : M x = 0}, one basis vector per row.

    The basis is systematic on the non-pivot columns of rref(M): row t has a 1
    in the t-th free column and zeros in the other free columns.  This form is
    determined by the row space of M alone.
    """
    M = _as_matrix(M)
    n = M.shape[1] if ncols is None else ncols
    R, pivots = rref(F, M) if M.size else (np.zeros((0, n), dtype=np.int64), [])
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    N = np.zeros((len(free), n), dtype=dtype)
    if free:
        N[np.arange(len(free)), free] = 1
        if pivots:
            N[:, pivots] = F.vneg(R[:, free].T)
    return N


def matmul(F: GaloisField, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        col = A[:, t]
        if not col.any():
            continue
        acc = F.vadd(acc, F.vmul(col[:, None], B[None, t, :]))
    return acc


def matvec(F: GaloisField, A, x) -> np.ndarray:
    return matmul(F, A, np.asarray(x, dtype=np.int64)[:, None])[:, 0]


def left_kernel(F: GaloisField, M) -> np.ndarray:
    """Basis of {c : c M = 0} as rows."""
    return nullspace(F, np.asarray(M, dtype=np.int64).T, ncols=np.asarray(M).shape[0])


def product_is_zero(F: GaloisField, A, B, rng: np.random.Generator | None = None, trials: int = 0) -> bool:
    """Decide A @ B.T == 0.

    With ``trials == 0`` the full product is formed.  Otherwise a randomized
    check is used: A (B^T r) for ``trials`` random vectors r; a nonzero
    product survives one trial with probability at most 1/|F|.
    """
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if trials == 0:
        return not matmul(F, A, B.T).any()
    rng = rng or np.random.default_rng(0)
    for _ in range(trials):
        r = rng.integers(0, F.order, size=B.shape[0])
        y = _vecmat(F, r, B)  # r^T B, length n
        if matvec(F, A, y).any():
            return False
    return True


def _vecmat(F: GaloisField, x, B) -> np.ndarray:
    """x^T B accumulated row by row of B."""
    acc = np.zeros(B.shape[1], dtype=np.int64)
    for i, xi in enumerate(np.asarray(x, dtype=np.int64)):
        if xi:
            acc = F.vadd(acc, F.vmul(xi, B[i]))
    return acc


def shortening_generator(F: GaloisField, G, positions) -> np.ndarray:
    """Generator of {c in rowspace(G) : c vanishes on positions}, positions deleted.

    G must have independent rows.  With K a left-kernel basis of G[:, S] that
    is systematic on the free rows, K @ G = G[free] + K[:, piv] @ G[piv].
    """
    G = np.asarray(G, dtype=np.int64)
    S = list(positions)
    keep = np.setdiff1d(np.arange(G.shape[1]), S)
    if not S:
        return G[:, keep].copy()
    R, piv = rref(F, G[:, S].T)
    pset = set(piv)
    free = [r for r in range(G.shape[0]) if r not in pset]
    out = G[free][:, keep]
    if piv and free:
        coeff = F.vneg(R[:, free].T)  # (|free|, |piv|)
        out = F.vadd(out, matmul(F, coeff, G[piv][:, keep]))
    return out
