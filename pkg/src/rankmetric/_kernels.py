"""Batched Gaussian elimination over a prime field F_p.

Every function takes a stack of matrices ``M`` of shape ``(B, r, c)`` with
integer entries in ``[0, p)`` and works on all ``B`` matrices at once.  For
``p == 2`` rows are bit-packed into int64 words when they fit (at most 62
bits including any augmented identity block); otherwise a plain modular
array path is used.

Elimination is row-ordered: row ``i`` is reduced by the pivots of rows
``0..i-1`` and then pivots on its first nonzero column.  Nonzero reduced rows
are therefore always linearly independent.
"""

from __future__ import annotations

import numpy as np

_PACK_BITS = 62


def _inverses(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def pack_bits(M: np.ndarray) -> np.ndarray:
    """Pack the last axis of a 0/1 array into int64 words (bit j = column j)."""
    c = M.shape[-1]
    shifts = np.arange(c, dtype=np.int64)
    return (M.astype(np.int64) << shifts).sum(axis=-1)


def unpack_bits(words: np.ndarray, c: int) -> np.ndarray:
    shifts = np.arange(c, dtype=np.int64)
    return ((words[..., None] >> shifts) & 1).astype(np.uint8)


def _echelon_gf2(rows: np.ndarray, c: int) -> tuple[np.ndarray, np.ndarray]:
    rows = rows.copy()
    B, r = rows.shape
    low = np.int64((1 << c) - 1)
    has = np.zeros((B, r), dtype=bool)
    for i in range(r):
        x = rows[:, i] & low
        nz = x != 0
        has[:, i] = nz
        if i + 1 == r or not nz.any():
            continue
        bit = x & -x
        later = rows[:, i + 1:]
        hit = (later & bit[:, None]) != 0
        rows[:, i + 1:] = later ^ np.where(hit, rows[:, i:i + 1], 0)
    return rows, has


def _echelon_modp(M: np.ndarray, p: int, c: int) -> tuple[np.ndarray, np.ndarray]:
    M = M.astype(np.int64, copy=True)
    B, r, _ = M.shape
    inv = _inverses(p)
    has = np.zeros((B, r), dtype=bool)
    idx = np.arange(B)
    for i in range(r):
        row = M[:, i, :]
        nz = row[:, :c] != 0
        present = nz.any(axis=1)
        has[:, i] = present
        if not present.any():
            continue
        pc = nz.argmax(axis=1)
        pv = np.where(present, row[idx, pc], 1)
        row = (row * inv[pv][:, None]) % p
        M[:, i, :] = row
        if i + 1 == r:
            continue
        below = M[:, i + 1:, :]
        f = below[idx, :, pc] * present[:, None]
        M[:, i + 1:, :] = (below - f[:, :, None] * row[:, None, :]) % p
    return M, has


def echelon(p: int, M: np.ndarray, pivot_cols: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Row-ordered forward elimination.

    Only the first ``pivot_cols`` columns (default: all) are eligible as pivots.
    Returns the reduced stack and a ``(B, r)`` mask of rows that carry a pivot.
    """
    M = np.asarray(M)
    B, r, c = M.shape
    if pivot_cols is None:
        pivot_cols = c
    if r == 0 or B == 0:
        return M.astype(np.int64), np.zeros((B, r), dtype=bool)
    if p == 2 and c <= _PACK_BITS:
        rows, has = _echelon_gf2(pack_bits(M), pivot_cols)
        return unpack_bits(rows, c).astype(np.int64), has
    return _echelon_modp(M, p, pivot_cols)


def rank(p: int, M: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices over F_p, shape ``(B,)``."""
    M = np.asarray(M)
    B, r, c = M.shape
    if r == 0 or c == 0:
        return np.zeros(B, dtype=np.int64)
    if p == 2 and c <= _PACK_BITS:
        _, has = _echelon_gf2(pack_bits(M), c)
    else:
        _, has = _echelon_modp(M, p, c)
    return has.sum(axis=1)


def left_kernel(p: int, M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Left kernels ``{y : y M = 0}`` of a stack of ``(r, c)`` matrices.

    Returns ``(K, mask)`` with ``K`` of shape ``(B, r, r)``: rows where
    ``mask`` is true form a basis of the kernel, other rows are junk.
    """
    M = np.asarray(M)
    B, r, c = M.shape
    eye = np.broadcast_to(np.eye(r, dtype=np.int64), (B, r, r))
    aug = np.concatenate([M.astype(np.int64), eye], axis=2)
    R, has = echelon(p, aug, pivot_cols=c)
    return R[:, :, c:], ~has


def rank_one(p: int, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return int(rank(p, M[None])[0])


def inverse_mod_p(M, p: int) -> np.ndarray:
    """Inverse of a single square matrix over F_p; raises ValueError if singular."""
    M = np.asarray(M, dtype=np.int64) % p
    n = M.shape[0]
    A = np.concatenate([M, np.eye(n, dtype=np.int64)], axis=1)
    inv = _inverses(p)
    for col in range(n):
        nz = np.nonzero(A[col:, col])[0]
        if len(nz) == 0:
            raise ValueError("matrix is singular over F_p")
        piv = col + nz[0]
        A[[col, piv]] = A[[piv, col]]
        A[col] = (A[col] * inv[A[col, col]]) % p
        f = A[:, col].copy()
        f[col] = 0
        A = (A - f[:, None] * A[col][None, :]) % p
    return A[:, n:]


def rank_packed(words: np.ndarray, c: int) -> np.ndarray:
    """Ranks of stacks of bit-packed F_2 rows, ``words`` of shape ``(B, r)``."""
    if words.shape[1] == 0 or c == 0:
        return np.zeros(words.shape[0], dtype=np.int64)
    _, has = _echelon_gf2(words, c)
    return has.sum(axis=1)
