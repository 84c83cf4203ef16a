"""Matrices and canonical subspaces over F_q and F_{q^m}.

Matrices are integer numpy arrays of field-element indices.  A matrix or
subspace carries a *level*: ``"Fq"`` when every entry lies in the subfield,
``"Fqm"`` for the full field.  Arithmetic is identical on both levels; the
level only restricts which scalars are allowed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import AmbientMismatch, BudgetExceeded, FieldError, SingularMatrixError
from .fields import FieldCtx

LEVELS = ("Fq", "Fqm")
DEFAULT_ENUM_BUDGET = 10**8


def _as_matrix(M, cols: int | None = None) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size else M.reshape(0, cols or 0)
    return M


def check_level(ctx: FieldCtx, M, level: str) -> None:
    if level not in LEVELS:
        raise FieldError(f"unknown level {level!r}")
    if level == "Fq" and np.size(M) and not np.all(ctx.is_in_subfield(np.asarray(M))):
        raise FieldError("matrix has entries outside F_q")


def matmul(ctx: FieldCtx, A, B) -> np.ndarray:
    """Matrix product over the field; ``A`` may carry leading batch axes."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    prod = ctx.mul(A[..., :, None], B)  # (..., k, n)
    return np.asarray(ctx.sum(prod, axis=-2))


def rref(ctx: FieldCtx, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and its pivot columns.

    Pivot choice is leftmost column first, then topmost row.  Zero rows are
    moved to the bottom so the result has the input's shape.
    """
    R = _as_matrix(M).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = ctx.mul(ctx.inv(int(R[r, c])), R[r])
        f = R[:, c].copy()
        f[r] = 0
        if f.any():
            R = np.asarray(ctx.sub(R, ctx.mul(f[:, None], R[r][None, :])))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(ctx: FieldCtx, M) -> int:
    M = _as_matrix(M)
    if M.size == 0:
        return 0
    return len(rref(ctx, M)[1])


def kernel_basis(ctx: FieldCtx, M) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : M x = 0}``."""
    M = _as_matrix(M)
    rows, cols = M.shape
    R, piv = rref(ctx, M)
    free = [c for c in range(cols) if c not in piv]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for j, fc in enumerate(free):
        out[j, fc] = 1
        for i, pc in enumerate(piv):
            out[j, pc] = ctx.neg(int(R[i, fc]))
    return out


def kernel(ctx: FieldCtx, M, level: str = "Fqm") -> "Subspace":
    M = _as_matrix(M)
    return Subspace.from_rows(ctx, kernel_basis(ctx, M), level, M.shape[1])


def left_kernel_basis(ctx: FieldCtx, M) -> np.ndarray:
    """Basis of ``{y : y M = 0}``."""
    return kernel_basis(ctx, _as_matrix(M).T)


def solve(ctx: FieldCtx, M, b) -> np.ndarray | None:
    """A solution of ``M x = b`` or None when the system is inconsistent."""
    M = _as_matrix(M)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    rows, cols = M.shape
    R, piv = rref(ctx, np.concatenate([M, b[:, None]], axis=1))
    if cols in piv:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = R[i, cols]
    return x


def inverse(ctx: FieldCtx, M) -> np.ndarray:
    M = _as_matrix(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise SingularMatrixError("inverse of a non-square matrix")
    R, piv = rref(ctx, np.concatenate([M, np.eye(n, dtype=np.int64)], axis=1))
    if piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return R[:, n:]


def is_invertible(ctx: FieldCtx, M) -> bool:
    M = _as_matrix(M)
    return M.shape[0] == M.shape[1] and rank(ctx, M) == M.shape[0]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``ambient``-dimensional space stored by its canonical RREF basis."""

    ctx: FieldCtx
    level: str
    ambient: int
    basis: np.ndarray

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows, level: str = "Fqm", ambient: int | None = None) -> "Subspace":
        rows = _as_matrix(rows, ambient)
        if ambient is None:
            ambient = rows.shape[1]
        if rows.shape[1] != ambient:
            raise AmbientMismatch(f"rows have length {rows.shape[1]}, ambient is {ambient}")
        check_level(ctx, rows, level)
        if rows.shape[0] == 0:
            return cls(ctx, level, ambient, np.zeros((0, ambient), dtype=np.int64))
        R, piv = rref(ctx, rows)
        return cls(ctx, level, ambient, R[: len(piv)].copy())

    @classmethod
    def zero(cls, ctx: FieldCtx, ambient: int, level: str = "Fqm") -> "Subspace":
        return cls(ctx, level, ambient, np.zeros((0, ambient), dtype=np.int64))

    @classmethod
    def full(cls, ctx: FieldCtx, ambient: int, level: str = "Fqm") -> "Subspace":
        return cls(ctx, level, ambient, np.eye(ambient, dtype=np.int64))

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def _check(self, other: "Subspace") -> None:
        if self.ambient != other.ambient or self.level != other.level or self.ctx is not other.ctx:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.ambient:
            raise AmbientMismatch("vector length does not match ambient dimension")
        if self.level == "Fq" and not np.all(self.ctx.is_in_subfield(v)):
            return False
        return rank(self.ctx, np.vstack([self.basis, v])) == self.dim

    __contains__ = contains

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_rows(self.ctx, np.vstack([self.basis, other.basis]), self.level, self.ambient)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ctx, self.ambient, self.level)
        # (y, z) with yA + zB = 0 gives yA in the intersection
        stacked = np.vstack([self.basis, other.basis])
        K = left_kernel_basis(self.ctx, stacked)
        if K.shape[0] == 0:
            return Subspace.zero(self.ctx, self.ambient, self.level)
        vecs = matmul(self.ctx, K[:, : self.dim], self.basis)
        return Subspace.from_rows(self.ctx, vecs, self.level, self.ambient)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.level == other.level
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.level, self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(level={self.level}, ambient={self.ambient}, dim={self.dim})"


def rowspace(ctx: FieldCtx, M, level: str = "Fqm") -> Subspace:
    return Subspace.from_rows(ctx, M, level)


def intersect(A: Subspace, B: Subspace) -> Subspace:
    return A & B


def sum_spaces(A: Subspace, B: Subspace) -> Subspace:
    return A + B


def contains(A: Subspace, v) -> bool:
    return A.contains(v)


def subspace_leq(A: Subspace, B: Subspace) -> bool:
    return A <= B


# -- enumeration ----------------------------------------------------------


def gaussian_binomial(N: int, r: int, s: int) -> int:
    """Number of r-dimensional subspaces of an N-dimensional space over F_s."""
    if r < 0 or r > N:
        return 0
    num = den = 1
    for i in range(r):
        num *= s ** (N - i) - 1
        den *= s ** (i + 1) - 1
    return num // den


def level_alphabet(ctx: FieldCtx, level: str) -> np.ndarray:
    if level == "Fq":
        return ctx.subfield
    if level == "Fqm":
        return np.arange(ctx.order, dtype=np.int64)
    raise FieldError(f"unknown level {level!r}")


def _profiles(N: int, r: int):
    """Pivot tuples in lexicographic order with their free positions."""
    for piv in itertools.combinations(range(N), r):
        pivset = set(piv)
        free = [(i, j) for i, pc in enumerate(piv) for j in range(pc + 1, N) if j not in pivset]
        yield piv, free


def subspace_count(ctx: FieldCtx, N: int, r: int, level: str = "Fqm") -> int:
    s = ctx.q if level == "Fq" else ctx.order
    return gaussian_binomial(N, r, s)


def subspace_batches(
    ctx: FieldCtx,
    N: int,
    r: int,
    level: str = "Fqm",
    start: int = 0,
    stop: int | None = None,
    batch: int = 1 << 15,
    budget: int | None = DEFAULT_ENUM_BUDGET,
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(offset, bases)`` with ``bases`` of shape ``(B, r, N)`` in RREF.

    Subspaces are indexed globally: profiles in lexicographic pivot order,
    then free entries read row-major as base-|alphabet| digits, most
    significant first.  ``[start, stop)`` selects a contiguous index range,
    which is how scans are split across workers.
    """
    total = subspace_count(ctx, N, r, level)
    if budget is not None and total > budget:
        raise BudgetExceeded(f"{r}-subspaces of {level}^{N}", total, budget)
    stop = total if stop is None else min(stop, total)
    alpha = level_alphabet(ctx, level)
    s = len(alpha)
    offset = 0
    for piv, free in _profiles(N, r):
        count = s ** len(free)
        lo, hi = max(start, offset), min(stop, offset + count)
        if lo < hi:
            rows_idx = np.array([i for i, _ in free], dtype=np.int64)
            cols_idx = np.array([j for _, j in free], dtype=np.int64)
            f = len(free)
            for b0 in range(lo, hi, batch):
                b1 = min(hi, b0 + batch)
                local = np.arange(b0 - offset, b1 - offset, dtype=np.int64)
                out = np.zeros((b1 - b0, r, N), dtype=np.int64)
                for i, pc in enumerate(piv):
                    out[:, i, pc] = 1
                rem = local
                for t in range(f - 1, -1, -1):
                    rem, d = np.divmod(rem, s)
                    out[:, rows_idx[t], cols_idx[t]] = alpha[d]
                yield b0, out
        offset += count
        if offset >= stop:
            break


def enumerate_subspaces(
    ctx: FieldCtx,
    N: int,
    r: int,
    level: str = "Fqm",
    start: int = 0,
    stop: int | None = None,
    budget: int | None = DEFAULT_ENUM_BUDGET,
) -> Iterator[Subspace]:
    """Every r-dimensional subspace exactly once, in lexicographic RREF order."""
    for _, bases in subspace_batches(ctx, N, r, level, start, stop, budget=budget):
        for B in bases:
            yield Subspace(ctx, level, N, B)


def subspace_at(ctx: FieldCtx, N: int, r: int, level: str, index: int) -> Subspace:
    for _, bases in subspace_batches(ctx, N, r, level, index, index + 1, budget=None):
        return Subspace(ctx, level, N, bases[0])
    raise IndexError(index)


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``[0, total)`` into ``parts`` contiguous near-equal ranges."""
    parts = max(1, parts)
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]
