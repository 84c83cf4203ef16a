"""F_{q^m}-linear rank-metric codes.

A code is stored through a k x n generator matrix over F_{q^m}.  Codeword
scans run over one representative per projective point, since every
quantity computed here is invariant under nonzero scalars.
"""

from __future__ import annotations

import logging

import numpy as np

from . import _kernels, linalg
from .errors import BudgetExceeded, DegenerateCodeError, InvariantViolation, SingularMatrixError
from .fields import FieldCtx
from .linalg import DEFAULT_ENUM_BUDGET, Subspace
from .results import Verdict

log = logging.getLogger("rankmetric")

_BITSET_LIMIT = 1 << 12


class RankCode:
    """A k-dimensional F_{q^m}-subspace of F_{q^m}^n given by a generator matrix."""

    def __init__(self, ctx: FieldCtx, G):
        G = np.asarray(G, dtype=np.int64)
        if G.ndim != 2 or G.shape[0] == 0:
            raise ValueError("generator must be a non-empty k x n matrix")
        self.ctx = ctx
        self.G = G
        self.k, self.n = G.shape
        if self.k > self.n:
            raise ValueError("k exceeds n")
        if np.any(G < 0) or np.any(G >= ctx.order):
            raise ValueError("generator entries are not field elements")
        if linalg.rank(ctx, G) != self.k:
            raise ValueError("generator rows are F_{q^m}-dependent")

    def __repr__(self) -> str:
        return f"RankCode(n={self.n}, k={self.k}, q={self.ctx.q}, m={self.ctx.m})"

    @property
    def space(self) -> Subspace:
        return Subspace.from_rows(self.ctx, self.G, "Fqm")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankCode):
            return NotImplemented
        return self.ctx is other.ctx and self.space == other.space

    def __hash__(self) -> int:
        return hash(self.space)

    def projective_count(self) -> int:
        return linalg.subspace_count(self.ctx, self.k, 1)

    def codeword_batches(self, budget: int | None = DEFAULT_ENUM_BUDGET, batch: int = 1 << 14):
        """Yield ``(offset, codewords)``, one codeword per projective point."""
        for off, xs in linalg.subspace_batches(self.ctx, self.k, 1, "Fqm", batch=batch, budget=budget):
            yield off, linalg.matmul(self.ctx, xs[:, 0, :], self.G)


# -- weights and supports ----------------------------------------------------


def rank_weights(ctx: FieldCtx, V) -> np.ndarray:
    """Rank weights of a stack of vectors ``V`` (..., n)."""
    V = np.asarray(V, dtype=np.int64)
    lead = V.shape[:-1]
    n = V.shape[-1]
    V = V.reshape(-1, n)
    prod = np.asarray(ctx.mul(ctx.fq_pbasis[None, None, :], V[:, :, None]))  # (B, n, h)
    rows = ctx.digits[prod].reshape(V.shape[0], n * ctx.h, ctx.e)
    return (_kernels.rank(ctx.p, rows) // ctx.h).reshape(lead)


def rank_weight(ctx: FieldCtx, v) -> int:
    """dim over F_q of the span of the entries of v."""
    return int(rank_weights(ctx, np.asarray(v, dtype=np.int64)[None])[0])


def rank_support(ctx: FieldCtx, v) -> Subspace:
    """Row space in F_q^n of the m x n coordinate matrix of v."""
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    A = ctx.expand(v).T  # (m, n), entries in F_q
    return Subspace.from_rows(ctx, A, "Fq", v.shape[0])


def _support_rows(ctx: FieldCtx, X: np.ndarray) -> np.ndarray:
    """F_p spanning rows of the supports of codewords ``X`` (B, n): shape (B, m*h, n*h)."""
    B, n = X.shape
    A = ctx.expand(X)  # (B, n, m) over F_q
    Z = np.asarray(ctx.mul(ctx.fq_pbasis[None, None, None, :], A[..., None]))  # (B, n, m, h)
    C = ctx.fq_coords(Z)  # (B, n, m, h, h') F_p digits
    return C.transpose(0, 2, 3, 1, 4).reshape(B, ctx.m * ctx.h, n * ctx.h)


def _support_bitsets(p: int, rows: np.ndarray) -> np.ndarray:
    """Member bitsets (B, ceil(p^c / 8)) of the F_p-spans of ``rows`` (B, r, c)."""
    B, r, c = rows.shape
    R, has = _kernels.echelon(p, rows)
    # keep at most c independent rows per span; pad with zero rows
    keep = np.zeros((B, c, c), dtype=np.int64)
    order = np.argsort(~has, axis=1, kind="stable")[:, :c]
    sel = np.take_along_axis(R, order[:, :, None], axis=1)
    keep[:, : sel.shape[1]] = sel * np.take_along_axis(has, order, axis=1)[:, :, None]
    coeffs = np.array(np.unravel_index(np.arange(p**c), (p,) * c)).T  # (p^c, c)
    pw = p ** np.arange(c, dtype=np.int64)
    out = []
    for b0 in range(0, B, 256):
        members = np.einsum("ac,bcd->bad", coeffs, keep[b0:b0 + 256]) % p  # (b, p^c, c)
        bits = np.zeros((members.shape[0], p**c), dtype=bool)
        np.put_along_axis(bits, members @ pw, True, axis=1)
        out.append(np.packbits(bits, axis=1))
    return np.concatenate(out)


def min_distance(C: RankCode, budget: int | None = DEFAULT_ENUM_BUDGET) -> int:
    best = C.n + 1
    for _, X in C.codeword_batches(budget=budget):
        best = min(best, int(rank_weights(C.ctx, X).min()))
    return best


# -- generalized weights -------------------------------------------------------


def _fqm_ranks(ctx: FieldCtx, M: np.ndarray) -> np.ndarray:
    """F_{q^m}-ranks of a stack (B, r, n) through the F_p-rank of {x^a M_i}."""
    B, r, n = M.shape
    X = np.asarray(ctx.mul(ctx.xpow[None, None, :, None], M[:, :, None, :]))  # (B, r, e, n)
    D = ctx.digits[X].reshape(B, r * ctx.e, n * ctx.e)
    return _kernels.rank(ctx.p, D) // ctx.e


def galois_max_intersections(C: RankCode, t: int, budget: int | None = DEFAULT_ENUM_BUDGET,
                             batch: int = 1 << 13) -> tuple[int, int]:
    """max dim(A ∩ C) over Galois-closed A of dimension t, and the count scanned.

    A runs over F_{q^m}-spans of t-dimensional subspaces S of F_q^n, and
    dim(A ∩ C) = t + k - rank [S; G].
    """
    ctx, k, n = C.ctx, C.k, C.n
    total = linalg.subspace_count(ctx, n, t, "Fq")
    if budget is not None and total > budget:
        raise BudgetExceeded(f"{t}-subspaces of F_q^{n}", total, budget)
    best = 0
    for _, S in linalg.subspace_batches(ctx, n, t, "Fq", batch=batch, budget=None):
        M = np.concatenate([S, np.broadcast_to(C.G, (S.shape[0], k, n))], axis=1)
        best = max(best, int((t + k - _fqm_ranks(ctx, M)).max()))
        if best == min(t, k):
            break
    return best, total


def generalized_weights_galois(C: RankCode, j: int | None = None,
                               budget: int | None = DEFAULT_ENUM_BUDGET) -> int | tuple[int, ...]:
    """d_j from its definition: min dim A over Galois-closed A with dim(A ∩ C) >= j.

    With ``j=None`` the whole profile (d_1, ..., d_k) is returned.
    """
    target = C.k if j is None else j
    if not 1 <= target <= C.k:
        raise ValueError(f"j must lie in [1, {C.k}]")
    d: list[int] = []
    for t in range(1, C.n + 1):
        best, _ = galois_max_intersections(C, t, budget)
        while len(d) < best and len(d) < target:
            d.append(t)
        if len(d) >= target:
            break
    if j is not None:
        return d[j - 1]
    from .qsystems import check_profile

    check_profile(d, C.n, C.k, C.ctx.m)
    return tuple(d)


def galois_profile(C: RankCode, budget: int | None = DEFAULT_ENUM_BUDGET) -> tuple[int, ...]:
    return generalized_weights_galois(C, None, budget)


def generalized_weights_geometric(C: RankCode, budget: int | None = DEFAULT_ENUM_BUDGET,
                                  workers: int = 1) -> tuple[int, ...]:
    """Profile through the associated system: d_i = n - max weight of a (k-i)-space."""
    from .qsystems import d_profile, phi

    return d_profile(phi(C), budget=budget, workers=workers)


def check_wei_duality(d, d_dual, n: int) -> None:
    """Raise unless {d_i} and {n + 1 - d_j^perp} partition {1, ..., n}."""
    left = set(d)
    right = {n + 1 - x for x in d_dual}
    if left & right or left | right != set(range(1, n + 1)) or len(left) + len(right) != n:
        raise InvariantViolation(f"Wei-type duality fails for {tuple(d)} and dual {tuple(d_dual)}")


# -- duality, predicates, isometries ------------------------------------------


def dual_code(C: RankCode) -> RankCode:
    """{u : u v^T = 0 for every v in C}."""
    if C.k == C.n:
        raise ValueError("the dual of the full space is the zero code")
    return RankCode(C.ctx, linalg.kernel_basis(C.ctx, C.G))


def singleton_saturated(n: int, k: int, m: int, d1: int) -> bool:
    return m * k == min(m * (n - d1 + 1), n * (m - d1 + 1))


def is_MRD(C: RankCode, budget: int | None = DEFAULT_ENUM_BUDGET) -> bool:
    return singleton_saturated(C.n, C.k, C.ctx.m, min_distance(C, budget))


def is_nondegenerate(C: RankCode) -> bool:
    """The n columns of G are F_q-independent."""
    from .qsystems import fq_dim

    return fq_dim(C.ctx, C.G.T) == C.n


def is_minimal_direct(C: RankCode, budget: int | None = DEFAULT_ENUM_BUDGET) -> Verdict:
    """No two non-proportional codewords have nested rank supports.

    On failure the witness holds codewords u, v with supp(u) ⊆ supp(v).
    """
    ctx, n = C.ctx, C.n
    total = C.projective_count()
    if budget is not None and total > budget:
        raise BudgetExceeded("projective codewords", total, budget)
    X = np.concatenate([X for _, X in C.codeword_batches(budget=None)])
    rows = _support_rows(ctx, X)
    w = _kernels.rank(ctx.p, rows) // ctx.h
    use_bits = ctx.p ** (n * ctx.h) <= _BITSET_LIMIT
    if use_bits:
        bits = _support_bitsets(ctx.p, rows)
    for i in range(total):
        cand = np.nonzero(w >= w[i])[0]
        cand = cand[cand != i]
        if len(cand) == 0:
            continue
        if use_bits:
            inside = ~np.any(bits[i][None, :] & ~bits[cand], axis=1)
        else:
            both = np.concatenate([np.broadcast_to(rows[i], (len(cand),) + rows[i].shape), rows[cand]], axis=1)
            inside = _kernels.rank(ctx.p, both) == _kernels.rank(ctx.p, rows[cand])
        hit = np.nonzero(inside)[0]
        if len(hit):
            j = int(cand[hit[0]])
            wit = {"u": X[i], "v": X[j], "supp_u_dim": int(w[i]), "supp_v_dim": int(w[j])}
            return Verdict(False, wit, total)
    return Verdict(True, None, total)


def second_weight(C: RankCode, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1) -> int:
    from .qsystems import max_weight, phi

    if C.k < 2:
        raise ValueError("second weight needs k >= 2")
    U = phi(C)
    return U.n - max_weight(U, C.k - 2, budget=budget, workers=workers).max_weight


def is_minimal_via_d2(C: RankCode, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1) -> Verdict:
    """Minimality decided by d_2 >= m + 1."""
    if not is_nondegenerate(C):
        raise DegenerateCodeError("the second-weight test needs a nondegenerate code")
    d2 = second_weight(C, budget, workers)
    return Verdict(d2 >= C.ctx.m + 1, None, 0, {"d2": d2, "m": C.ctx.m})


def apply_isometry(C: RankCode, A) -> RankCode:
    """C·A for an invertible n x n matrix A over F_q."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape != (C.n, C.n):
        raise ValueError("isometry must be n x n")
    linalg.check_level(C.ctx, A, "Fq")
    if not linalg.is_invertible(C.ctx, A):
        raise SingularMatrixError("isometry matrix is singular")
    return RankCode(C.ctx, linalg.matmul(C.ctx, C.G, A))
