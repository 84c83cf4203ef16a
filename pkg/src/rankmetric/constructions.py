"""Explicit codes and systems, combinators, and seeded random systems."""

from __future__ import annotations

import logging

import numpy as np

from . import linalg
from .errors import FieldError
from .fields import FieldCtx
from .qsystems import QSystem, fq_dim, is_scattered
from .rank_codes import RankCode, min_distance, singleton_saturated

log = logging.getLogger("rankmetric")

_MRD_CHECK_LIMIT = 20000
DEFAULT_ATTEMPTS = 10**6


def _fq_basis_or_raise(ctx: FieldCtx, elems, what: str) -> np.ndarray:
    elems = np.asarray(elems, dtype=np.int64).reshape(-1)
    if ctx.fq_rank(elems) != len(elems):
        raise ValueError(f"{what} is not F_q-independent")
    return elems


def gabidulin(ctx: FieldCtx, n: int, k: int, evaluation_basis=None) -> RankCode:
    """Code generated by the rows (a_1^{q^i}, ..., a_n^{q^i}), i < k."""
    if n > ctx.m:
        raise ValueError(f"n={n} exceeds m={ctx.m}")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    a = ctx.basis[:n] if evaluation_basis is None else evaluation_basis
    a = _fq_basis_or_raise(ctx, a, "evaluation tuple")
    if len(a) != n:
        raise ValueError(f"need {n} evaluation points")
    G = np.array([ctx.frobenius(a, i) for i in range(k)], dtype=np.int64)
    C = RankCode(ctx, G)
    if C.projective_count() <= _MRD_CHECK_LIMIT:
        d = min_distance(C)
        if d != n - k + 1:
            raise AssertionError(f"evaluation code has distance {d}, expected {n - k + 1}")
    return C


def _require_char2_m4(ctx: FieldCtx) -> None:
    if ctx.p != 2 or ctx.m != 4:
        raise FieldError("this construction lives in F_{q^4} with q a power of 2")


def construction_U(ctx: FieldCtx) -> QSystem:
    """{(x, y, x^q + y^{q^2}, x^{q^2} + y^q + y^{q^2}) : x, y in F_{q^4}}."""
    _require_char2_m4(ctx)
    fr = ctx.frobenius
    rows = []
    for b in ctx.basis:
        b = int(b)
        rows.append([b, 0, fr(b, 1), fr(b, 2)])
    for b in ctx.basis:
        b = int(b)
        rows.append([0, b, fr(b, 2), ctx.add(fr(b, 1), fr(b, 2))])
    return QSystem(ctx, rows)


def construction_U_dual(ctx: FieldCtx) -> QSystem:
    """{(z, t, z^{q^3} + z^{q^2} + t^{q^2}, z^{q^2} + t^{q^3}) : z, t in F_{q^4}}."""
    _require_char2_m4(ctx)
    fr, add = ctx.frobenius, ctx.add
    rows = []
    for b in ctx.basis:
        b = int(b)
        rows.append([b, 0, add(fr(b, 3), fr(b, 2)), fr(b, 2)])
    for b in ctx.basis:
        b = int(b)
        rows.append([0, b, fr(b, 2), fr(b, 3)])
    return QSystem(ctx, rows)


def sigma_42(ctx: FieldCtx) -> np.ndarray:
    """Gram matrix of X0Y3 + X3Y0 - X1Y2 - X2Y1."""
    S = np.zeros((4, 4), dtype=np.int64)
    S[0, 3] = S[3, 0] = 1
    S[1, 2] = S[2, 1] = ctx.neg(1)
    return S


def equivalence_matrix_U() -> np.ndarray:
    """0/1 matrix M with M u^T in the dual system for every u in U.

    M acts on column vectors; in the row convention of ``apply_gl`` use M^T.
    """
    return np.array([[0, 1, 1, 0], [1, 0, 1, 1], [0, 1, 0, 1], [1, 0, 1, 0]], dtype=np.int64)


def code_C(ctx: FieldCtx, alpha=None, beta=None) -> RankCode:
    """The [8, 4] code whose generator columns parametrize U over two F_q-bases."""
    _require_char2_m4(ctx)
    a = _fq_basis_or_raise(ctx, ctx.basis if alpha is None else alpha, "alpha")
    b = _fq_basis_or_raise(ctx, ctx.basis if beta is None else beta, "beta")
    if len(a) != 4 or len(b) != 4:
        raise ValueError("alpha and beta must each have 4 entries")
    fr = ctx.frobenius
    z = np.zeros(4, dtype=np.int64)
    G = np.array([
        np.concatenate([a, z]),
        np.concatenate([z, b]),
        np.concatenate([fr(a, 1), fr(b, 2)]),
        np.concatenate([fr(a, 2), ctx.add(fr(b, 1), fr(b, 2))]),
    ], dtype=np.int64)
    return RankCode(ctx, G)


def normal_basis_generators(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    """Generator G of the [8, 4] code over a normal basis and the matrix H built
    from its trace-dual basis, which should generate the dual code."""
    _require_char2_m4(ctx)
    al = ctx.normal_basis()
    ga = ctx.dual_basis(al)
    fr, add = ctx.frobenius, ctx.add
    z = np.zeros(4, dtype=np.int64)
    G = np.array([
        np.concatenate([al, z]),
        np.concatenate([z, al]),
        np.concatenate([fr(al, 1), fr(al, 2)]),
        np.concatenate([fr(al, 2), add(fr(al, 1), fr(al, 2))]),
    ], dtype=np.int64)
    H = np.array([
        np.concatenate([z, fr(ga, 3)]),
        np.concatenate([fr(ga, 3), z]),
        np.concatenate([fr(ga, 1), add(fr(ga, 1), fr(ga, 2))]),
        np.concatenate([fr(ga, 2), fr(ga, 1)]),
    ], dtype=np.int64)
    return G, H


def direct_sum(C1: RankCode, C2: RankCode) -> RankCode:
    if C1.ctx is not C2.ctx:
        raise ValueError("codes live over different fields")
    G = np.zeros((C1.k + C2.k, C1.n + C2.n), dtype=np.int64)
    G[: C1.k, : C1.n] = C1.G
    G[C1.k:, C1.n:] = C2.G
    return RankCode(C1.ctx, G)


def direct_sum_sys(U1: QSystem, U2: QSystem) -> QSystem:
    if U1.ctx is not U2.ctx:
        raise ValueError("systems live over different fields")
    B = np.zeros((U1.n + U2.n, U1.k + U2.k), dtype=np.int64)
    B[: U1.n, : U1.k] = U1.basis
    B[U1.n:, U1.k:] = U2.basis
    return QSystem(U1.ctx, B)


def cone(W: QSystem, v) -> QSystem:
    """W + <v>_{F_{q^m}} with W placed in the hyperplane {last coordinate = 0}.

    ``W`` lives in F_{q^m}^k and ``v`` in F_{q^m}^{k+1} with nonzero last
    coordinate; the result has F_q-dimension t + m.
    """
    ctx = W.ctx
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    if v.shape[0] != W.k + 1:
        raise ValueError(f"v must have length {W.k + 1}")
    if v[-1] == 0:
        raise ValueError("v lies in the hyperplane containing W")
    emb = np.concatenate([W.basis, np.zeros((W.n, 1), dtype=np.int64)], axis=1)
    line = np.asarray(ctx.mul(ctx.basis[:, None], v[None, :]))
    B = np.concatenate([emb, line])
    if fq_dim(ctx, B) != W.n + ctx.m:
        raise ValueError("cone collapsed: dimension is not t + m")
    return QSystem(ctx, B)


def cutting_84_q3(ctx: FieldCtx, u=None) -> QSystem:
    """{(a0 + a1 u, a2 + a3 u, a4 + a5 u, a6 + a7 u) : a_i in F_q} in F_{q^3}^4."""
    if ctx.m != 3:
        raise FieldError("this construction needs m = 3")
    u = ctx.g if u is None else int(u)
    if ctx.is_in_subfield(u):
        raise ValueError("u must lie outside F_q")
    rows = []
    for c in range(4):
        for x in (1, u):
            r = [0, 0, 0, 0]
            r[c] = x
            rows.append(r)
    return QSystem(ctx, rows)


# -- randomized -----------------------------------------------------------------


def _draw_system(ctx: FieldCtx, k: int, n: int, rng: np.random.Generator) -> tuple[QSystem, int]:
    """Draw n x k matrices of uniform field elements until the rows form a q-system."""
    draws = 0
    while True:
        draws += 1
        B = rng.integers(0, ctx.order, size=(n, k), dtype=np.int64)
        if fq_dim(ctx, B) == n and linalg.rank(ctx, B) == k:
            return QSystem(ctx, B, check=False), draws


def random_qsystem(ctx: FieldCtx, k: int, n: int, seed: int) -> QSystem:
    """Reproducible random [n, k] system.

    The generator is numpy's PCG64 seeded with ``seed``; each draw takes
    n*k integers in [0, q^m) row by row and is rejected unless the rows are
    F_q-independent and span F_{q^m}^k.
    """
    if not k <= n <= k * ctx.m:
        raise ValueError(f"need k <= n <= km, got k={k}, n={n}, m={ctx.m}")
    rng = np.random.Generator(np.random.PCG64(seed))
    return _draw_system(ctx, k, n, rng)[0]


def search_scattered(ctx: FieldCtx, k: int, n: int, seed: int, attempts: int = DEFAULT_ATTEMPTS,
                     stats: dict | None = None) -> QSystem | None:
    """First scattered system in a seeded random stream, or None.

    Systems with n > km/2 cannot be scattered, so the search is skipped.
    Attempt counts are written into ``stats`` when given.
    """
    if attempts < 1:
        raise ValueError("attempts must be positive")
    if stats is None:
        stats = {}
    stats.update(attempts=0, hit=None)
    if 2 * n > k * ctx.m:
        return None
    rng = np.random.Generator(np.random.PCG64(seed))
    for i in range(attempts):
        U, _ = _draw_system(ctx, k, n, rng)
        stats["attempts"] = i + 1
        if is_scattered(U).value:
            stats["hit"] = i
            return U
    log.info("no scattered system found in %d attempts", attempts)
    return None
