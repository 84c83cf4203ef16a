"""q-systems: F_q-subspaces of F_{q^m}^k and their intersection geometry.

All dimension counting happens over the prime field.  U is stored through
an F_p parity-check matrix P of its F_p-expansion inside F_p^{ke}; the
syndrome of a vector w is w P, and for an F_{q^m}-subspace H with basis
rows H_1..H_d

    dim_{F_p}(H ∩ U) = d*e - rank_{F_p}{ syndrome(x^a H_i) : a < e, i < d }

because the syndrome map restricted to H has kernel exactly H ∩ U.
Syndromes of single coordinates are tabulated once, so a weight costs a
few table lookups and one small elimination.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import _kernels, linalg
from ._scan import reduce_first, reduce_max, run_ranges
from .errors import AmbientMismatch, BudgetExceeded, InvariantViolation, SingularMatrixError
from .fields import FieldCtx
from .linalg import DEFAULT_ENUM_BUDGET, Subspace
from .results import EvasivenessReport, Verdict

log = logging.getLogger("rankmetric")

_BATCH = 1 << 14


def fq_flat(ctx: FieldCtx, vecs) -> np.ndarray:
    """F_p spanning rows of the F_q-span of ``vecs`` (shape (t, k)): {zeta^b v_j}."""
    vecs = np.asarray(vecs, dtype=np.int64)
    t, k = vecs.shape
    prod = np.asarray(ctx.mul(ctx.fq_pbasis[:, None, None], vecs[None, :, :]))
    return ctx.digits[prod].reshape(ctx.h * t, k * ctx.e)


def fq_dim(ctx: FieldCtx, vecs) -> int:
    """dim over F_q of the F_q-span of the rows of ``vecs``."""
    vecs = np.asarray(vecs, dtype=np.int64)
    if vecs.size == 0:
        return 0
    return _kernels.rank_one(ctx.p, fq_flat(ctx, vecs)) // ctx.h


def fq_intersection_dim(ctx: FieldCtx, A, B) -> int:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.size == 0 or B.size == 0:
        return 0
    return fq_dim(ctx, A) + fq_dim(ctx, B) - fq_dim(ctx, np.vstack([A, B]))


def fqm_as_fq(ctx: FieldCtx, rows) -> np.ndarray:
    """An F_q-spanning set of the F_{q^m}-span of ``rows``: {g^i r_j}."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return rows.reshape(0, rows.shape[-1] if rows.ndim == 2 else 0)
    return np.asarray(ctx.mul(ctx.basis[:, None, None], rows[None])).reshape(-1, rows.shape[1])


def fq_basis_from(ctx: FieldCtx, vecs) -> np.ndarray:
    """Greedy F_q-basis of the F_q-span of ``vecs``, keeping the earliest rows."""
    vecs = np.asarray(vecs, dtype=np.int64)
    keep: list[int] = []
    cur = 0
    for i in range(vecs.shape[0]):
        r = fq_dim(ctx, vecs[keep + [i]])
        if r > cur:
            keep.append(i)
            cur = r
    return vecs[keep]


def _fp_kernel(p: int, L: np.ndarray) -> np.ndarray:
    """Rows spanning {x : L x = 0} over F_p."""
    L = np.asarray(L, dtype=np.int64)
    if L.shape[0] == 0:
        return np.eye(L.shape[1], dtype=np.int64)
    K, mask = _kernels.left_kernel(p, L.T[None])
    return K[0][mask[0]]


def tau_prime_complement(ctx: FieldCtx, vecs, sigma=None, k: int | None = None) -> np.ndarray:
    """F_q-basis of {v : Tr_{q^m/q}(u S v^T) = 0 for all u in span_Fq(vecs)}.

    The F_q-valued condition is linearized over F_p: an element y of F_q is
    zero iff Tr_{q/p}(zeta^b y) = 0 for every b < h, and
    Tr_{q/p}(zeta^b Tr_{q^m/q}(x)) = Tr_{q^m/p}(zeta^b x).
    """
    vecs = np.asarray(vecs, dtype=np.int64)
    if k is None:
        k = vecs.shape[1]
    vecs = vecs.reshape(-1, k)
    S = np.eye(k, dtype=np.int64) if sigma is None else np.asarray(sigma, dtype=np.int64)
    if not linalg.is_invertible(ctx, S):
        raise SingularMatrixError("bilinear form is degenerate")
    e = ctx.e
    if vecs.shape[0] == 0:
        L = np.zeros((0, k * e), dtype=np.int64)
    else:
        W = linalg.matmul(ctx, vecs, S)  # (t, k)
        zw = np.asarray(ctx.mul(ctx.fq_pbasis[:, None, None], W[None]))  # (h, t, k)
        terms = np.asarray(ctx.mul(zw[..., None], ctx.xpow))  # (h, t, k, e)
        L = np.asarray(ctx.abs_trace(terms)).reshape(-1, k * e)
    K = _fp_kernel(ctx.p, L)
    V = np.asarray(ctx.from_digits(K.reshape(-1, k, e)))
    return fq_basis_from(ctx, V.reshape(-1, k))


def sigma_complement(ctx: FieldCtx, rows, sigma=None, k: int | None = None) -> np.ndarray:
    """F_{q^m}-basis of {v : r S v^T = 0 for all rows r}."""
    rows = np.asarray(rows, dtype=np.int64)
    if k is None:
        k = rows.shape[1]
    rows = rows.reshape(-1, k)
    S = np.eye(k, dtype=np.int64) if sigma is None else np.asarray(sigma, dtype=np.int64)
    if rows.shape[0] == 0:
        return np.eye(k, dtype=np.int64)
    return linalg.kernel_basis(ctx, linalg.matmul(ctx, rows, S))


def pesi_sides(ctx: FieldCtx, U_vecs, R_rows, sigma=None, k: int | None = None) -> tuple[int, int]:
    """Both sides of dim(U' ∩ R') - dim(U ∩ R) = km - t - sm.

    ``U_vecs`` spans an F_q-subspace of dimension t, ``R_rows`` an
    F_{q^m}-subspace of dimension s; primes denote the two orthogonal
    complements.  Returns ``(lhs, rhs)``.
    """
    U_vecs = np.asarray(U_vecs, dtype=np.int64)
    R_rows = np.asarray(R_rows, dtype=np.int64)
    if k is None:
        k = U_vecs.shape[1] if U_vecs.ndim == 2 else R_rows.shape[1]
    U_vecs = U_vecs.reshape(-1, k)
    R_rows = R_rows.reshape(-1, k)
    t = fq_dim(ctx, U_vecs)
    s = linalg.rank(ctx, R_rows) if R_rows.size else 0
    Ud = tau_prime_complement(ctx, U_vecs, sigma, k)
    Rd = sigma_complement(ctx, R_rows, sigma, k)
    lhs = fq_intersection_dim(ctx, Ud, fqm_as_fq(ctx, Rd)) - fq_intersection_dim(ctx, U_vecs, fqm_as_fq(ctx, R_rows))
    return lhs, k * ctx.m - t - s * ctx.m


class QSystem:
    """An n-dimensional F_q-subspace of F_{q^m}^k spanning it over F_{q^m}.

    ``basis`` is an (n, k) array whose rows form an F_q-basis of U.
    """

    def __init__(self, ctx: FieldCtx, basis, check: bool = True):
        basis = np.asarray(basis, dtype=np.int64)
        if basis.ndim != 2 or basis.shape[0] == 0:
            raise ValueError("a q-system needs a non-empty (n, k) basis")
        self.ctx = ctx
        self.basis = basis
        self.n, self.k = basis.shape
        if check:
            if np.any(basis < 0) or np.any(basis >= ctx.order):
                raise ValueError("basis entries are not field elements")
            if fq_dim(ctx, basis) != self.n:
                raise ValueError("basis vectors are F_q-dependent")
            if linalg.rank(ctx, basis) != self.k:
                raise ValueError("basis does not span F_{q^m}^k over F_{q^m}")

    def __repr__(self) -> str:
        return f"QSystem(n={self.n}, k={self.k}, q={self.ctx.q}, m={self.ctx.m})"

    def __getstate__(self):
        return {"ctx": self.ctx, "basis": self.basis, "n": self.n, "k": self.k}

    # -- flat representations ----------------------------------------------

    @cached_property
    def expansion(self) -> Subspace:
        """Canonical F_q-expansion of U inside F_q^{km}."""
        rows = self.ctx.expand(self.basis).reshape(self.n, self.k * self.ctx.m)
        return Subspace.from_rows(self.ctx, rows, "Fq")

    @cached_property
    def parity(self) -> np.ndarray:
        """F_p matrix P of shape (ke, ke - nh) whose left kernel is U."""
        return _fp_kernel(self.ctx.p, fq_flat(self.ctx, self.basis)).T

    @cached_property
    def _syn(self) -> tuple[bool, np.ndarray, int]:
        ctx, e, k = self.ctx, self.ctx.e, self.k
        P = self.parity
        s = P.shape[1]
        tab = np.stack([(ctx.digits @ P[c * e:(c + 1) * e]) % ctx.p for c in range(k)])
        if ctx.p == 2 and s <= _kernels._PACK_BITS:
            return True, _kernels.pack_bits(tab), s
        return False, tab, s

    def syndromes(self, V) -> np.ndarray:
        """Syndromes of vectors ``V`` (..., k): packed words for p=2, else (..., s)."""
        packed, tab, _ = self._syn
        V = np.asarray(V, dtype=np.int64)
        out = tab[0][V[..., 0]]
        for c in range(1, self.k):
            if packed:
                out = out ^ tab[c][V[..., c]]
            else:
                out = out + tab[c][V[..., c]]
        return out if packed else out % self.ctx.p

    def _fp_rows(self, bases: np.ndarray) -> np.ndarray:
        """(B, d, k) -> (B, d*e, k): the F_p-spanning rows x^a H_i, index i*e + a."""
        B, d, k = bases.shape
        X = np.asarray(self.ctx.mul(self.ctx.xpow[None, None, :, None], bases[:, :, None, :]))
        return X.reshape(B, d * self.ctx.e, k)

    def _syn_rank(self, S) -> np.ndarray:
        packed, _, s = self._syn
        if packed:
            return _kernels.rank_packed(S, s)
        return _kernels.rank(self.ctx.p, S)

    def weights(self, bases) -> np.ndarray:
        """F_q-dimensions of H ∩ U for a stack of F_{q^m}-independent bases (B, d, k)."""
        bases = np.asarray(bases, dtype=np.int64)
        B, d, k = bases.shape
        if k != self.k:
            raise AmbientMismatch(f"subspace lives in dimension {k}, system in {self.k}")
        if d == 0:
            return np.zeros(B, dtype=np.int64)
        S = self.syndromes(self._fp_rows(bases))
        return (d * self.ctx.e - self._syn_rank(S)) // self.ctx.h

    def weight(self, H) -> int:
        """wt_U(H) = dim_{F_q}(H ∩ U) for an F_{q^m}-subspace (Subspace or spanning rows)."""
        if not isinstance(H, Subspace):
            H = Subspace.from_rows(self.ctx, H, "Fqm", self.k)
        if H.ambient != self.k:
            raise AmbientMismatch("subspace and system have different ambient dimensions")
        return int(self.weights(H.basis[None])[0])

    def point_weight(self, v) -> int:
        return self.weight(np.asarray(v, dtype=np.int64).reshape(1, -1))

    def spans_hyperplanes(self, bases) -> np.ndarray:
        """For each (B, d, k) basis of H: does H ∩ U span H over F_{q^m}?"""
        ctx, e, p = self.ctx, self.ctx.e, self.ctx.p
        bases = np.asarray(bases, dtype=np.int64)
        B, d, _ = bases.shape
        if d == 0:
            return np.ones(B, dtype=bool)
        packed, _, s = self._syn
        S = self.syndromes(self._fp_rows(bases))
        if packed:
            S = _kernels.unpack_bits(S, s).astype(np.int64)
        de = d * e
        K, mask = _kernels.left_kernel(p, S.reshape(B, de, s))
        K = K * mask[..., None]
        # kernel row j encodes sum_{i,a} c_{i,a} x^a H_i = sum_i y_{j,i} H_i
        Y = (K.reshape(B, de, d, e) * ctx._pw).sum(axis=-1)
        Z = np.asarray(ctx.mul(ctx.xpow[None, None, :, None], Y[:, :, None, :]))  # (B, de, e, d)
        Zd = ctx.digits[Z].reshape(B, de * e, d * e)
        return _kernels.rank(p, Zd) == de

    # -- scans ---------------------------------------------------------------

    def u_point_count(self) -> int:
        return linalg.gaussian_binomial(self.n, 1, self.ctx.q)

    def max_weight(self, h: int, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1,
                   method: str = "auto") -> EvasivenessReport:
        return max_weight(self, h, budget, workers, method)


# -- module-level scan kernels (picklable for worker processes) -------------


def _max_weight_range(U: QSystem, h: int, start: int, stop: int) -> tuple[int, int]:
    best = (-1, -1)
    for off, bases in linalg.subspace_batches(U.ctx, U.k, h, "Fqm", start, stop, batch=_BATCH, budget=None):
        w = U.weights(bases)
        i = int(np.argmax(w))
        if w[i] > best[0]:
            best = (int(w[i]), off + i)
    return best


def _u_points_range(U: QSystem, start: int, stop: int) -> tuple[int, int]:
    """Max point weight over the points <u> with u in U (one u per F_q-line)."""
    best = (-1, -1)
    for off, coeffs in linalg.subspace_batches(U.ctx, U.n, 1, "Fq", start, stop, batch=_BATCH, budget=None):
        u = linalg.matmul(U.ctx, coeffs[:, 0, :], U.basis)
        w = U.weights(u[:, None, :])
        i = int(np.argmax(w))
        if w[i] > best[0]:
            best = (int(w[i]), off + i)
    return best


def _cutting_range(U: QSystem, start: int, stop: int) -> int:
    for off, bases in linalg.subspace_batches(U.ctx, U.k, U.k - 1, "Fqm", start, stop, batch=2048, budget=None):
        bad = np.nonzero(~U.spans_hyperplanes(bases))[0]
        if len(bad):
            return off + int(bad[0])
    return -1


def _u_point_at(U: QSystem, index: int) -> np.ndarray:
    c = linalg.subspace_at(U.ctx, U.n, 1, "Fq", index).basis
    return linalg.matmul(U.ctx, c, U.basis)


def max_weight(U: QSystem, h: int, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1,
               method: str = "auto") -> EvasivenessReport:
    """Largest weight of an h-dimensional F_{q^m}-subspace, with a witness.

    For h = 1 the points meeting U are exactly the spans of its nonzero
    vectors, so when U has fewer F_q-lines than the ambient space has points
    (``method="auto"``) the scan runs over U instead.  Both routes are exact.
    """
    ctx, k = U.ctx, U.k
    if not 0 <= h <= k:
        raise ValueError(f"h must lie in [0, {k}]")
    if h == 0:
        return EvasivenessReport(0, 0, Subspace.zero(ctx, k), 1, "trivial")
    if h == k:
        return EvasivenessReport(k, U.n, Subspace.full(ctx, k), 1, "trivial")
    n_sub = linalg.subspace_count(ctx, k, h)
    use_u = h == 1 and (method == "points-of-U" or (method == "auto" and U.u_point_count() < n_sub))
    if use_u:
        total = U.u_point_count()
        if budget is not None and total > budget:
            raise BudgetExceeded("F_q-lines of the system", total, budget)
        log.info("scanning %d lines of U for point weights", total)
        w, idx = reduce_max(run_ranges(_u_points_range, (U, ), total, workers))
        wit = Subspace.from_rows(ctx, _u_point_at(U, idx), "Fqm", k)
        return EvasivenessReport(1, w, wit, total, "points-of-U")
    if budget is not None and n_sub > budget:
        raise BudgetExceeded(f"{h}-subspaces of F_(q^m)^{k}", n_sub, budget)
    log.info("scanning %d subspaces of dimension %d", n_sub, h)
    w, idx = reduce_max(run_ranges(_max_weight_range, (U, h), n_sub, workers))
    wit = linalg.subspace_at(ctx, k, h, "Fqm", idx)
    return EvasivenessReport(h, w, wit, n_sub, "subspaces")


def is_evasive(U: QSystem, h: int, r: int, **kw) -> bool:
    return max_weight(U, h, **kw).max_weight <= r


def is_h_scattered(U: QSystem, h: int, **kw) -> Verdict:
    rep = max_weight(U, h, **kw)
    ok = rep.max_weight <= h
    return Verdict(ok, None if ok else {"subspace": rep.witness, "weight": rep.max_weight},
                   rep.scanned, {"max_weight": rep.max_weight, "method": rep.method})


def is_scattered(U: QSystem, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1) -> Verdict:
    """Every point has weight at most 1; checked over the F_q-lines of U."""
    return is_h_scattered(U, 1, budget=budget, workers=workers, method="points-of-U")


def is_maximum_scattered(U: QSystem, h: int = 1, **kw) -> Verdict:
    v = is_h_scattered(U, h, **kw)
    v.details["maximum_size"] = U.n * (h + 1) == U.k * U.ctx.m
    v.value = bool(v.value and v.details["maximum_size"])
    return v


def is_cutting_direct(U: QSystem, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1) -> Verdict:
    """Every F_{q^m}-hyperplane H satisfies <H ∩ U>_{F_{q^m}} = H."""
    ctx, k = U.ctx, U.k
    if k == 1:
        return Verdict(True, None, 1)
    total = linalg.subspace_count(ctx, k, k - 1)
    if budget is not None and total > budget:
        raise BudgetExceeded(f"hyperplanes of F_(q^m)^{k}", total, budget)
    log.info("scanning %d hyperplanes", total)
    idx = reduce_first(run_ranges(_cutting_range, (U,), total, workers))
    if idx < 0:
        return Verdict(True, None, total)
    H = linalg.subspace_at(ctx, k, k - 1, "Fqm", idx)
    return Verdict(False, {"hyperplane": H, "index": idx, "weight": U.weight(H)}, total)


def is_cutting_via_evasive(U: QSystem, **kw) -> Verdict:
    """Cutting decided through (k-2, n-m-1)-evasiveness."""
    r = U.n - U.ctx.m - 1
    rep = max_weight(U, U.k - 2, **kw)
    ok = rep.max_weight <= r
    return Verdict(ok, None if ok else {"subspace": rep.witness, "weight": rep.max_weight},
                   rep.scanned, {"h": U.k - 2, "r": r, "max_weight": rep.max_weight})


# -- profiles ---------------------------------------------------------------


def check_profile(d, n: int, k: int, m: int) -> None:
    """Raise InvariantViolation unless ``d`` obeys monotonicity and the standard bounds."""
    d = list(d)
    if len(d) != k:
        raise InvariantViolation(f"profile {d} has length != k={k}")
    if not (1 <= d[0] and all(a < b for a, b in zip(d, d[1:])) and d[-1] <= n):
        raise InvariantViolation(f"profile {d} is not strictly increasing within [1, {n}]")
    if m * k > min(m * (n - d[0] + 1), n * (m - d[0] + 1)):
        raise InvariantViolation(f"profile {d} violates the Singleton-like bound")
    for s in range(1, k + 1):
        cap = min(Fraction(n - k + s), Fraction(s * m), Fraction(m, n) * (n - k) + m * (s - 1) + 1)
        if d[s - 1] > cap:
            raise InvariantViolation(f"d_{s}={d[s - 1]} exceeds its upper bound {cap}")


def check_evasive_implications(mw: dict, n: int, k: int, m: int) -> None:
    """Check two implications between measured maximum weights.

    ``mw[h]`` is the exact maximum weight of h-dimensional subspaces.
    (a) if n - mw[h] + s > (k - h + s) m / 2 with 1 <= s < h then
        mw[h - s] <= mw[h] - s - 1;
    (b) if mw[h] < h m and 2h < k then mw[2h] <= mw[h] + h m - 1.
    """
    for h, r in mw.items():
        for s in range(1, h):
            if h - s in mw and 2 * (n - r + s) > (k - h + s) * m and mw[h - s] > r - s - 1:
                raise InvariantViolation(f"weight drop implication fails at h={h}, s={s}: {mw}")
        if r < h * m and 2 * h < k and 2 * h in mw and mw[2 * h] > r + h * m - 1:
            raise InvariantViolation(f"doubling implication fails at h={h}: {mw}")


def max_weights(U: QSystem, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1) -> dict[int, EvasivenessReport]:
    return {h: max_weight(U, h, budget=budget, workers=workers) for h in range(U.k + 1)}


def d_profile(U: QSystem, budget: int | None = DEFAULT_ENUM_BUDGET, workers: int = 1,
              reports: dict | None = None) -> tuple[int, ...]:
    """(d_1, ..., d_k) with d_i = n - max weight of a (k-i)-dimensional subspace.

    Every profile is checked against the bounds and evasiveness implications
    before it is returned.  Pass a dict as ``reports`` to receive the scans.
    """
    reps = max_weights(U, budget, workers)
    if reports is not None:
        reports.update(reps)
    mw = {h: r.max_weight for h, r in reps.items()}
    d = tuple(U.n - mw[U.k - i] for i in range(1, U.k + 1))
    check_profile(d, U.n, U.k, U.ctx.m)
    check_evasive_implications(mw, U.n, U.k, U.ctx.m)
    return d


# -- duality and correspondence -------------------------------------------


def tau_prime_dual(U: QSystem, sigma=None) -> QSystem:
    """The complement of U under (u, v) -> Tr_{q^m/q}(u S v^T); dimension km - n.

    The complement spans F_{q^m}^k unless U contains a full F_{q^m}-line
    <v>, in which case it lies in the hyperplane orthogonal to v and
    ValueError is raised.
    """
    B = tau_prime_complement(U.ctx, U.basis, sigma, U.k)
    if B.shape[0] == 0 or linalg.rank(U.ctx, B) < U.k:
        raise ValueError("the complement does not span: U contains a full F_(q^m)-line")
    return QSystem(U.ctx, B, check=False)


def phi(C) -> QSystem:
    """System spanned over F_q by the columns of a nondegenerate code's generator."""
    from .errors import DegenerateCodeError
    from .rank_codes import is_nondegenerate

    if not is_nondegenerate(C):
        raise DegenerateCodeError("phi needs a nondegenerate code")
    return QSystem(C.ctx, C.G.T)


def psi(U: QSystem):
    """Code whose generator columns are the F_q-basis of U."""
    from .rank_codes import RankCode

    return RankCode(U.ctx, U.basis.T)


def apply_gl(U: QSystem, A) -> QSystem:
    """U·A = {uA : u in U} for an invertible k x k matrix A."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape != (U.k, U.k) or not linalg.is_invertible(U.ctx, A):
        raise SingularMatrixError("apply_gl needs an invertible k x k matrix")
    return QSystem(U.ctx, linalg.matmul(U.ctx, U.basis, A))


def same_system(U1: QSystem, U2: QSystem) -> bool:
    """Equality of the two F_q-subspaces (canonical expansions)."""
    if U1.k != U2.k or U1.ctx is not U2.ctx:
        return False
    return U1.expansion == U2.expansion
