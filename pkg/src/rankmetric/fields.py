"""Arithmetic in the tower F_p < F_q < F_{q^m}.

A single flat field F_{p^e} (e = h*m) is built from log/antilog tables.
Elements are plain integers: the base-p digits of an element's index are its
coordinates in the polynomial basis 1, x, ..., x^{e-1} of F_p[x]/(f).  The
subfield F_q is the fixed set of x -> x^q, and F_{q^m} carries the fixed
F_q-basis B = (1, g, ..., g^{m-1}) where g is the primitive element.

All operations accept ints or integer numpy arrays and broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import FieldError

DEFAULT_TABLE_BUDGET = 1 << 22


@dataclass(frozen=True)
class FieldParams:
    p: int
    h: int = 1
    m: int = 1
    budget: int = DEFAULT_TABLE_BUDGET

    @property
    def q(self) -> int:
        return self.p**self.h

    @property
    def degree(self) -> int:
        return self.h * self.m

    @property
    def order(self) -> int:
        return self.p ** (self.h * self.m)

    def header(self) -> dict:
        return {"p": self.p, "h": self.h, "m": self.m}


def _int_digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        x, d = divmod(x, p)
        out.append(d)
    return out


def _matpow(M: np.ndarray, k: int, p: int) -> np.ndarray:
    R = np.eye(M.shape[0], dtype=np.int64)
    B = M.copy()
    while k:
        if k & 1:
            R = (R @ B) % p
        B = (B @ B) % p
        k >>= 1
    return R


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    from sympy import Poly, symbols

    x = symbols("x")
    for t in range(p**e):
        low = _int_digits(t, p, e)
        if Poly([1] + low[::-1], x, modulus=p).is_irreducible:
            return tuple(low) + (1,)
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")


def _prime_factors(n: int) -> list[int]:
    from sympy import factorint

    return sorted(factorint(n)) if n > 1 else []


class FieldCtx:
    """The field F_{q^m}, q = p^h, with its subfield and expansion basis.

    Immutable after construction; build it through :func:`make_field`.
    """

    def __init__(self, params: FieldParams):
        from sympy import isprime

        p, h, m = params.p, params.h, params.m
        if not isprime(p):
            raise FieldError(f"p={p} is not prime")
        if h < 1 or m < 1:
            raise FieldError("h and m must be positive")
        if params.order > params.budget:
            raise FieldError(f"field of order {params.order} exceeds table budget {params.budget}")

        self.params = params
        self.p, self.h, self.m = p, h, m
        self.q = p**h
        self.e = h * m
        self.order = p**self.e
        N, e = self.order, self.e

        self.modulus = _smallest_irreducible(p, e)
        self._pw = p ** np.arange(e, dtype=np.int64)
        self.digits = np.array(
            [_int_digits(i, p, e) for i in range(N)], dtype=np.int64
        ).reshape(N, e)

        # row i of the companion matrix holds x * x^i reduced mod f
        companion = np.zeros((e, e), dtype=np.int64)
        for i in range(e - 1):
            companion[i, i + 1] = 1
        companion[e - 1] = [(-c) % p for c in self.modulus[:e]]
        self._companion = companion

        self.g = self._find_primitive()
        self.exp, self.log = self._build_tables()

        n1 = N - 1
        self.zeta = int(self.exp[n1 // (self.q - 1)]) if self.q > 1 else 1
        self.subfield = np.sort(
            np.array([0] + [int(self.exp[(j * (n1 // (self.q - 1))) % n1]) for j in range(self.q - 1)])
        )
        self.basis = np.array([int(self.exp[i % n1]) for i in range(m)], dtype=np.int64)
        # polynomial basis x^a of F_{p^e} over F_p
        self.xpow = self._pw.copy()
        # F_p-basis of F_q
        self.fq_pbasis = np.array([int(self.exp[(a * (n1 // (self.q - 1))) % n1]) for a in range(h)])
        self._build_expansion()

    # -- construction -------------------------------------------------------

    def _mult_matrix(self, a: int) -> np.ndarray:
        M = np.zeros((self.e, self.e), dtype=np.int64)
        C = np.eye(self.e, dtype=np.int64)
        for d in _int_digits(a, self.p, self.e):
            if d:
                M = (M + d * C) % self.p
            C = (C @ self._companion) % self.p
        return M

    def _find_primitive(self) -> int:
        N, p = self.order, self.p
        if N == 2:
            return 1
        one = np.zeros(self.e, dtype=np.int64)
        one[0] = 1
        factors = _prime_factors(N - 1)
        for cand in range(2, N):
            Mg = self._mult_matrix(cand)
            if all(not np.array_equal(one @ _matpow(Mg, (N - 1) // r, p) % p, one) for r in factors):
                return cand
        raise FieldError("no primitive element found")

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        N, p = self.order, self.p
        n1 = N - 1
        powers = np.zeros((1, self.e), dtype=np.int64)
        powers[0, 0] = 1
        step = self._mult_matrix(self.g)
        while len(powers) < n1:
            powers = np.vstack([powers, (powers @ step) % p])
            step = (step @ step) % p
        powers = powers[:n1]
        exp1 = powers @ self._pw
        if len(np.unique(exp1)) != n1:
            raise FieldError("generator does not have full order")
        log = np.zeros(N, dtype=np.int64)
        log[exp1] = np.arange(n1)
        exp = np.concatenate([exp1, exp1])
        return exp, log

    def _build_expansion(self) -> None:
        p, h, m, e = self.p, self.h, self.m, self.e
        rows = []
        for i in range(m):
            for a in range(h):
                rows.append(self.digits[self.mul(int(self.fq_pbasis[a]), int(self.basis[i]))])
        Mb = np.array(rows, dtype=np.int64)
        if _kernels.rank_one(p, Mb) != e:
            raise FieldError("expansion basis is not F_q-independent")
        coords = (self.digits @ _kernels.inverse_mod_p(Mb, p)) % p
        # coordinate i*h + a is the F_p coefficient of zeta^a * g^i
        self.fp_coords = coords
        exp = np.zeros((self.order, m), dtype=np.int64)
        for i in range(m):
            acc = np.zeros(self.order, dtype=np.int64)
            for a in range(h):
                acc = self.add(acc, self.mul(coords[:, i * h + a], int(self.fq_pbasis[a])))
            exp[:, i] = acc
        self._expand = exp

    # -- basic arithmetic ---------------------------------------------------

    def from_digits(self, d) -> np.ndarray:
        return np.asarray(d, dtype=np.int64) @ self._pw

    def add(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            r = a ^ b
        else:
            r = self.from_digits((self.digits[a] + self.digits[b]) % self.p)
        return _ret(r, a, b)

    def sub(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            r = a ^ b
        else:
            r = self.from_digits((self.digits[a] - self.digits[b]) % self.p)
        return _ret(r, a, b)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return _ret(a, a)
        return _ret(self.from_digits((-self.digits[a]) % self.p), a)

    def mul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        r = self.exp[self.log[a] + self.log[b]]
        r = np.where((a == 0) | (b == 0), 0, r)
        return _ret(r, a, b)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in finite field")
        return _ret(self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)], a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        n1 = self.order - 1
        if k < 0:
            a = np.asarray(self.inv(a), dtype=np.int64)
            k = -k
        if k == 0:
            return _ret(np.ones_like(a), a)
        r = self.exp[(self.log[a] * (k % n1)) % n1]
        return _ret(np.where(a == 0, 0, r), a)

    def sum(self, a, axis=-1):
        """Field sum along an axis."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        axis = axis % a.ndim if a.ndim else axis
        return self.from_digits(self.digits[a].sum(axis=axis) % self.p)

    def scale_table(self, c) -> np.ndarray:
        """``T[..., x] = c * x`` for every field element x."""
        c = np.asarray(c, dtype=np.int64)
        return np.asarray(self.mul(c[..., None], np.arange(self.order)))

    # -- tower structure ----------------------------------------------------

    def frobenius(self, a, i: int = 1):
        """a ** (q ** i); the identity for i a multiple of m."""
        a = np.asarray(a, dtype=np.int64)
        n1 = self.order - 1
        k = pow(self.q, i % self.m, n1) if n1 > 1 else 0
        r = self.exp[(self.log[a] * k) % n1] if n1 > 1 else np.ones_like(a)
        return _ret(np.where(a == 0, 0, r), a)

    def trace(self, a):
        """Relative trace Tr_{q^m/q}."""
        a = np.asarray(a, dtype=np.int64)
        acc = a
        for i in range(1, self.m):
            acc = self.add(acc, self.frobenius(a, i))
        return _ret(np.asarray(acc), a)

    def abs_trace(self, a):
        """Absolute trace to F_p; the result is an F_p value."""
        a = np.asarray(a, dtype=np.int64)
        acc = a
        for i in range(1, self.e):
            acc = self.add(acc, self.pow(a, self.p**i))
        return _ret(np.asarray(acc), a)

    def is_in_subfield(self, a):
        a = np.asarray(a, dtype=np.int64)
        r = np.asarray(self.frobenius(a, 1)) == a
        return bool(r) if a.ndim == 0 else r

    def expand(self, a) -> np.ndarray:
        """Coordinates of a over F_q in the basis (1, g, ..., g^{m-1})."""
        return self._expand[np.asarray(a, dtype=np.int64)]

    def contract(self, v):
        v = np.asarray(v, dtype=np.int64)
        if v.shape[-1] != self.m:
            raise FieldError(f"expected {self.m} coordinates, got {v.shape[-1]}")
        if not np.all(self.is_in_subfield(v)):
            raise FieldError("contract() needs entries in the subfield F_q")
        return _ret(self.sum(self.mul(v, self.basis), axis=-1), v[..., 0])

    def fq_coords(self, s) -> np.ndarray:
        """F_p coordinates of subfield elements in the basis (1, zeta, ..., zeta^{h-1})."""
        return self.fp_coords[np.asarray(s, dtype=np.int64)][..., : self.h]

    def fq_rank(self, elems) -> int:
        """dim over F_q of the F_q-span of the given elements."""
        elems = np.asarray(elems, dtype=np.int64).ravel()
        rows = self.digits[np.asarray(self.mul(self.fq_pbasis[:, None], elems[None, :])).ravel()]
        return _kernels.rank_one(self.p, rows) // self.h

    def normal_element(self) -> int:
        for a in range(1, self.order):
            conj = [self.frobenius(a, i) for i in range(self.m)]
            if self.fq_rank(conj) == self.m:
                return a
        raise FieldError("no normal element found")

    def normal_basis(self) -> np.ndarray:
        a = self.normal_element()
        return np.array([self.frobenius(a, i) for i in range(self.m)], dtype=np.int64)

    def dual_basis(self, basis) -> np.ndarray:
        """Trace-dual basis: Tr(basis[i] * dual[j]) = delta_ij."""
        from .linalg import inverse

        basis = np.asarray(basis, dtype=np.int64)
        if basis.shape != (self.m,):
            raise FieldError(f"need exactly {self.m} basis elements")
        gram = np.asarray(self.trace(self.mul(basis[:, None], basis[None, :])))
        try:
            C = inverse(self, gram)
        except Exception as exc:
            raise FieldError("basis is F_q-dependent (singular trace Gram matrix)") from exc
        return np.asarray(self.sum(self.mul(C, basis[None, :]), axis=1))

    # -- text encoding ------------------------------------------------------

    def encode(self, a) -> str:
        a = int(a)
        return "0" if a == 0 else f"g^{int(self.log[a])}"

    def decode(self, s: str) -> int:
        s = str(s).strip()
        if s == "0":
            return 0
        if s == "1":
            return 1
        if not s.startswith("g^"):
            raise FieldError(f"bad element encoding {s!r}")
        return int(self.exp[int(s[2:]) % (self.order - 1)])

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, h={self.h}, m={self.m})"

    def __reduce__(self):
        return (make_field, (self.params,))


def _ret(r, *inputs):
    if all(np.ndim(x) == 0 for x in inputs):
        return int(r)
    return r


@lru_cache(maxsize=None)
def make_field(params: FieldParams) -> FieldCtx:
    """Build (and cache) the field described by ``params``."""
    return FieldCtx(params)


def field(p: int, h: int = 1, m: int = 1) -> FieldCtx:
    """Shorthand for ``make_field(FieldParams(p, h, m))``."""
    return make_field(FieldParams(p, h, m))
