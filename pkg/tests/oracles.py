"""Slow, independent reference implementations used as test oracles.

Nothing here imports the package.  Field elements use the same integer
encoding (base-p digits are polynomial coefficients), arithmetic is plain
polynomial multiplication modulo a brute-force irreducible, and every
linear-algebra question is answered by enumerating sets of vectors.
"""

from __future__ import annotations

import itertools
import math


def digits(x, p, e):
    out = []
    for _ in range(e):
        x, d = divmod(x, p)
        out.append(d)
    return out


def undigits(d, p):
    return sum(c * p**i for i, c in enumerate(d))


def _poly_mod(a, f, p):
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return [c % p for c in a[:df]] + [0] * max(0, df - len(a))


def _is_irreducible(f, p):
    # trial division by every monic polynomial of degree 1..deg/2
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for t in range(p**d):
            g = digits(t, p, d) + [1]
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def smallest_irreducible(p, e):
    for t in range(p**e):
        f = digits(t, p, e) + [1]
        if _is_irreducible(f, p):
            return f


class OField:
    """F_{p^e} with q = p^h as the designated subfield."""

    def __init__(self, p, h, m):
        self.p, self.h, self.m = p, h, m
        self.e = h * m
        self.q = p**h
        self.order = p**self.e
        self.mod = smallest_irreducible(p, self.e)

    def add(self, a, b):
        p, e = self.p, self.e
        return undigits([(x + y) % p for x, y in zip(digits(a, p, e), digits(b, p, e))], p)

    def neg(self, a):
        p, e = self.p, self.e
        return undigits([(-x) % p for x in digits(a, p, e)], p)

    def mul(self, a, b):
        p, e = self.p, self.e
        da, db = digits(a, p, e), digits(b, p, e)
        prod = [0] * (2 * e)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return undigits(_poly_mod(prod, self.mod, p), p)

    def pow(self, a, k):
        r = 1
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def frob(self, a, i=1):
        for _ in range(i):
            a = self.pow(a, self.q)
        return a

    def trace(self, a):
        t = 0
        for i in range(self.m):
            t = self.add(t, self.frob(a, i))
        return t

    def subfield(self):
        return [a for a in range(self.order) if self.frob(a) == a]

    # vectors are tuples of ints
    def vadd(self, u, v):
        return tuple(self.add(x, y) for x, y in zip(u, v))

    def vscale(self, c, v):
        return tuple(self.mul(c, x) for x in v)

    def span(self, vecs, scalars):
        """Set of all linear combinations of ``vecs`` with coefficients in ``scalars``."""
        vecs = [tuple(v) for v in vecs]
        if not vecs:
            return set()
        zero = tuple(0 for _ in vecs[0])
        out = {zero}
        for v in vecs:
            if v in out:
                continue
            multiples = [self.vscale(c, v) for c in scalars]
            out = {self.vadd(x, w) for x in out for w in multiples}
        return out

    def fq_span(self, vecs):
        return self.span(vecs, self.subfield())

    def fqm_span(self, vecs):
        return self.span(vecs, range(self.order))

    def dim(self, s, size):
        d = round(math.log(len(s), size))
        assert size**d == len(s)
        return d


def rank_weight(F: OField, v):
    return F.dim(F.fq_span([(x,) for x in v]), F.q)


def support(F: OField, v):
    """Rank support through trace functionals: {(Tr(l v_1), ..., Tr(l v_n)) : l}."""
    return {tuple(F.trace(F.mul(l, x)) for x in v) for l in range(F.order)}


def all_subspaces(F: OField, N, r, scalars):
    """Every r-dimensional subspace of scalars^N, as frozensets (brute force)."""
    vecs = list(itertools.product(scalars, repeat=N))
    seen = set()
    for combo in itertools.combinations(vecs, r):
        s = frozenset(F.span(combo, scalars))
        if len(s) == len(scalars) ** r:
            seen.add(s)
    return seen


def is_galois_closed(F: OField, A):
    return all(tuple(F.frob(x) for x in v) in A for v in A)


def codewords(F: OField, G):
    """All codewords of the code generated by the rows of G."""
    return F.fqm_span(G)


def gen_weights_subcodes(F: OField, G):
    """d_r = min over r-dimensional subcodes D of dim_{F_q} of the sum of supports."""
    k = len(G)
    C = sorted(codewords(F, G))
    nonzero = [c for c in C if any(c)]
    sup = {c: support(F, c) for c in nonzero}
    out = []
    for r in range(1, k + 1):
        subcodes = set()
        for combo in itertools.combinations(nonzero, r):
            D = frozenset(F.fqm_span(combo))
            if len(D) == F.order**r:
                subcodes.add(D)
        best = None
        for D in subcodes:
            S = F.fq_span([w for c in D if any(c) for w in sup[c]])
            d = F.dim(S, F.q)
            best = d if best is None else min(best, d)
        out.append(best)
    return tuple(out)


def hyperplanes(F: OField, k):
    """All (k-1)-dimensional F_{q^m}-subspaces of F_{q^m}^k as kernels of nonzero functionals."""
    seen = set()
    vecs = list(itertools.product(range(F.order), repeat=k))
    for a in vecs:
        if not any(a):
            continue
        H = frozenset(v for v in vecs if _dot(F, a, v) == 0)
        seen.add(H)
    return seen


def _dot(F, a, v):
    t = 0
    for x, y in zip(a, v):
        t = F.add(t, F.mul(x, y))
    return t


def is_cutting(F: OField, U_basis, k):
    U = F.fq_span(U_basis)
    for H in hyperplanes(F, k):
        inter = [u for u in U if u in H]
        if len(F.fqm_span(inter)) != len(H):
            return False
    return True


def max_point_weight(F: OField, U_basis):
    """max over nonzero u in U of dim_{F_q}(<u>_{F_{q^m}} ∩ U)."""
    U = F.fq_span(U_basis)
    best = 0
    for u in U:
        if not any(u):
            continue
        hits = sum(1 for l in range(F.order) if F.vscale(l, u) in U)
        best = max(best, F.dim(range(hits), F.q))
    return best


def is_minimal(F: OField, G):
    """True iff no two non-proportional codewords have nested supports."""
    C = [c for c in codewords(F, G) if any(c)]
    sup = {c: frozenset(support(F, c)) for c in C}
    for u in C:
        line = {F.vscale(l, u) for l in range(1, F.order)}
        for v in C:
            if v not in line and sup[u] <= sup[v]:
                return False
    return True
