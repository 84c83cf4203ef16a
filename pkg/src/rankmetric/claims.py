"""Registry of executable claims and the JSON reports they produce.

Each claim recomputes a structural statement about a concrete code or
system from scratch and compares it with the expected value.  Claims are
grouped into suites; ``paper-core`` holds the flagship checks.
"""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import __version__, constructions as K, linalg, qsystems as Q, rank_codes as R
from .errors import BudgetExceeded, RankMetricError
from .fields import field as make
from .linalg import DEFAULT_ENUM_BUDGET
from .serialize import to_jsonable

log = logging.getLogger("rankmetric")


@dataclass
class ClaimSpec:
    claim_id: str
    params: dict = field(default_factory=dict)
    budget: int = DEFAULT_ENUM_BUDGET
    seed: int = 1
    workers: int = 1

    def __post_init__(self):
        if self.claim_id not in REGISTRY:
            raise KeyError(f"unknown claim {self.claim_id!r}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        unknown = set(self.params) - set(REGISTRY[self.claim_id].defaults)
        if unknown:
            raise ValueError(f"{self.claim_id} takes no parameter(s) {sorted(unknown)}")


@dataclass
class VerificationReport:
    claim_id: str
    status: str  # pass | fail | skipped-budget
    statement: str
    expected: object
    observed: object
    witnesses: list
    elapsed_ms: float
    scanned: dict
    version: str
    seed: int
    params: dict

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class Outcome:
    passed: bool
    expected: object
    observed: object
    witnesses: list = field(default_factory=list)
    scanned: dict = field(default_factory=dict)
    ctx: object = None


@dataclass
class Claim:
    claim_id: str
    statement: str
    run: Callable[[ClaimSpec], Outcome]
    defaults: dict = field(default_factory=dict)


REGISTRY: dict[str, Claim] = {}
SUITES: dict[str, list[str]] = {"paper-core": [], "paper-extended": [], "property-random": [], "empty": []}


def claim(claim_id: str, statement: str, suites=("paper-core",), **defaults):
    def deco(fn):
        REGISTRY[claim_id] = Claim(claim_id, statement, fn, defaults)
        for s in suites:
            SUITES[s].append(claim_id)
        return fn
    return deco


def _p(spec: ClaimSpec, key: str):
    return spec.params.get(key, REGISTRY[spec.claim_id].defaults.get(key))


# -- flagship system U ------------------------------------------------------


def _u_scattered(spec: ClaimSpec) -> Outcome:
    h = int(_p(spec, "h"))
    ctx = make(2, h, 4)
    U = K.construction_U(ctx)
    v = Q.is_scattered(U, budget=spec.budget, workers=spec.workers)
    maximum = U.n * 2 == U.k * ctx.m
    expect_scattered = h % 4 != 2
    observed = {"scattered": v.value, "maximum_dimension": maximum, "max_point_weight": v.details["max_weight"]}
    expected = {"scattered": expect_scattered, "maximum_dimension": True}
    passed = v.value == expect_scattered and maximum
    wit = []
    if not v.value:
        wit.append({"point": v.witness["subspace"], "weight": v.witness["weight"]})
        passed = passed and v.witness["weight"] >= 2
    return Outcome(passed, expected, observed, wit, {"lines_of_U": v.scanned}, ctx)


_U_STMT = ("The [8,4] system {(x, y, x^q+y^(q^2), x^(q^2)+y^q+y^(q^2))} in F_(q^4)^4, q=2^h, "
           "is maximum scattered exactly when h is not 2 mod 4")
claim("thm-Uscattered-q2", _U_STMT + " (instance q=2: scattered).", h=1)(_u_scattered)
claim("thm-Uscattered-q4", _U_STMT + " (instance q=4: not scattered, witness point of weight >= 2).", h=2)(_u_scattered)
claim("thm-Uscattered-q8", _U_STMT + " (instance q=8: scattered).", suites=("paper-extended",), h=3)(_u_scattered)


@claim("thm-Uevasive-q2", "Over F_16/F_2 the [8,4] system U meets every 2-dimensional F_16-subspace "
       "in F_2-dimension at most 3, and some subspace attains 3.")
def _u_evasive(spec):
    ctx = make(2, 1, 4)
    U = K.construction_U(ctx)
    rep = Q.max_weight(U, 2, budget=spec.budget, workers=spec.workers)
    obs = {"max_weight": rep.max_weight, "evasive_2_3": rep.max_weight <= 3, "evasive_2_2": rep.max_weight <= 2}
    exp = {"max_weight": 3, "evasive_2_3": True, "evasive_2_2": False}
    return Outcome(obs == exp, exp, obs, [{"subspace": rep.witness, "weight": rep.max_weight}],
                   {"subspaces": rep.scanned}, ctx)


@claim("prop-Cgenweights-q2", "The [8,4] code over F_16/F_2 whose generator columns parametrize U is MRD "
       "with generalized rank weights (3,5,7,8); d_1 and d_2 are confirmed from the Galois-closed definition.")
def _c_genweights(spec):
    ctx = make(2, 1, 4)
    C = K.code_C(ctx)
    prof = R.generalized_weights_geometric(C, budget=spec.budget, workers=spec.workers)
    g1 = R.generalized_weights_galois(C, 1, budget=spec.budget)
    g2 = R.generalized_weights_galois(C, 2, budget=spec.budget)
    mrd = R.is_MRD(C, budget=spec.budget)
    obs = {"profile": list(prof), "galois_d1": g1, "galois_d2": g2, "mrd": mrd}
    exp = {"profile": [3, 5, 7, 8], "galois_d1": 3, "galois_d2": 5, "mrd": True}
    return Outcome(obs == exp, exp, obs, [], {}, ctx)


@claim("cor-directsum84-q2", "The direct sum of two [4,2] Delsarte-Gabidulin codes over F_16/F_2 has "
       "generalized rank weights (3,4,7,8).")
def _directsum(spec):
    ctx = make(2, 1, 4)
    D = K.direct_sum(K.gabidulin(ctx, 4, 2), K.gabidulin(ctx, 4, 2))
    prof = R.generalized_weights_geometric(D, budget=spec.budget, workers=spec.workers)
    obs = {"profile": list(prof), "mrd": R.is_MRD(D, budget=spec.budget)}
    exp = {"profile": [3, 4, 7, 8], "mrd": True}
    return Outcome(obs == exp, exp, obs, [], {}, ctx)


@claim("cor-minimality-split-q2", "The [8,4] code built from U is minimal and the direct sum of two "
       "[4,2] Gabidulin codes is not; both the support scan and the d_2 >= m+1 test agree.")
def _minimality(spec):
    ctx = make(2, 1, 4)
    C = K.code_C(ctx)
    D = K.direct_sum(K.gabidulin(ctx, 4, 2), K.gabidulin(ctx, 4, 2))
    vc, vd = R.is_minimal_direct(C, spec.budget), R.is_minimal_direct(D, spec.budget)
    dc, dd = R.is_minimal_via_d2(C, spec.budget, spec.workers), R.is_minimal_via_d2(D, spec.budget, spec.workers)
    obs = {"C": {"direct": vc.value, "via_d2": dc.value, "d2": dc.details["d2"]},
           "D1+D2": {"direct": vd.value, "via_d2": dd.value, "d2": dd.details["d2"]}}
    exp = {"C": {"direct": True, "via_d2": True, "d2": 5}, "D1+D2": {"direct": False, "via_d2": False, "d2": 4}}
    wit = [vd.witness] if vd.witness else []
    passed = obs == exp and bool(wit)
    return Outcome(passed, exp, obs, wit, {"codewords_C": vc.scanned, "codewords_D": vd.scanned}, ctx)


# -- random corpora -------------------------------------------------------------

CORPUS_CONFIGS = [(3, 3, 2), (4, 3, 2)]


def random_corpus(seed: int, per_config: int):
    """Seeded systems at (k, m, q) in CORPUS_CONFIGS with n in {m+k-1, m+k, m+k+1}."""
    out = []
    ci = 0
    for k, m, q in CORPUS_CONFIGS:
        ctx = make(q, 1, m)
        for n in (m + k - 1, m + k, m + k + 1):
            for i in range(per_config):
                s = seed * 1_000_003 + ci * 10_007 + i
                out.append(((k, m, q, n, s), K.random_qsystem(ctx, k, n, s)))
            ci += 1
    return out


@claim("thm-caract-random", "A system is cutting exactly when it is (k-2, n-m-1)-evasive; checked on seeded "
       "random systems at (k,m,q) in {(3,3,2),(4,3,2)} with n in {m+k-1, m+k, m+k+1}.", per_config=34)
def _caract(spec):
    corpus = random_corpus(spec.seed, int(_p(spec, "per_config")))
    dis, cut = [], 0
    for key, U in corpus:
        a = Q.is_cutting_direct(U, spec.budget, spec.workers)
        b = Q.is_cutting_via_evasive(U, budget=spec.budget, workers=spec.workers)
        cut += a.value
        if a.value != b.value:
            dis.append({"instance": list(key), "direct": a.value, "via_evasive": b.value, "system": U})
    obs = {"systems": len(corpus), "cutting": cut, "disagreements": len(dis)}
    exp = {"systems": len(corpus), "disagreements": 0}
    ctx = corpus[0][1].ctx
    return Outcome(not dis and len(corpus) >= 200, exp, obs, dis[:5], {"systems": len(corpus)}, ctx)


@claim("thm-minimal-secondweight-random", "The code of a system is minimal exactly when the system is cutting, "
       "and exactly when d_2 >= m+1; checked on the same random corpus.", per_config=34)
def _minimal_secondweight(spec):
    corpus = random_corpus(spec.seed, int(_p(spec, "per_config")))
    dis, minimal = [], 0
    for key, U in corpus:
        cut = Q.is_cutting_direct(U, spec.budget, spec.workers).value
        C = Q.psi(U)
        mind = R.is_minimal_direct(C, spec.budget)
        vd2 = R.is_minimal_via_d2(C, spec.budget, spec.workers).value
        minimal += mind.value
        if not (mind.value == cut == vd2):
            dis.append({"instance": list(key), "cutting": cut, "minimal_direct": mind.value,
                        "minimal_via_d2": vd2, "system": U})
    obs = {"systems": len(corpus), "minimal": minimal, "disagreements": len(dis)}
    exp = {"systems": len(corpus), "disagreements": 0}
    ctx = corpus[0][1].ctx
    return Outcome(not dis and len(corpus) >= 200, exp, obs, dis[:5], {"systems": len(corpus)}, ctx)


@claim("prop-cutting8", "For u in F_(q^3) outside F_q the system {(a0+a1u, ..., a6+a7u) : a_i in F_q} is a "
       "cutting [8,4] system; checked by a full hyperplane scan at each listed q.", qs=[2, 3])
def _cutting8(spec):
    obs, exp, wit, scanned = {}, {}, [], {}
    ctx = None
    for q in _p(spec, "qs"):
        ctx = make(int(q), 1, 3)
        U = K.cutting_84_q3(ctx)
        v = Q.is_cutting_direct(U, spec.budget, spec.workers)
        pw = Q.max_weight(U, 1, budget=spec.budget).max_weight
        count = (q**12 - 1) // (q**3 - 1)
        obs[f"q={q}"] = {"cutting": v.value, "hyperplanes": v.scanned, "max_point_weight": pw}
        exp[f"q={q}"] = {"cutting": True, "hyperplanes": count, "max_point_weight": 2}
        scanned[f"hyperplanes_q{q}"] = v.scanned
        if v.witness:
            wit.append(to_jsonable(ctx, v.witness))
    return Outcome(obs == exp, exp, obs, wit, scanned, ctx)


@claim("sec42-duality-q2", "Over F_16/F_2 the trace-dual of U under X0Y3+X3Y0-X1Y2-X2Y1 is "
       "{(z, t, z^(q^3)+z^(q^2)+t^(q^2), z^(q^2)+t^(q^3))}, and the 0/1 matrix with rows "
       "0110, 1011, 0101, 1010 maps U onto it.")
def _duality(spec):
    ctx = make(2, 1, 4)
    U = K.construction_U(ctx)
    Ud = Q.tau_prime_dual(U, K.sigma_42(ctx))
    formula = K.construction_U_dual(ctx)
    mapped = Q.apply_gl(U, K.equivalence_matrix_U().T)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    subst_ok = True
    M = K.equivalence_matrix_U()
    fr, add = ctx.frobenius, ctx.add
    for x, y in rng.integers(0, ctx.order, size=(100, 2)):
        x, y = int(x), int(y)
        u = np.array([x, y, add(fr(x, 1), fr(y, 2)), add(add(fr(x, 2), fr(y, 1)), fr(y, 2))])
        z = add(add(fr(x, 1), y), fr(y, 2))
        t = add(add(add(x, fr(x, 1)), fr(x, 2)), fr(y, 1))
        w = np.array([z, t, add(add(fr(z, 3), fr(z, 2)), fr(t, 2)), add(fr(z, 2), fr(t, 3))])
        subst_ok &= bool(np.array_equal(linalg.matmul(ctx, M, u[:, None])[:, 0], w))
    obs = {"dual_equals_formula": Q.same_system(Ud, formula), "dual_dimension": Ud.n,
           "matrix_maps_U_onto_dual": Q.same_system(mapped, Ud), "substitution_checks": subst_ok}
    exp = {"dual_equals_formula": True, "dual_dimension": 8, "matrix_maps_U_onto_dual": True,
           "substitution_checks": True}
    return Outcome(obs == exp, exp, obs, [], {"random_pairs": 100}, ctx)


def random_pesi_instance(ctx, k: int, rng: np.random.Generator):
    """A random F_q-subspace U, F_{q^m}-subspace R and invertible form S of F_{q^m}^k."""
    t_rows = int(rng.integers(0, k * ctx.m + 1))
    U = rng.integers(0, ctx.order, size=(t_rows, k), dtype=np.int64)
    s_rows = int(rng.integers(0, k + 1))
    Rr = rng.integers(0, ctx.order, size=(s_rows, k), dtype=np.int64)
    while True:
        S = rng.integers(0, ctx.order, size=(k, k), dtype=np.int64)
        if linalg.is_invertible(ctx, S):
            return U, Rr, S


@claim("eq-pesi-random", "For an F_q-subspace U of dimension t and an F_(q^m)-subspace R of dimension s of "
       "F_(q^m)^k, dim(U' ∩ R') - dim(U ∩ R) = km - t - sm for the trace-form and form complements; "
       "checked on seeded random pairs at k=3, m=3, q=2.", pairs=100)
def _pesi(spec):
    ctx = make(2, 1, 3)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    bad = []
    n_pairs = int(_p(spec, "pairs"))
    for i in range(n_pairs):
        U, Rr, S = random_pesi_instance(ctx, 3, rng)
        lhs, rhs = Q.pesi_sides(ctx, U, Rr, S, 3)
        if lhs != rhs:
            bad.append({"pair": i, "lhs": lhs, "rhs": rhs, "U": U, "R": Rr, "sigma": S})
    obs = {"pairs": n_pairs, "violations": len(bad)}
    exp = {"pairs": n_pairs, "violations": 0}
    return Outcome(not bad, exp, obs, bad[:5], {"pairs": n_pairs}, ctx)


def random_code(ctx, n: int, k: int, rng: np.random.Generator) -> R.RankCode:
    while True:
        G = rng.integers(0, ctx.order, size=(k, n), dtype=np.int64)
        if linalg.rank(ctx, G) == k:
            return R.RankCode(ctx, G)


def profile_invariants(C: R.RankCode, budget: int, workers: int = 1) -> dict:
    """Galois and geometric profiles of C and its dual, with every invariant checked.

    Profile bounds are asserted inside the profile routines; Wei-type
    duality and oracle agreement are asserted here.
    """
    d = R.galois_profile(C, budget)
    out = {"n": C.n, "k": C.k, "galois": list(d), "nondegenerate": R.is_nondegenerate(C)}
    if out["nondegenerate"]:
        geo = R.generalized_weights_geometric(C, budget, workers)
        out["geometric"] = list(geo)
        out["agree"] = tuple(geo) == tuple(d)
    if C.k < C.n:
        Dc = R.dual_code(C)
        dd = R.galois_profile(Dc, budget)
        R.check_wei_duality(d, dd, C.n)
        out["dual_galois"] = list(dd)
    return out


@claim("props-weight-invariants", "Monotonicity, the Singleton-like and generalized-weight bounds, Wei-type "
       "duality, and agreement of the Galois-closed and geometric algorithms, on seeded random "
       "[n<=6, k<=3] codes over F_8/F_2 and on the [8,4] flagship code.", codes=60, flagship=True)
def _invariants(spec):
    ctx = make(2, 1, 3)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    shapes = [(n, k) for n in range(2, 7) for k in range(1, min(3, n) + 1)]
    mism, checked, nondeg = [], 0, 0
    for i in range(int(_p(spec, "codes"))):
        n, k = shapes[i % len(shapes)]
        C = random_code(ctx, n, k, rng)
        info = profile_invariants(C, spec.budget, spec.workers)
        checked += 1
        if info["nondegenerate"]:
            nondeg += 1
            if not info["agree"]:
                mism.append({"code": C, **info})
    obs = {"codes": checked, "nondegenerate": nondeg, "oracle_mismatches": len(mism)}
    exp = {"codes": checked, "oracle_mismatches": 0}
    if _p(spec, "flagship"):
        F16 = make(2, 1, 4)
        C = K.code_C(F16)
        info = profile_invariants(C, spec.budget, spec.workers)
        obs["flagship"] = {"galois": info["galois"], "geometric": info["geometric"], "dual": info["dual_galois"]}
        exp["flagship"] = {"galois": [3, 5, 7, 8], "geometric": [3, 5, 7, 8], "dual": [3, 5, 7, 8]}
    passed = not mism and obs.get("flagship") == exp.get("flagship")
    return Outcome(passed, exp, obs, mism[:5], {"codes": checked}, ctx)


# -- extended claims --------------------------------------------------------------


@claim("prop-cone-cutting8-q2", "Adding the line through e_5 to the cutting [8,4] system over F_8/F_2, placed "
       "in the hyperplane X_4 = 0, gives a cutting [11,5] system.", suites=("paper-extended",))
def _cone(spec):
    ctx = make(2, 1, 3)
    W = K.cutting_84_q3(ctx)
    V = K.cone(W, [0, 0, 0, 0, 1])
    v = Q.is_cutting_direct(V, spec.budget, spec.workers)
    e = Q.is_cutting_via_evasive(V, budget=spec.budget, workers=spec.workers)
    obs = {"n": V.n, "k": V.k, "cutting": v.value, "cutting_via_evasive": e.value}
    exp = {"n": 11, "k": 5, "cutting": True, "cutting_via_evasive": True}
    return Outcome(obs == exp, exp, obs, [v.witness] if v.witness else [], {"hyperplanes": v.scanned}, ctx)


@claim("prop-Cperp-equivalent-q2", "With a normal basis and its trace-dual basis the displayed matrix H generates "
       "the dual of the [8,4] code, whose system is the trace-dual of U; the dual has weights (3,5,7,8).",
       suites=("paper-extended",))
def _cperp(spec):
    ctx = make(2, 1, 4)
    G, H = K.normal_basis_generators(ctx)
    CG, CH = R.RankCode(ctx, G), R.RankCode(ctx, H)
    obs = {"H_generates_dual": R.dual_code(CG) == CH,
           "G_system_is_U": Q.same_system(Q.phi(CG), K.construction_U(ctx)),
           "H_system_is_dual_of_U": Q.same_system(Q.phi(CH), K.construction_U_dual(ctx)),
           "dual_profile": list(R.generalized_weights_geometric(CH, spec.budget, spec.workers))}
    exp = {"H_generates_dual": True, "G_system_is_U": True, "H_system_is_dual_of_U": True,
           "dual_profile": [3, 5, 7, 8]}
    return Outcome(obs == exp, exp, obs, [], {}, ctx)


@claim("cor-scattered-search", "For a [k(k-1), k] system over F_(q^(k-1)^2) being maximum (k-2)-scattered, "
       "cutting, having an MRD code and having a minimal code are equivalent; checked at k=3 on a "
       "scattered [6,3] system over F_16/F_2 found by seeded search.", suites=("paper-extended",),
       attempts=2000)
def _search(spec):
    ctx = make(2, 1, 4)
    stats: dict = {}
    U = K.search_scattered(ctx, 3, 6, spec.seed, int(_p(spec, "attempts")), stats)
    if U is None:
        return Outcome(False, {"found": True}, {"found": False, **stats}, [], stats, ctx)
    C = Q.psi(U)
    obs = {"found": True, "attempt": stats["hit"],
           "maximum_scattered": Q.is_maximum_scattered(U, 1, budget=spec.budget).value,
           "cutting": Q.is_cutting_direct(U, spec.budget, spec.workers).value,
           "mrd": R.is_MRD(C, spec.budget),
           "minimal": R.is_minimal_direct(C, spec.budget).value}
    exp = {"maximum_scattered": True, "cutting": True, "mrd": True, "minimal": True}
    passed = all(obs[k] == v for k, v in exp.items())
    return Outcome(passed, exp, obs, [U], {"attempts": stats["attempts"]}, ctx)


@claim("gabidulin-dual-mrd", "The dual of a [4,2] Delsarte-Gabidulin code over F_16/F_2 is again MRD with "
       "distance 3.", suites=("paper-extended",))
def _gab_dual(spec):
    ctx = make(2, 1, 4)
    C = K.gabidulin(ctx, 4, 2)
    D = R.dual_code(C)
    obs = {"dual_distance": R.min_distance(D, spec.budget), "dual_mrd": R.is_MRD(D, spec.budget)}
    exp = {"dual_distance": 3, "dual_mrd": True}
    return Outcome(obs == exp, exp, obs, [], {}, ctx)


# -- property-random suite -------------------------------------------------------


@claim("prop-phi-psi-roundtrip", "Passing between systems and codes preserves generalized weights, and "
       "invertible maps preserve them too; seeded random [n,3] systems over F_8/F_2.",
       suites=("property-random",), systems=12)
def _roundtrip(spec):
    ctx = make(2, 1, 3)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    bad = []
    for i in range(int(_p(spec, "systems"))):
        n = 3 + i % 5
        U = K.random_qsystem(ctx, 3, n, int(rng.integers(1 << 31)))
        d = Q.d_profile(U, spec.budget)
        C = Q.psi(U)
        d_code = R.generalized_weights_geometric(C, spec.budget)
        d_oracle = R.galois_profile(C, spec.budget)
        while True:
            A = rng.integers(0, ctx.order, size=(3, 3), dtype=np.int64)
            if linalg.is_invertible(ctx, A):
                break
        d_moved = Q.d_profile(Q.apply_gl(U, A), spec.budget)
        if not (d == d_code == d_oracle == d_moved and Q.same_system(Q.phi(C), U)):
            bad.append({"system": U, "profiles": [d, d_code, d_oracle, d_moved]})
    obs = {"systems": int(_p(spec, "systems")), "violations": len(bad)}
    return Outcome(not bad, {"violations": 0}, obs, bad[:5], {}, ctx)


@claim("prop-pesi-random-q3", "The dimension law for trace-form and form complements on seeded random pairs "
       "over F_27/F_3 at k=3.", suites=("property-random",), pairs=40)
def _pesi3(spec):
    ctx = make(3, 1, 3)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    bad = []
    for i in range(int(_p(spec, "pairs"))):
        U, Rr, S = random_pesi_instance(ctx, 3, rng)
        lhs, rhs = Q.pesi_sides(ctx, U, Rr, S, 3)
        if lhs != rhs:
            bad.append({"pair": i, "lhs": lhs, "rhs": rhs})
    obs = {"pairs": int(_p(spec, "pairs")), "violations": len(bad)}
    return Outcome(not bad, {"violations": 0}, obs, bad, {}, ctx)


# -- runner --------------------------------------------------------------------------


def run_claim(spec: ClaimSpec) -> VerificationReport:
    c = REGISTRY[spec.claim_id]
    params = {**c.defaults, **spec.params}
    t0 = time.perf_counter()
    log.info("running %s", spec.claim_id)
    try:
        out = c.run(spec)
        status = "pass" if out.passed else "fail"
        ctx = out.ctx
        expected, observed = to_jsonable(ctx, out.expected), to_jsonable(ctx, out.observed)
        witnesses, scanned = to_jsonable(ctx, out.witnesses), to_jsonable(ctx, out.scanned)
    except BudgetExceeded as exc:
        status = "skipped-budget"
        expected, observed, witnesses = None, {"what": exc.what, "count": exc.count, "budget": exc.budget}, []
        scanned = {"refused": exc.count}
    elapsed = (time.perf_counter() - t0) * 1000.0
    log.info("%s: %s in %.0f ms", spec.claim_id, status, elapsed)
    return VerificationReport(spec.claim_id, status, c.statement, expected, observed, witnesses,
                              round(elapsed, 3), scanned, __version__, spec.seed, params)


def run_suite(name: str, budget: int = DEFAULT_ENUM_BUDGET, seed: int = 1, workers: int = 1) -> list[VerificationReport]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return [run_claim(ClaimSpec(cid, {}, budget, seed, workers)) for cid in SUITES[name]]


def exit_code(reports: list[VerificationReport]) -> int:
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return 1
    if "skipped-budget" in statuses:
        return 3
    return 0


__all__ = ["ClaimSpec", "VerificationReport", "REGISTRY", "SUITES", "run_claim", "run_suite", "exit_code",
           "RankMetricError"]
