"""``rmc``: run claim checks and query codes and systems from JSON files.

Standard output carries one JSON document per line; progress goes to
standard error.  Exit codes: 0 pass, 1 fail, 2 configuration error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import claims, constructions as K, qsystems as Q, rank_codes as R, serialize as S
from .errors import BudgetExceeded, RankMetricError
from .fields import field
from .linalg import DEFAULT_ENUM_BUDGET

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("rankmetric")


class ConfigError(Exception):
    pass


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, ensure_ascii=False) + "\n")
    sys.stdout.flush()


def _parse_param(s: str) -> tuple[str, object]:
    if "=" not in s:
        raise ConfigError(f"--param expects key=value, got {s!r}")
    k, v = s.split("=", 1)
    try:
        return k, json.loads(v)
    except json.JSONDecodeError:
        return k, v


def _load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc


def cmd_run(a) -> int:
    if a.claim not in claims.REGISTRY:
        raise ConfigError(f"unknown claim {a.claim!r}; try `rmc list`")
    params = dict(_parse_param(p) for p in a.param or [])
    rep = claims.run_claim(claims.ClaimSpec(a.claim, params, a.budget, a.seed, a.workers))
    _emit(rep.to_json())
    return claims.exit_code([rep])


def cmd_suite(a) -> int:
    if a.name not in claims.SUITES:
        raise ConfigError(f"unknown suite {a.name!r}; known: {sorted(claims.SUITES)}")
    reps = []
    for cid in claims.SUITES[a.name]:
        rep = claims.run_claim(claims.ClaimSpec(cid, {}, a.budget, a.seed, a.workers))
        _emit(rep.to_json())
        reps.append(rep)
    return claims.exit_code(reps)


def cmd_list(a) -> int:
    _emit({"claims": {cid: c.statement for cid, c in claims.REGISTRY.items()}, "suites": claims.SUITES})
    return EXIT_PASS


def cmd_weights(a) -> int:
    C = S.code_from_json(_load(a.code))
    out = {"n": C.n, "k": C.k, "nondegenerate": R.is_nondegenerate(C),
           "min_distance": R.min_distance(C, a.budget), "mrd": R.is_MRD(C, a.budget)}
    if out["nondegenerate"]:
        out["profile"] = list(R.generalized_weights_geometric(C, a.budget, a.workers))
        if C.k >= 2:
            out["minimal_via_d2"] = R.is_minimal_via_d2(C, a.budget, a.workers).value
    else:
        out["profile"] = list(R.galois_profile(C, a.budget))
    mv = R.is_minimal_direct(C, a.budget)
    out["minimal"] = mv.value
    if mv.witness:
        out["witness"] = S.to_jsonable(C.ctx, mv.witness)
    _emit(out)
    return EXIT_PASS


def cmd_system(a) -> int:
    U = S.system_from_json(_load(a.input))
    ctx = U.ctx
    out: dict = {"op": a.op, "n": U.n, "k": U.k}
    if a.op == "scattered":
        v = Q.is_scattered(U, a.budget, a.workers)
        out.update(scattered=v.value, maximum=v.value and 2 * U.n == U.k * ctx.m, max_point_weight=v.details["max_weight"])
        if v.witness:
            out["witness"] = S.to_jsonable(ctx, v.witness)
    elif a.op == "evasive":
        if a.h is None or a.r is None:
            raise ConfigError("--op evasive needs --h and --r")
        rep = Q.max_weight(U, a.h, budget=a.budget, workers=a.workers)
        out.update(h=a.h, r=a.r, evasive=rep.max_weight <= a.r, max_weight=rep.max_weight,
                   witness=S.to_jsonable(ctx, rep.witness), scanned=rep.scanned)
    elif a.op == "cutting":
        v = Q.is_cutting_direct(U, a.budget, a.workers)
        out.update(cutting=v.value, scanned=v.scanned)
        if v.witness:
            out["witness"] = S.to_jsonable(ctx, v.witness)
    elif a.op == "dual":
        sigma = None
        if a.sigma:
            sigma, _ = S.decode_matrix(ctx, _load(a.sigma))
        out["dual"] = S.system_to_json(Q.tau_prime_dual(U, sigma))
    elif a.op == "profile":
        out["profile"] = list(Q.d_profile(U, a.budget, a.workers))
    _emit(out)
    return EXIT_PASS


_CONSTRUCTORS = {
    "construction_U": lambda ctx, **kw: K.construction_U(ctx),
    "construction_U_dual": lambda ctx, **kw: K.construction_U_dual(ctx),
    "code_C": lambda ctx, **kw: K.code_C(ctx),
    "gabidulin": lambda ctx, n, k, **kw: K.gabidulin(ctx, int(n), int(k)),
    "cutting_84_q3": lambda ctx, **kw: K.cutting_84_q3(ctx),
    "random_qsystem": lambda ctx, k, n, seed=1, **kw: K.random_qsystem(ctx, int(k), int(n), int(seed)),
    "sigma_42": lambda ctx, **kw: K.sigma_42(ctx),
    "equivalence_matrix_U": lambda ctx, **kw: K.equivalence_matrix_U(),
}


def cmd_construct(a) -> int:
    if a.name not in _CONSTRUCTORS:
        raise ConfigError(f"unknown construction {a.name!r}; known: {sorted(_CONSTRUCTORS)}")
    try:
        params = json.loads(a.params or "{}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"--params is not JSON: {exc}") from exc
    ctx = field(int(params.pop("p", 2)), int(params.pop("h", 1)), int(params.pop("m", 4)))
    try:
        obj = _CONSTRUCTORS[a.name](ctx, **params)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
    if isinstance(obj, Q.QSystem):
        doc = S.system_to_json(obj)
    elif isinstance(obj, R.RankCode):
        doc = S.code_to_json(obj)
    else:
        doc = {"field": S.header(ctx), "matrix": S.encode_matrix(ctx, obj)}
    _emit(doc)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rmc", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="count", default=0, help="progress on stderr (-vv for debug)")

    def scan_opts(p):
        p.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET)
        p.add_argument("--workers", type=int, default=1)

    sub = ap.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("run", help="check one registered claim")
    p.add_argument("--claim", required=True)
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--seed", type=int, default=1)
    scan_opts(p)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("suite", help="check every claim of a suite")
    p.add_argument("name")
    p.add_argument("--seed", type=int, default=1)
    scan_opts(p)
    p.set_defaults(fn=cmd_suite)

    p = sub.add_parser("list", help="list claims and suites")
    p.set_defaults(fn=cmd_list)

    p = sub.add_parser("weights", help="distance, profile and predicates of a code")
    p.add_argument("--code", required=True)
    scan_opts(p)
    p.set_defaults(fn=cmd_weights)

    p = sub.add_parser("system", help="geometric predicates of a q-system")
    p.add_argument("--op", required=True, choices=["scattered", "evasive", "cutting", "dual", "profile"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--sigma", help="matrix JSON of the bilinear form for --op dual")
    scan_opts(p)
    p.set_defaults(fn=cmd_system)

    p = sub.add_parser("construct", help="print a named construction as JSON")
    p.add_argument("--name", required=True)
    p.add_argument("--params", default="{}", help='JSON, e.g. {"p":2,"h":1,"m":4}')
    p.set_defaults(fn=cmd_construct)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    a = ap.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(a.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return a.fn(a)
    except BudgetExceeded as exc:
        _emit({"error": "budget", "what": exc.what, "count": exc.count, "budget": exc.budget})
        return EXIT_BUDGET
    except (ConfigError, RankMetricError, ValueError, KeyError) as exc:
        _emit({"error": "config", "message": str(exc)})
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
