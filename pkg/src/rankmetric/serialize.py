"""JSON encodings for elements, matrices, codes, systems and witnesses.

Elements are written as "0" or "g^k"; a field header is {"p", "h", "m"};
a matrix is {"level": "Fq" | "Fqm", "rows": [[...], ...]}.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldError
from .fields import FieldCtx, field
from .linalg import Subspace, check_level
from .qsystems import QSystem
from .rank_codes import RankCode


def field_from_header(h: dict) -> FieldCtx:
    try:
        return field(int(h["p"]), int(h.get("h", 1)), int(h.get("m", 1)))
    except KeyError as exc:
        raise FieldError(f"field header lacks {exc}") from exc


def header(ctx: FieldCtx) -> dict:
    return {"p": ctx.p, "h": ctx.h, "m": ctx.m}


def encode_vector(ctx: FieldCtx, v) -> list[str]:
    return [ctx.encode(x) for x in np.asarray(v).reshape(-1)]


def decode_vector(ctx: FieldCtx, v) -> np.ndarray:
    return np.array([ctx.decode(x) for x in v], dtype=np.int64)


def encode_matrix(ctx: FieldCtx, M, level: str = "Fqm") -> dict:
    M = np.asarray(M, dtype=np.int64)
    return {"level": level, "rows": [encode_vector(ctx, r) for r in M]}


def decode_matrix(ctx: FieldCtx, d: dict) -> tuple[np.ndarray, str]:
    level = d.get("level", "Fqm")
    rows = [decode_vector(ctx, r) for r in d["rows"]]
    if len({len(r) for r in rows}) > 1:
        raise ValueError("matrix rows have different lengths")
    M = np.array(rows, dtype=np.int64)
    check_level(ctx, M, level)
    return M, level


def code_to_json(C: RankCode) -> dict:
    return {"field": header(C.ctx), "generator": encode_matrix(C.ctx, C.G)}


def code_from_json(d: dict) -> RankCode:
    ctx = field_from_header(d["field"])
    G, _ = decode_matrix(ctx, d["generator"])
    return RankCode(ctx, G)


def system_to_json(U: QSystem) -> dict:
    return {"field": header(U.ctx), "k": U.k, "basis": [encode_vector(U.ctx, r) for r in U.basis]}


def system_from_json(d: dict) -> QSystem:
    ctx = field_from_header(d["field"])
    B = np.array([decode_vector(ctx, r) for r in d["basis"]], dtype=np.int64)
    if "k" in d and B.shape[1] != int(d["k"]):
        raise ValueError(f"basis vectors have length {B.shape[1]}, header says k={d['k']}")
    return QSystem(ctx, B)


def to_jsonable(ctx: FieldCtx, obj):
    """Recursively encode witnesses: subspaces as matrices, arrays as element lists."""
    if isinstance(obj, Subspace):
        return encode_matrix(ctx, obj.basis, obj.level)
    if isinstance(obj, QSystem):
        return system_to_json(obj)
    if isinstance(obj, RankCode):
        return code_to_json(obj)
    if isinstance(obj, np.ndarray):
        if obj.ndim == 1:
            return encode_vector(ctx, obj)
        return encode_matrix(ctx, obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(ctx, v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(ctx, v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj
