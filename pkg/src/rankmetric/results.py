"""Small result records returned by predicates and scans."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Truth value of a predicate plus the evidence behind it.

    ``witness`` is set whenever a universally quantified predicate fails.
    """

    value: bool
    witness: Any = None
    scanned: int = 0
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.value)


@dataclass
class EvasivenessReport:
    h: int
    max_weight: int
    witness: Any  # Subspace attaining the maximum
    scanned: int
    method: str = "subspaces"
