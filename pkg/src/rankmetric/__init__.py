"""Rank-metric codes, q-systems and exhaustive checks of their structure."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AmbientMismatch,
    BudgetExceeded,
    DegenerateCodeError,
    FieldError,
    InvariantViolation,
    RankMetricError,
    SingularMatrixError,
)
from .fields import FieldCtx, FieldParams, field, make_field  # noqa: E402
from .linalg import Subspace, enumerate_subspaces, gaussian_binomial  # noqa: E402
from .qsystems import QSystem  # noqa: E402
from .rank_codes import RankCode  # noqa: E402
