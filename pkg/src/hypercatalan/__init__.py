"""Exact hyper-Catalan, Geode and Tutrank arrays with truncated power series."""
from .catalan_core import (
    VerificationReport,
    catalan,
    fine_check,
    fine_lhs,
    fuss,
    hyper_catalan,
    hyper_catalan_power,
    hyper_catalan_recurrence,
    multinomial,
    segner_check,
    tutrank,
)
from .errors import (
    BaseMismatch,
    HyperCatalanError,
    InvalidMultinomial,
    InvalidTypeVector,
    NotDivisible,
    OutOfTruncation,
    PivotZero,
    UnboundedEnumeration,
    Unsupported,
)
from .geode import geode_number, geode_series, jumbo_geode_series
from .kernels import BACKEND
from .root_solver import (
    ExactPolynomial,
    SolveConfig,
    SolveReport,
    bootstrap_solve,
    series_eval,
    taylor_shift,
)
from .series import (
    Bounds,
    TruncatedSeries,
    divide_by_layer1,
    multiply,
    power,
    residual_S,
    residual_T,
    solve_S,
    solve_T,
)
from .type_vectors import EulerStats, TypeVector, combine, enumerate_types, stats

__version__ = "0.1.0"
