"""Means of accretive and positive definite matrices, and a randomized,
angle-certified verification harness for the identities and inequalities
they satisfy.

The compiled recurrence kernel is used when available; see
:func:`sectorial_means.backend.backend_name`.
"""

from .backend import backend_name
from .errors import (
    ConfigError,
    DimensionMismatch,
    DomainError,
    InputError,
    InvalidAngle,
    InvalidBounds,
    InvalidMu,
    InvalidWeights,
    NoConvergence,
    NotAccretive,
    NotHermitian,
    ParseError,
    SectorialMeansError,
    SingularMatrix,
    SpectrumOnCut,
    UnknownCheck,
)
from .linalg import (
    DEFAULT_TOL,
    LoewnerVerdict,
    PowerInfo,
    SectorialCert,
    ToleranceConfig,
    accretivity_margin,
    as_matrix,
    eig_hermitian,
    herm_part,
    inv,
    is_accretive,
    loewner_cmp,
    loewner_leq,
    principal_power,
    principal_sqrt,
    schur,
    sectorial_angle,
    shifted_sector_angle,
    skew_part,
    spectral_norm,
)
from .maps import (
    IsometryCompression,
    Pinching,
    PositiveUnitalMap,
    TraceMap,
    UnitaryAverage,
    random_pulm,
)
from .matrixio import dump_matrix, load_matrix, matrix_from_dict, matrix_to_dict
from .means import (
    ah_mean,
    ah_riccati_residual,
    arithmetic_mean,
    check_weights,
    drury_residual,
    drury_solve,
    geometric_mean,
    harmonic_mean,
    resolvent_average,
    resolvent_rep_function,
)
from .rand import (
    EnsembleSpec,
    check_rng,
    rand_isometry,
    rand_pd,
    rand_sectorial,
    rand_unitary,
    rand_weights,
)
from .theorems import (
    EQ_TOL,
    CampaignConfig,
    CampaignResult,
    CheckReport,
    CheckSpec,
    list_checks,
    run_all,
    run_check,
)

__version__ = "0.1.0"
