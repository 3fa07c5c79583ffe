"""Majorization and entanglement-catalysis toolkit for Schmidt vectors."""

from .bounds import (
    CandidateVerdict,
    check_candidate,
    corollary_excludes,
    dimension_lower_bound,
    elementary_symmetric,
    prefilter,
    qubit_window,
    sanders_bounds,
    theorem1_bounds,
)
from .errors import (
    CatalysisError,
    IndexOutOfRange,
    NegativeEntry,
    NotIncomparable,
    ResourceLimit,
    SumNotOne,
    ZeroDenominator,
)
from .majorization import (
    MajorizationOrder,
    ProbVec,
    ViolationSet,
    compare,
    majorization_distance,
    make_probvec,
    pmax,
    prefix_sums,
    qubit,
    tensor,
    uniform,
    violation_set,
)
from .metrics import curve, delta_catalyzed, is_catalyst, pmax_catalyzed
from .reports import ProblemFile, bounds_report
from .search import empirical_min_dimension, grid_search, scan_qubit_regions

__version__ = "0.1.0"
