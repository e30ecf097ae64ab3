"""Exact classification of properly discontinuous affine lattice actions.

The lattice Z^k acts on R^(k+1) through a two-step nilpotent group of
unipotent affine transformations.  This package parametrizes all such
actions by two disjoint charts, decides proper discontinuity exactly over
the rationals, normalizes parameters to canonical orbit representatives,
and independently verifies verdicts by brute-force box return counting.
"""

from .deformation import (
    CanonicalForm,
    Crossing,
    NotProperError,
    StabilityReport,
    act_on_param,
    canonicalize,
    orbit_equivalent,
    stability_probe,
)
from .group import (
    GroupElement,
    LieElement,
    Point,
    act_on_point,
    adjoint,
    group_element,
    group_exp,
    group_log,
    identity,
    in_isotropy_variety,
    inverse_element,
    lie_element,
    multiply,
)
from .homspace import (
    Branch1Param,
    Branch2Param,
    NotCommutingError,
    Param,
    ZeroZVectorError,
    branch1_approximant,
    branch1_generators,
    branch1_param,
    branch2_generators,
    branch2_param,
    generators,
    in_branch1_closure,
    parse_generators,
)
from .linalg import Matrix, det, nullspace, rank
from .oracle import (
    INCONCLUSIVE,
    NOT_PROPER,
    PROPER,
    InvalidScheduleError,
    OracleReport,
    box_returns,
    compiled_kernel_available,
    count_box_returns,
    lattice_element,
    oracle_verdict,
)
from .pencil import (
    IDENTICALLY_ZERO,
    count_real_roots,
    isolate_real_root,
    pencil_polynomial,
    pencil_subleading_coefficient,
)
from .properness import (
    GenericDimensions,
    InvalidKError,
    PropernessVerdict,
    derivative_map,
    generic_dimension,
    has_nonzero_real_eigenvalue,
    identity_slice_proper,
    is_generic,
    is_injective,
    is_proper,
    is_proper_lie,
)

__version__ = "0.1.0"

__all__ = [
    "Branch1Param",
    "Branch2Param",
    "CanonicalForm",
    "Crossing",
    "GenericDimensions",
    "GroupElement",
    "IDENTICALLY_ZERO",
    "INCONCLUSIVE",
    "InvalidKError",
    "InvalidScheduleError",
    "LieElement",
    "Matrix",
    "NOT_PROPER",
    "NotCommutingError",
    "NotProperError",
    "OracleReport",
    "PROPER",
    "Param",
    "Point",
    "PropernessVerdict",
    "StabilityReport",
    "ZeroZVectorError",
    "act_on_param",
    "act_on_point",
    "adjoint",
    "box_returns",
    "branch1_approximant",
    "branch1_generators",
    "branch1_param",
    "branch2_generators",
    "branch2_param",
    "canonicalize",
    "compiled_kernel_available",
    "count_box_returns",
    "count_real_roots",
    "derivative_map",
    "det",
    "generators",
    "generic_dimension",
    "group_element",
    "group_exp",
    "group_log",
    "has_nonzero_real_eigenvalue",
    "identity",
    "identity_slice_proper",
    "in_branch1_closure",
    "in_isotropy_variety",
    "inverse_element",
    "is_generic",
    "is_injective",
    "is_proper",
    "is_proper_lie",
    "isolate_real_root",
    "lattice_element",
    "lie_element",
    "multiply",
    "nullspace",
    "oracle_verdict",
    "orbit_equivalent",
    "parse_generators",
    "pencil_polynomial",
    "pencil_subleading_coefficient",
    "rank",
    "stability_probe",
]
