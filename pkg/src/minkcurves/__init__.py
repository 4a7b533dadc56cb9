"""Differential geometry of time-like curves in Minkowski 3-space.

Closed-form constant-curvature (Salkowski) and constant-torsion
(anti-Salkowski) families, a numerical Frenet pipeline, the two
curvature/torsion-normalizing integral transforms, and machine-checked
invariant suites, plus a CLI (`minkcurves`).
"""

from .curve_families import (
    AxisDecomposition,
    SalkowskiParams,
    anti_salkowski_invariants,
    anti_salkowski_point,
    axis_decomposition,
    salkowski_arclength,
    salkowski_frame,
    salkowski_invariants,
    salkowski_point,
    salkowski_speed,
)
from .errors import (
    ArclengthOriginUnresolved,
    CurvatureVanishes,
    DegenerateAt0,
    DomainTooSmall,
    MinkCurvesError,
    NearNullVector,
    NotTimeLike,
    QuadratureFailure,
    SignatureInvalid,
    TorsionBranchInvalid,
    TorsionVanishes,
    VanishingCurvature,
)
from .frenet_numeric import (
    AntiSalkowskiCurve,
    CurveSpec,
    FrenetSample,
    SalkowskiCurve,
    TabulatedCurve,
    arclength,
    derivatives,
    frenet_at,
    frenet_residuals,
)
from .lorentz_core import (
    CausalCharacter,
    Frame,
    Vec3M,
    causal_character,
    lorentz_cross,
    minkowski_inner,
    mnorm,
    normalize,
)
from .reports import InvariantReport
from .transforms import (
    TransformedCurve,
    curvature_normalizing_transform,
    torsion_normalizing_transform,
    transform_invariant_check,
)
from .verify import (
    SlantConfig,
    fixed_axis_angle,
    helix_ratio,
    lemma1_converse_axis,
    lemma1_forward_check,
    run_suite,
    slant_invariant,
)

__version__ = "0.1.0"
