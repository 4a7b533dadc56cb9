"""Exception types raised by the geometric and numerical layers."""


class MinkCurvesError(Exception):
    """Base class for all package-specific errors."""


class NearNullVector(MinkCurvesError):
    """Normalization requested for a vector too close to the light cone (or zero)."""


class DomainTooSmall(MinkCurvesError):
    """A finite-difference stencil would leave the curve's parameter domain."""


class NotTimeLike(MinkCurvesError):
    """The velocity vector fails the time-like causal check."""


class VanishingCurvature(MinkCurvesError):
    """Curvature below the regularity floor; the Frenet frame is undefined."""


class DegenerateAt0(MinkCurvesError):
    """Closed-form frame requested at the irregular parameter value t = 0."""


class QuadratureFailure(MinkCurvesError):
    """Adaptive quadrature exhausted its subdivision budget above tolerance."""


class TorsionVanishes(MinkCurvesError):
    """Torsion falls below threshold inside a transform's integration range."""


class CurvatureVanishes(MinkCurvesError):
    """Curvature falls below threshold inside a transform's integration range."""


class TorsionBranchInvalid(MinkCurvesError):
    """Axis decomposition requires tau^2 > 1 for a real binormal coefficient."""


class SignatureInvalid(MinkCurvesError):
    """Slant-invariant radicand eps1*kappa^2 + eps2*tau^2 is nonpositive on the grid."""


class ArclengthOriginUnresolved(MinkCurvesError):
    """Arc-length origin calibration for the intrinsic-equation check failed."""
