"""Closed-form Salkowski and anti-Salkowski families of time-like curves.

Both families are parameterized by m > 1 with the derived constants

    n   = m / sqrt(m^2 - 1)        (n > 1 for every m > 1)
    phi = arccosh(n)               (the constant hyperbolic angle)

The Salkowski curve has constant curvature 1 and torsion coth(n t); the
anti-Salkowski curve has constant torsion 1 and curvature tanh(n t) (t > 0).
Both share the same Frenet frame field as functions of t, and their principal
normal makes the constant hyperbolic angle phi with the fixed axis (0, 0, 1).

Component functions are stored as explicit hyperbolic-term sums so that
derivatives of any order are exact (no finite differencing in this module).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateAt0, TorsionBranchInvalid
from .lorentz_core import Frame, Vec3M

__all__ = [
    "SalkowskiParams",
    "AxisDecomposition",
    "salkowski_point",
    "salkowski_derivative",
    "salkowski_frame",
    "salkowski_speed",
    "salkowski_arclength",
    "salkowski_invariants",
    "salkowski_torsion_from_arclength",
    "anti_salkowski_point",
    "anti_salkowski_derivative",
    "anti_salkowski_frame",
    "anti_salkowski_speed",
    "anti_salkowski_arclength",
    "anti_salkowski_invariants",
    "axis_decomposition",
]

# |t| below this is treated as the irregular point t = 0 (zero speed).
REGULARITY_T_TOL = 1e-12


@dataclass(frozen=True)
class SalkowskiParams:
    """Family parameter m > 1 with the derived constants n and phi.

    n and phi are computed once at construction; every formula below
    references them so that n/m = 1/sqrt(m^2 - 1) holds to rounding.
    """

    m: float

    def __post_init__(self):
        if not (self.m > 1.0):
            raise ValueError(f"family parameter m must exceed 1, got {self.m}")

    @property
    def n(self) -> float:
        return self.m / math.sqrt(self.m * self.m - 1.0)

    @property
    def phi(self) -> float:
        return math.acosh(self.n)


class _HyperbolicSum:
    """a0 + c*t + sum_i a_i*cosh(k_i t) + sum_j b_j*sinh(k_j t), differentiable exactly."""

    __slots__ = ("cosh_terms", "sinh_terms", "linear", "constant")

    def __init__(self, cosh_terms=(), sinh_terms=(), linear=0.0, constant=0.0):
        self.cosh_terms = tuple(cosh_terms)
        self.sinh_terms = tuple(sinh_terms)
        self.linear = linear
        self.constant = constant

    def __call__(self, t: float) -> float:
        acc = self.constant + self.linear * t
        for a, k in self.cosh_terms:
            acc += a * math.cosh(k * t)
        for b, k in self.sinh_terms:
            acc += b * math.sinh(k * t)
        return acc

    def derivative(self) -> "_HyperbolicSum":
        return _HyperbolicSum(
            cosh_terms=[(b * k, k) for b, k in self.sinh_terms],
            sinh_terms=[(a * k, k) for a, k in self.cosh_terms],
            linear=0.0,
            constant=self.linear,
        )


def _derivative_chain(components, max_order):
    chain = [tuple(components)]
    for _ in range(max_order):
        chain.append(tuple(c.derivative() for c in chain[-1]))
    return chain


@lru_cache(maxsize=64)
def _salkowski_chain(m: float):
    p = SalkowskiParams(m)
    n = p.n
    pref = n / (4.0 * m)
    c_plus = pref * (n - 1.0) / (1.0 + 2.0 * n)
    c_minus = pref * (1.0 + n) / (1.0 - 2.0 * n)
    k_plus = 1.0 + 2.0 * n
    k_minus = 1.0 - 2.0 * n
    comps = (
        _HyperbolicSum(
            cosh_terms=[(c_plus, k_plus), (-c_minus, k_minus), (2.0 * pref, 1.0)]
        ),
        _HyperbolicSum(
            sinh_terms=[(c_plus, k_plus), (-c_minus, k_minus), (2.0 * pref, 1.0)]
        ),
        _HyperbolicSum(cosh_terms=[(pref / m, 2.0 * n)]),
    )
    return _derivative_chain(comps, 4)


@lru_cache(maxsize=64)
def _anti_salkowski_chain(m: float):
    p = SalkowskiParams(m)
    n = p.n
    pref = n / (4.0 * m)
    d_plus = pref * (n - 1.0) / (2.0 * n + 1.0)
    d_minus = pref * (n + 1.0) / (2.0 * n - 1.0)
    k_plus = 1.0 + 2.0 * n
    k_minus = 1.0 - 2.0 * n
    comps = (
        _HyperbolicSum(
            sinh_terms=[(d_plus, k_plus), (-d_minus, k_minus), (2.0 * n * pref, 1.0)]
        ),
        _HyperbolicSum(
            cosh_terms=[(d_plus, k_plus), (-d_minus, k_minus), (2.0 * n * pref, 1.0)]
        ),
        _HyperbolicSum(sinh_terms=[(pref / m, 2.0 * n)], linear=pref * 2.0 * n / m),
    )
    return _derivative_chain(comps, 4)


def _eval_chain(chain, t: float, order: int) -> Vec3M:
    c = chain[order]
    return Vec3M(c[0](t), c[1](t), c[2](t))


def salkowski_point(p: SalkowskiParams, t: float) -> Vec3M:
    """Position of the constant-curvature family at parameter t.

    With k± = 1 ± 2n, the components are (n/4m) times

        ( (n-1)/(1+2n) cosh(k+ t) - (1+n)/(1-2n) cosh(k- t) + 2 cosh t,
          (n-1)/(1+2n) sinh(k+ t) - (1+n)/(1-2n) sinh(k- t) + 2 sinh t,
          cosh(2n t)/m ).

    Defined for all t; the curve is regular only for t != 0.
    """
    return _eval_chain(_salkowski_chain(p.m), t, 0)


def salkowski_derivative(p: SalkowskiParams, t: float, order: int = 1) -> Vec3M:
    """Exact derivative of salkowski_point of the given order (1..4)."""
    if not 1 <= order <= 4:
        raise ValueError(f"derivative order must be 1..4, got {order}")
    return _eval_chain(_salkowski_chain(p.m), t, order)


def salkowski_frame(p: SalkowskiParams, t: float) -> Frame:
    """Closed-form Frenet frame of the constant-curvature family.

    T = (n cosh t cosh nt - sinh t sinh nt,
         n sinh t cosh nt - cosh t sinh nt,  (n/m) cosh nt)
    N = (n/m) (cosh t, sinh t, m)
    B = (sinh t cosh nt - n cosh t sinh nt,
         cosh t cosh nt - n sinh t sinh nt, -(n/m) sinh nt)

    These formulas are kept independent of the derivative machinery so they
    can serve as an oracle for the numerical Frenet pipeline.
    """
    if abs(t) < REGULARITY_T_TOL:
        raise DegenerateAt0(f"frame undefined at the irregular parameter t={t}")
    n, m = p.n, p.m
    cht, sht = math.cosh(t), math.sinh(t)
    chn, shn = math.cosh(n * t), math.sinh(n * t)
    T = Vec3M(n * cht * chn - sht * shn, n * sht * chn - cht * shn, n / m * chn)
    N = Vec3M(n / m * cht, n / m * sht, n)
    B = Vec3M(sht * chn - n * cht * shn, cht * chn - n * sht * shn, -n / m * shn)
    return Frame(T=T, N=N, B=B)


def salkowski_speed(p: SalkowskiParams, t: float) -> float:
    """Parametric speed sinh(nt)/sqrt(m^2-1); vanishes at the irregular t=0."""
    return math.sinh(p.n * t) / math.sqrt(p.m * p.m - 1.0)


def salkowski_arclength(p: SalkowskiParams, t: float) -> float:
    """Arc-length parameter s = cosh(nt)/m (the natural origin convention).

    Note s(0) = 1/m: the additive constant is the one under which the
    intrinsic torsion law tau(s) = m s / sqrt(m^2 s^2 - 1) holds.
    """
    return math.cosh(p.n * t) / p.m


def salkowski_invariants(p: SalkowskiParams, t: float) -> tuple[float, float]:
    """(kappa, tau) = (1, coth(nt)) for t != 0."""
    if abs(t) < REGULARITY_T_TOL:
        raise DegenerateAt0("invariants undefined at the irregular parameter t=0")
    return 1.0, 1.0 / math.tanh(p.n * t)


def salkowski_torsion_from_arclength(p: SalkowskiParams, s: float) -> float:
    """Arc-length form tau(s) = m s / sqrt(m^2 s^2 - 1), valid for m|s| > 1."""
    ms = p.m * s
    if ms * ms <= 1.0:
        raise ValueError(f"arc-length torsion needs m^2 s^2 > 1, got m*s={ms}")
    return ms / math.sqrt(ms * ms - 1.0)


def anti_salkowski_point(p: SalkowskiParams, t: float) -> Vec3M:
    """Position of the constant-torsion family at parameter t.

    Components are (n/4m) times

        ( (n-1)/(2n+1) sinh(k+ t) - (n+1)/(2n-1) sinh(k- t) + 2n sinh t,
          (n-1)/(2n+1) cosh(k+ t) - (n+1)/(2n-1) cosh(k- t) + 2n cosh t,
          (sinh(2n t) + 2n t)/m ).

    The non-hyperbolic drift term 2nt in the third component is what blocks
    any closed-form arc-length reparametrization for this family.
    """
    return _eval_chain(_anti_salkowski_chain(p.m), t, 0)


def anti_salkowski_derivative(p: SalkowskiParams, t: float, order: int = 1) -> Vec3M:
    """Exact derivative of anti_salkowski_point of the given order (1..4)."""
    if not 1 <= order <= 4:
        raise ValueError(f"derivative order must be 1..4, got {order}")
    return _eval_chain(_anti_salkowski_chain(p.m), t, order)


def anti_salkowski_frame(p: SalkowskiParams, t: float) -> Frame:
    """Frenet frame of the constant-torsion family.

    The constant-torsion curve is the torsion-normalizing image of the
    constant-curvature one, and that transform transports the frame, so as a
    function of t the frame field coincides with salkowski_frame.
    """
    return salkowski_frame(p, t)


def anti_salkowski_speed(p: SalkowskiParams, t: float) -> float:
    """Parametric speed (n/m) cosh(nt); positive for all t."""
    return p.n / p.m * math.cosh(p.n * t)


def anti_salkowski_arclength(p: SalkowskiParams, t: float) -> float:
    """Arc length from t=0: sinh(nt)/m."""
    return math.sinh(p.n * t) / p.m


def anti_salkowski_invariants(p: SalkowskiParams, t: float) -> tuple[float, float]:
    """(kappa, tau) = (tanh(nt), 1) for t > 0.

    Curvature is |T'| >= 0 by definition, so for t < 0 this reports
    |tanh(nt)|; orientation is up to the caller in that regime.
    """
    if abs(t) < REGULARITY_T_TOL:
        raise DegenerateAt0("invariants undefined at the irregular parameter t=0")
    return abs(math.tanh(p.n * t)), 1.0


@dataclass(frozen=True)
class AxisDecomposition:
    """Fixed axis d resolved against the frame: d = coeff_t*T + coeff_n*N + b*B.

    b = <B, d>, coeff_n = cosh(phi) = <N, d> is the constant hyperbolic angle
    cosine, and coeff_t = tau*b = -<T, d> (the tangential expansion
    coefficient carries a sign flip because T is time-like).
    """

    d: Vec3M
    b: float
    coeff_t: float
    coeff_n: float


def axis_decomposition(p: SalkowskiParams, t: float, branch: int = 1) -> AxisDecomposition:
    """Build the fixed axis from the frame at t.

    The defining relations are <N,d> = cosh(phi), <T,d> = -tau*<B,d> and
    <d,d> = 1, giving b = <B,d> = -branch * sinh(phi)/sqrt(tau^2 - 1) and

        d = tau*b*T + cosh(phi)*N + b*B

    (the T coefficient is -<T,d> under signature (-,+,+), which is what makes
    <d,d> = -tau^2 b^2 + cosh(phi)^2 + b^2 = 1 and d constant along the
    curve).  branch=+1 corresponds to the positive-torsion case and yields
    the t-independent axis (0, 0, 1) for this family.  Requires tau^2 > 1.
    """
    if branch not in (-1, 1):
        raise ValueError(f"branch must be +1 or -1, got {branch}")
    _, tau = salkowski_invariants(p, t)
    if tau * tau <= 1.0:
        raise TorsionBranchInvalid(
            f"axis decomposition needs tau^2 > 1, got tau={tau} at t={t}"
        )
    frame = salkowski_frame(p, t)
    cosh_phi = p.n
    sinh_phi = math.sqrt(p.n * p.n - 1.0)
    b = -branch * sinh_phi / math.sqrt(tau * tau - 1.0)
    coeff_t = tau * b
    d = coeff_t * frame.T + cosh_phi * frame.N + b * frame.B
    return AxisDecomposition(d=d, b=b, coeff_t=coeff_t, coeff_n=cosh_phi)
