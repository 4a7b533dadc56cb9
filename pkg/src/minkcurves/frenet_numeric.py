"""Numerical Frenet apparatus for time-like curves under any regular parametrization.

A curve is specified by a `CurveSpec`: one of the two built-in analytic
families (with exact derivatives of any order), or a table of samples
interpolated by a B-spline.  From derivatives the module computes speed,
frame, curvature, torsion and arc length, with all derivatives taken with
respect to the parameter t and converted to arc length through the speed:

    T = a' / ||a'||            kappa = ||dT/dt|| / speed
    N = (dT/dt) / ||dT/dt||    tau   = <dN/dt, B> / speed
    B = T x N                  speed = ||a'||

Two derivative routes exist.  The analytic route applies exact chain rules to
the curve's derivative provider.  The FD route estimates dT/dt and dN/dt by
central differences of the (exactly evaluable) frame field itself, which is
what keeps second- and third-order information accurate in double precision;
raw position-stencil differences are available through `derivatives`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import make_interp_spline

from . import curve_families as cf
from .errors import (
    DomainTooSmall,
    NotTimeLike,
    QuadratureFailure,
    VanishingCurvature,
)
from .lorentz_core import (
    Frame,
    Vec3M,
    causal_character,
    lorentz_cross,
    minkowski_inner,
    mnorm,
)

__all__ = [
    "CurveSpec",
    "SalkowskiCurve",
    "AntiSalkowskiCurve",
    "TabulatedCurve",
    "FrenetSample",
    "derivatives",
    "frenet_at",
    "frenet_residuals",
    "arclength",
    "adaptive_simpson",
    "composite_simpson",
    "DEFAULT_FD_STEP",
    "KAPPA_MIN",
    "DEFAULT_DOMAIN",
]

# Step/floor defaults: truncation vs roundoff balance at double precision.
DEFAULT_FD_STEP = 1e-4
KAPPA_MIN = 1e-8
# t=0 is excluded from analytic domains: speed sinh(nt)/sqrt(m^2-1) vanishes there.
DEFAULT_DOMAIN = (1e-3, 3.0)

QUAD_TOL = 1e-10
QUAD_MAX_DEPTH = 40


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

def adaptive_simpson(f, a: float, b: float, tol: float = QUAD_TOL,
                     max_depth: int = QUAD_MAX_DEPTH, tol_floor: float = 0.0):
    """Adaptive Simpson quadrature of a scalar- or vector-valued integrand.

    Absolute tolerance; error controlled by the classic |S2-S1|/15 estimate
    with the Richardson correction added to accepted panels.  The per-interval
    tolerance halves on subdivision but never drops below tol_floor, which
    keeps the recursion from chasing integrand roundoff it can never beat.
    Raises QuadratureFailure if the subdivision budget is exhausted.
    """
    if a == b:
        return np.asarray(f(a), dtype=float) * 0.0
    fa = np.asarray(f(a), dtype=float)
    mid = 0.5 * (a + b)
    fm = np.asarray(f(mid), dtype=float)
    fb = np.asarray(f(b), dtype=float)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth, tol_floor)


def _simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth, floor):
    mid = 0.5 * (a + b)
    lm = 0.5 * (a + mid)
    rm = 0.5 * (mid + b)
    flm = np.asarray(f(lm), dtype=float)
    frm = np.asarray(f(rm), dtype=float)
    left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb)
    err = left + right - whole
    if np.max(np.abs(err)) <= 15.0 * tol:
        return left + right + err / 15.0
    if depth <= 0:
        raise QuadratureFailure(
            f"adaptive quadrature did not reach tol={tol} on [{a}, {b}]"
        )
    half = max(tol / 2.0, floor)
    return (
        _simpson_rec(f, a, mid, fa, flm, fm, left, half, depth - 1, floor)
        + _simpson_rec(f, mid, b, fm, frm, fb, right, half, depth - 1, floor)
    )


def composite_simpson(f, a: float, b: float, panels: int):
    """Fixed-panel Simpson rule; robust against integrand jitter that would
    make adaptive refinement diverge (used for quadrature-backed integrands)."""
    if a == b:
        return np.asarray(f(a), dtype=float) * 0.0
    h = (b - a) / panels
    acc = np.asarray(f(a), dtype=float) + np.asarray(f(b), dtype=float)
    for i in range(1, panels):
        acc = acc + 2.0 * np.asarray(f(a + i * h), dtype=float)
    for i in range(panels):
        acc = acc + 4.0 * np.asarray(f(a + (i + 0.5) * h), dtype=float)
    return acc * (h / 6.0)


# ---------------------------------------------------------------------------
# curve specifications
# ---------------------------------------------------------------------------

class CurveSpec:
    """A parametric curve: position, optional exact derivatives, a domain."""

    domain: tuple[float, float]

    def position(self, t: float) -> Vec3M:
        raise NotImplementedError

    def derivative(self, t: float, order: int):
        """Exact derivative of the given order, or None when unavailable."""
        return None

    @property
    def has_exact_derivatives(self) -> bool:
        return False

    def fd_step(self, t: float, order: int = 3) -> float:
        return DEFAULT_FD_STEP * max(1.0, abs(t))

    # Closed-form hooks; analytic families override.
    def closed_form_frame(self, t: float):
        return None

    def closed_form_invariants(self, t: float):
        return None

    def invariants_rate(self, t: float):
        """(dkappa/dt, dtau/dt) when known in closed form, else None."""
        return None


class _AnalyticFamilyCurve(CurveSpec):
    def __init__(self, m: float, domain: tuple[float, float] = DEFAULT_DOMAIN):
        t0, t1 = float(domain[0]), float(domain[1])
        if not (t0 > 0.0 and t1 > t0):
            raise ValueError(
                f"analytic family domain must satisfy 0 < t_min < t_max, got {domain}"
            )
        self.params = cf.SalkowskiParams(float(m))
        self.domain = (t0, t1)

    @property
    def m(self) -> float:
        return self.params.m

    @property
    def has_exact_derivatives(self) -> bool:
        return True


class SalkowskiCurve(_AnalyticFamilyCurve):
    """Constant-curvature family: kappa = 1, tau = coth(nt)."""

    def position(self, t: float) -> Vec3M:
        return cf.salkowski_point(self.params, t)

    def derivative(self, t: float, order: int) -> Vec3M:
        return cf.salkowski_derivative(self.params, t, order)

    def closed_form_frame(self, t: float) -> Frame:
        return cf.salkowski_frame(self.params, t)

    def closed_form_invariants(self, t: float):
        return cf.salkowski_invariants(self.params, t)

    def invariants_rate(self, t: float):
        n = self.params.n
        tau = 1.0 / math.tanh(n * t)
        return 0.0, n * (1.0 - tau * tau)

    def speed(self, t: float) -> float:
        return cf.salkowski_speed(self.params, t)


class AntiSalkowskiCurve(_AnalyticFamilyCurve):
    """Constant-torsion family: kappa = tanh(nt), tau = 1 (for t > 0)."""

    def position(self, t: float) -> Vec3M:
        return cf.anti_salkowski_point(self.params, t)

    def derivative(self, t: float, order: int) -> Vec3M:
        return cf.anti_salkowski_derivative(self.params, t, order)

    def closed_form_frame(self, t: float) -> Frame:
        return cf.anti_salkowski_frame(self.params, t)

    def closed_form_invariants(self, t: float):
        return cf.anti_salkowski_invariants(self.params, t)

    def invariants_rate(self, t: float):
        n = self.params.n
        kappa = math.tanh(n * t)
        return n * (1.0 - kappa * kappa), 0.0

    def speed(self, t: float) -> float:
        return cf.anti_salkowski_speed(self.params, t)


class TabulatedCurve(CurveSpec):
    """Curve interpolated from samples (t_i, p_i) by a B-spline.

    Needs at least 5 samples with strictly increasing t.  A quintic spline is
    used for 6+ points (cubic for exactly 5); the spline's own derivatives act
    as the curve's derivative provider.
    """

    def __init__(self, ts, points):
        ts = np.asarray(ts, dtype=float)
        pts = np.asarray(
            [p.as_array() if isinstance(p, Vec3M) else p for p in points], dtype=float
        )
        if ts.ndim != 1 or pts.shape != (ts.size, 3):
            raise ValueError("expected ts of shape (k,) and points of shape (k, 3)")
        if ts.size < 5:
            raise ValueError(f"tabulated curve needs >= 5 samples, got {ts.size}")
        if not np.all(np.diff(ts) > 0.0):
            raise ValueError("tabulated parameter values must be strictly increasing")
        if not np.all(np.isfinite(pts)):
            raise ValueError("tabulated points must be finite")
        k = 5 if ts.size >= 6 else 3
        spline = make_interp_spline(ts, pts, k=k)
        self._splines = [spline]
        for _ in range(3):
            self._splines.append(self._splines[-1].derivative())
        self.domain = (float(ts[0]), float(ts[-1]))

    def _eval(self, t: float, order: int) -> Vec3M:
        t0, t1 = self.domain
        if t < t0 - 1e-12 or t > t1 + 1e-12:
            raise DomainTooSmall(
                f"parameter {t} outside tabulated domain [{t0}, {t1}]"
            )
        return Vec3M.from_array(self._splines[order](min(max(t, t0), t1)))

    def position(self, t: float) -> Vec3M:
        return self._eval(t, 0)

    def derivative(self, t: float, order: int) -> Vec3M:
        return self._eval(t, order)

    @property
    def has_exact_derivatives(self) -> bool:
        # Exact for the interpolant; accuracy against the underlying curve is
        # governed by the sample density.
        return True


@dataclass(frozen=True)
class FrenetSample:
    """Per-parameter record: frame, invariants, speed and arc length at t."""

    t: float
    position: Vec3M
    frame: Frame
    kappa: float
    tau: float
    speed: float
    arclength: float


# ---------------------------------------------------------------------------
# derivatives
# ---------------------------------------------------------------------------

def _fd_position_derivative(curve: CurveSpec, t: float, order: int, h: float) -> Vec3M:
    t0, t1 = curve.domain
    if t - order * h < t0 - 1e-12 or t + order * h > t1 + 1e-12:
        raise DomainTooSmall(
            f"order-{order} stencil at t={t} with h={h} leaves domain [{t0}, {t1}]"
        )
    p = lambda x: curve.position(x).as_array()
    if order == 1:
        d = (p(t + h) - p(t - h)) / (2.0 * h)
    elif order == 2:
        d = (p(t + h) - 2.0 * p(t) + p(t - h)) / (h * h)
    elif order == 3:
        d = (p(t + 2 * h) - 2.0 * p(t + h) + 2.0 * p(t - h) - p(t - 2 * h)) / (
            2.0 * h ** 3
        )
    else:
        raise ValueError(f"derivative order must be 1..3, got {order}")
    return Vec3M.from_array(d)


def derivatives(curve: CurveSpec, t: float, order: int, h: float | None = None,
                method: str = "auto") -> Vec3M:
    """Derivative of the curve position of the given order (1..3).

    method="auto" uses the curve's exact provider when it has one and falls
    back to central differences of the position otherwise; "fd" forces the
    stencil route (O(h^2) truncation), "exact" forces the provider.
    """
    if not 1 <= order <= 3:
        raise ValueError(f"derivative order must be 1..3, got {order}")
    if method not in ("auto", "fd", "exact"):
        raise ValueError(f"unknown derivative method {method!r}")
    if method in ("auto", "exact"):
        d = curve.derivative(t, order)
        if d is not None:
            return d
        if method == "exact":
            raise ValueError("curve has no exact derivative provider")
    if h is None:
        h = curve.fd_step(t, order)
    return _fd_position_derivative(curve, t, order, h)


def _provider_derivs(curve: CurveSpec, t: float, h: float | None):
    """(d1, d2, d3) from the provider when available, else position stencils."""
    out = []
    for order in (1, 2, 3):
        d = curve.derivative(t, order)
        if d is None:
            step = h if h is not None else curve.fd_step(t, order)
            d = _fd_position_derivative(curve, t, order, step)
        out.append(d)
    return out


def _first_derivative(curve: CurveSpec, t: float, h: float | None) -> Vec3M:
    d = curve.derivative(t, 1)
    if d is not None:
        return d
    step = h if h is not None else curve.fd_step(t, 1)
    return _fd_position_derivative(curve, t, 1, step)


@dataclass(frozen=True)
class _FrameData:
    t: float
    speed: float
    frame: Frame
    kappa: float
    tau: float


def _speed_and_tangent(curve: CurveSpec, t: float, h: float | None):
    d1 = _first_derivative(curve, t, h)
    q = minkowski_inner(d1, d1)
    if q >= 0.0:
        kind = causal_character(d1)
        raise NotTimeLike(
            f"velocity at t={t} is {kind.value}, expected time-like (<a',a'>={q})"
        )
    v = math.sqrt(-q)
    return d1, v, d1 / v


def _chain_rule_normal(curve: CurveSpec, t: float, h: float | None):
    """(v, T, dT/dt, ||dT/dt||, N) via exact chain rules through the speed."""
    d1 = _first_derivative(curve, t, h)
    d2 = curve.derivative(t, 2)
    if d2 is None:
        d2 = _fd_position_derivative(curve, t, 2, h if h is not None else curve.fd_step(t, 2))
    q = minkowski_inner(d1, d1)
    if q >= 0.0:
        raise NotTimeLike(
            f"velocity at t={t} is {causal_character(d1).value}, expected time-like"
        )
    v = math.sqrt(-q)
    vdot = -minkowski_inner(d2, d1) / v
    T = d1 / v
    dT = d2 / v - d1 * (vdot / (v * v))
    w = mnorm(dT)
    if w / v <= KAPPA_MIN:
        raise VanishingCurvature(
            f"curvature {w / v} at t={t} below floor {KAPPA_MIN}; frame undefined"
        )
    return v, T, dT, w, dT / w


def _frame_data_analytic(curve: CurveSpec, t: float, h: float | None) -> _FrameData:
    d1, d2, d3 = _provider_derivs(curve, t, h)
    q = minkowski_inner(d1, d1)
    if q >= 0.0:
        raise NotTimeLike(
            f"velocity at t={t} is {causal_character(d1).value}, expected time-like"
        )
    v = math.sqrt(-q)
    vdot = -minkowski_inner(d2, d1) / v
    T = d1 / v
    dT = d2 / v - d1 * (vdot / (v * v))
    w = mnorm(dT)
    kappa = w / v
    if kappa <= KAPPA_MIN:
        raise VanishingCurvature(
            f"curvature {kappa} at t={t} below floor {KAPPA_MIN}; frame undefined"
        )
    N = dT / w
    B = lorentz_cross(T, N)
    vddot = -(minkowski_inner(d3, d1) + minkowski_inner(d2, d2)) / v - vdot * vdot / v
    ddT = (
        d3 / v
        - d2 * (2.0 * vdot / (v * v))
        + d1 * (2.0 * vdot * vdot / v ** 3 - vddot / (v * v))
    )
    wdot = minkowski_inner(ddT, dT) / w
    dN = ddT / w - dT * (wdot / (w * w))
    tau = minkowski_inner(dN, B) / v
    return _FrameData(t=t, speed=v, frame=Frame(T=T, N=N, B=B), kappa=kappa, tau=tau)


def _frame_data_fd(curve: CurveSpec, t: float, h: float | None) -> _FrameData:
    """Frame/invariants with dT/dt and dN/dt from central differences of the
    frame field (T and N evaluated exactly at the stencil points)."""
    step = h if h is not None else curve.fd_step(t, 2)
    _, v, T = _speed_and_tangent(curve, t, None)
    Tp = _speed_and_tangent(curve, t + step, None)[2]
    Tm = _speed_and_tangent(curve, t - step, None)[2]
    dT = (Tp - Tm) / (2.0 * step)
    w = mnorm(dT)
    kappa = w / v
    if kappa <= KAPPA_MIN:
        raise VanishingCurvature(
            f"curvature {kappa} at t={t} below floor {KAPPA_MIN}; frame undefined"
        )
    N = dT / w
    B = lorentz_cross(T, N)
    Np = _chain_rule_normal(curve, t + step, None)[4]
    Nm = _chain_rule_normal(curve, t - step, None)[4]
    dN = (Np - Nm) / (2.0 * step)
    tau = minkowski_inner(dN, B) / v
    return _FrameData(t=t, speed=v, frame=Frame(T=T, N=N, B=B), kappa=kappa, tau=tau)


def _frame_data(curve: CurveSpec, t: float, h: float | None = None,
                method: str = "auto") -> _FrameData:
    if method == "auto":
        method = "analytic" if curve.has_exact_derivatives else "fd"
    if method == "analytic":
        return _frame_data_analytic(curve, t, h)
    if method == "fd":
        return _frame_data_fd(curve, t, h)
    raise ValueError(f"unknown frenet method {method!r}")


def frenet_at(curve: CurveSpec, t: float, h: float | None = None,
              method: str = "auto") -> FrenetSample:
    """Full Frenet sample at t: frame, kappa, tau, speed, cumulative arc length.

    Requires a time-like velocity and kappa above the regularity floor; raises
    NotTimeLike / VanishingCurvature otherwise.  Arc length is measured by
    quadrature from the domain start.
    """
    data = _frame_data(curve, t, h, method)
    s = arclength(curve, curve.domain[0], t)
    return FrenetSample(
        t=t,
        position=curve.position(t),
        frame=data.frame,
        kappa=data.kappa,
        tau=data.tau,
        speed=data.speed,
        arclength=s,
    )


def frenet_residuals(curve: CurveSpec, t: float, h: float | None = None,
                     method: str = "auto") -> tuple[float, float, float]:
    """Max-norm residuals of the three Frenet equations at t.

    The frame field is differentiated by central differences and converted to
    arc length through the speed; the residuals measure

        r_T = || dT/ds - kappa*N ||_max
        r_N = || dN/ds - kappa*T - tau*B ||_max
        r_B = || dB/ds + tau*N ||_max

    against the kappa/tau produced by the same pipeline at t, certifying
    internal consistency of frames and invariants.
    """
    step = h if h is not None else curve.fd_step(t, 2)
    center = _frame_data(curve, t, None, method)
    plus = _frame_data(curve, t + step, None, method)
    minus = _frame_data(curve, t - step, None, method)
    v = center.speed

    def dds(a: Vec3M, b: Vec3M) -> Vec3M:
        return (a - b) / (2.0 * step * v)

    rT = dds(plus.frame.T, minus.frame.T) - center.kappa * center.frame.N
    rN = (
        dds(plus.frame.N, minus.frame.N)
        - center.kappa * center.frame.T
        - center.tau * center.frame.B
    )
    rB = dds(plus.frame.B, minus.frame.B) + center.tau * center.frame.N
    mx = lambda u: max(abs(u.x1), abs(u.x2), abs(u.x3))
    return mx(rT), mx(rN), mx(rB)


def arclength(curve: CurveSpec, t0: float, t1: float, tol: float = QUAD_TOL,
              max_depth: int = QUAD_MAX_DEPTH) -> float:
    """Signed arc length: adaptive quadrature of the speed over [t0, t1]."""
    lo, hi = curve.domain
    for x in (t0, t1):
        if x < lo - 1e-12 or x > hi + 1e-12:
            raise ValueError(f"arclength endpoint {x} outside domain [{lo}, {hi}]")
    if t0 == t1:
        return 0.0

    def speed(u: float) -> float:
        return mnorm(_first_derivative(curve, u, None))

    if t1 >= t0:
        return float(adaptive_simpson(speed, t0, t1, tol, max_depth))
    return -float(adaptive_simpson(speed, t1, t0, tol, max_depth))
