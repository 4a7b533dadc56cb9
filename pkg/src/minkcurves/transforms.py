"""Constructive integral transforms between constant-curvature and
constant-torsion curves.

Given a 2-regular time-like curve a with frame {T, N, B}, the two transforms
integrate the tangent field against a scalar weight:

    torsion-normalizing:   b(t) = integral of T(u) * ||B'(u)|| du
                           ->  kappa_b = kappa_a/tau_a, tau_b = 1
    curvature-normalizing: b(t) = integral of T(u) * ||T'(u)|| du
                           ->  kappa_b = 1, tau_b = tau_a/kappa_a

both sharing the frame of the input.  The weights are evaluated through the
Frenet relations, ||B'|| = |tau| ds/dt and ||T'|| = kappa ds/dt, so no
closed-form frame enters: the transforms depend only on position derivatives.

Integration runs from the curve's domain start (the built-in families are
irregular at t = 0), so images are compared up to a constant translation.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import CurvatureVanishes, NotTimeLike, TorsionVanishes
from .frenet_numeric import (
    CurveSpec,
    _frame_data,
    _speed_and_tangent,
    adaptive_simpson,
    composite_simpson,
)
from .lorentz_core import Vec3M, lorentz_cross, minkowski_inner, mnorm
from .reports import InvariantReport

__all__ = [
    "TransformedCurve",
    "torsion_normalizing_transform",
    "curvature_normalizing_transform",
    "transform_invariant_check",
]

# |tau| (resp. kappa) below this inside an integration range is refused
# rather than integrated across.
WEIGHT_FLOOR = 1e-8

_KINDS = ("torsion", "curvature")


class TransformedCurve(CurveSpec):
    """Image curve of one of the two normalizing transforms.

    Positions are cumulative quadrature of T*weight over a fixed lattice from
    the integration start plus a local piece, which makes evaluation
    deterministic and keeps nearby evaluations consistent to quadrature noise.
    When the base curve has exact derivatives the pieces use tight adaptive
    Simpson; otherwise (a transform of a transform) the integrand carries FD
    jitter and fixed composite panels are used instead.
    """

    _LATTICE = 0.05
    _PIECE_TOL = 1e-14
    _PANEL_WIDTH = 0.01
    # Near the integration start the weight is roundoff-jittery (the built-in
    # families are irregular there), so adaptive refinement cannot converge;
    # pieces starting inside this offset use fixed panels instead.
    _ROUGH_ZONE = 0.1
    _ROUGH_PANEL_WIDTH = 1e-3

    def __init__(self, base: CurveSpec, kind: str, start: float | None = None):
        if kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
        lo, hi = base.domain
        if start is None:
            # A base without exact derivatives is differenced, so the
            # integrand needs stencil room inside the base domain.
            t0 = lo if base.has_exact_derivatives else lo + 2.0 * base.fd_step(lo, 2)
        else:
            t0 = float(start)
        if t0 < lo - 1e-12 or t0 >= hi:
            raise ValueError(f"start {t0} outside base domain [{lo}, {hi})")
        self.base = base
        self.kind = kind
        self.domain = (t0, hi)
        self._exact_base = base.has_exact_derivatives
        self._prefix = [np.zeros(3)]
        self._pos_cache: dict[float, np.ndarray] = {}

    def _weighted_tangent(self, u: float):
        base = self.base
        if base.has_exact_derivatives:
            # Stable route through the velocity bivector: with
            # c = a' x a'' one has <c,c> = (kappa v^3)^2 and
            # <c, a'''> = kappa^2 tau v^6, hence
            #     ||T'|| = kappa*v = sqrt(<c,c>)/v^2
            #     ||B'|| = |tau|*v = |<c, a'''>| * v / <c,c>
            # which avoids the 1/v^2 cancellation of the chain-rule pipeline
            # near the irregular point where v -> 0.
            d1 = base.derivative(u, 1)
            d2 = base.derivative(u, 2)
            d3 = base.derivative(u, 3)
            q = minkowski_inner(d1, d1)
            if q >= 0.0:
                raise NotTimeLike(
                    f"velocity at u={u} is not time-like (<a',a'>={q})"
                )
            v = math.sqrt(-q)
            c = lorentz_cross(d1, d2)
            c2 = minkowski_inner(c, c)
            kappa_v = math.sqrt(max(c2, 0.0)) / (v * v)
            if kappa_v / v < WEIGHT_FLOOR:
                raise CurvatureVanishes(
                    f"kappa={kappa_v / v} below {WEIGHT_FLOOR} at u={u}"
                )
            if self.kind == "curvature":
                return d1 / v, kappa_v
            tau_v = abs(minkowski_inner(c, d3)) * v / c2
            if tau_v / v < WEIGHT_FLOOR:
                raise TorsionVanishes(
                    f"|tau|={tau_v / v} below {WEIGHT_FLOOR} at u={u}"
                )
            return d1 / v, tau_v
        if self.kind == "curvature":
            # kappa*speed = ||dT/dt||: only second-order information is needed,
            # so differentiate the tangent field instead of running the full
            # (third-order) pipeline on a quadrature-backed base.
            _, v, T = _speed_and_tangent(base, u, None)
            step = base.fd_step(u, 2)
            Tp = _speed_and_tangent(base, u + step, None)[2]
            Tm = _speed_and_tangent(base, u - step, None)[2]
            w = mnorm((Tp - Tm) / (2.0 * step))
            if w / v < WEIGHT_FLOOR:
                raise CurvatureVanishes(
                    f"kappa={w / v} below {WEIGHT_FLOOR} at u={u}"
                )
            return T, w
        data = _frame_data(base, u)
        if abs(data.tau) < WEIGHT_FLOOR:
            raise TorsionVanishes(
                f"|tau|={abs(data.tau)} below {WEIGHT_FLOOR} at u={u}"
            )
        return data.frame.T, abs(data.tau) * data.speed

    def weight(self, u: float) -> float:
        """Scalar integrand factor at u: |tau|*speed or kappa*speed."""
        return self._weighted_tangent(u)[1]

    def _integrand(self, u: float) -> np.ndarray:
        T, w = self._weighted_tangent(u)
        return T.as_array() * w

    def _integrate(self, a: float, b: float) -> np.ndarray:
        if b <= a:
            return np.zeros(3)
        if not self._exact_base:
            panels = max(1, math.ceil((b - a) / self._PANEL_WIDTH))
            return composite_simpson(self._integrand, a, b, panels)
        if a < self.domain[0] + self._ROUGH_ZONE:
            panels = max(1, math.ceil((b - a) / self._ROUGH_PANEL_WIDTH))
            return composite_simpson(self._integrand, a, b, panels)
        # Scale-aware absolute tolerance: the integrand grows like e^{kt},
        # and a fixed 1e-14 would sit below the summation roundoff floor for
        # large values.  The floor keeps subdivision from chasing integrand
        # roundoff it can never beat.
        scale = max(
            1.0,
            float(np.max(np.abs(self._integrand(0.5 * (a + b))))) * (b - a),
        )
        return adaptive_simpson(
            self._integrand, a, b, self._PIECE_TOL * scale, 48,
            tol_floor=1e-15 * scale,
        )

    def _prefix_to(self, k: int) -> np.ndarray:
        start = self.domain[0]
        while len(self._prefix) <= k:
            j = len(self._prefix)
            a = start + (j - 1) * self._LATTICE
            b = start + j * self._LATTICE
            self._prefix.append(self._prefix[-1] + self._integrate(a, b))
        return self._prefix[k]

    def position(self, t: float) -> Vec3M:
        t0, t1 = self.domain
        if t < t0 - 1e-12 or t > t1 + 1e-12:
            raise ValueError(f"parameter {t} outside transform domain [{t0}, {t1}]")
        t = min(max(t, t0), t1)
        cached = self._pos_cache.get(t)
        if cached is None:
            k = int(math.floor((t - t0) / self._LATTICE + 1e-12))
            if t0 + k * self._LATTICE > t:
                k -= 1
            k = max(k, 0)
            edge = t0 + k * self._LATTICE
            cached = self._prefix_to(k) + self._integrate(edge, t)
            self._pos_cache[t] = cached
        return Vec3M.from_array(cached)

    def fd_step(self, t: float, order: int = 3) -> float:
        # Flat steps: positions carry quadrature noise (~1e-14 local), so the
        # usual 1e-4 step is kept only for first derivatives; higher orders
        # need a larger step, and scaling it with t would let truncation
        # dominate at the far end of the domain.
        return 1e-4 if order == 1 else 3e-3


def torsion_normalizing_transform(curve: CurveSpec, t: float,
                                  start: float | None = None) -> Vec3M:
    """Image point of the constant-torsion-producing transform at t.

    Integrates T_a(u)*||B'_a(u)|| from the integration start (the curve's
    domain start by default); the image satisfies kappa = kappa_a/tau_a,
    tau = 1 and shares the input's frame.  Raises TorsionVanishes when |tau|
    drops below the floor anywhere inside the range.
    """
    return TransformedCurve(curve, "torsion", start).position(t)


def curvature_normalizing_transform(curve: CurveSpec, t: float,
                                    start: float | None = None) -> Vec3M:
    """Image point of the constant-curvature-producing transform at t.

    Integrates T_a(u)*||T'_a(u)||; the image satisfies kappa = 1,
    tau = tau_a/kappa_a and shares the input's frame.  Raises
    CurvatureVanishes when kappa drops below the floor inside the range.
    """
    return TransformedCurve(curve, "curvature", start).position(t)


def _frame_gap(f1, f2) -> float:
    # Relative per vector: frame components grow like e^{nt}, so an absolute
    # gap would be dominated by the largest component of B.
    gap = 0.0
    for a, b in ((f1.T, f2.T), (f1.N, f2.N), (f1.B, f2.B)):
        d = a - b
        scale = max(1.0, math.sqrt(b.euclid_norm_sq()))
        gap = max(gap, max(abs(d.x1), abs(d.x2), abs(d.x3)) / scale)
    return gap


def transform_invariant_check(curve: CurveSpec, which: str, grid,
                              h: float | None = None,
                              image: TransformedCurve | None = None) -> InvariantReport:
    """Check a transform's predicted invariants and frame transport on a grid.

    which = "lemma2" checks the torsion-normalizing image against
    kappa_b = |kappa_a/tau_a|, tau_b = 1; "lemma3" checks the
    curvature-normalizing image against kappa_b = 1, tau_b = |tau_a/kappa_a|.
    The image's kappa, tau and frame come from the FD Frenet pipeline on the
    quadrature-evaluated image positions; the residual at each grid point is
    the max of the two invariant deviations and the frame-transport gap
    (per-vector, relative to the base vector's component scale).
    """
    key = which.lower()
    if key not in ("lemma2", "lemma3"):
        raise ValueError(f"which must be 'lemma2' or 'lemma3', got {which!r}")
    kind = "torsion" if key == "lemma2" else "curvature"
    if image is None:
        image = TransformedCurve(curve, kind)
    elif image.kind != kind or image.base is not curve:
        raise ValueError("supplied image does not match the curve/transform kind")
    residuals = []
    for t in grid:
        base = _frame_data(curve, t)
        img = _frame_data(image, t, h, method="fd")
        if key == "lemma2":
            pred_kappa, pred_tau = abs(base.kappa / base.tau), 1.0
        else:
            pred_kappa, pred_tau = 1.0, abs(base.tau / base.kappa)
        residuals.append(
            max(
                abs(img.kappa - pred_kappa),
                abs(img.tau - pred_tau),
                _frame_gap(img.frame, base.frame),
            )
        )
    tol = 1e-4 if key == "lemma2" else 1e-3
    return InvariantReport.from_residuals(
        f"{key}-transform-invariants-and-frame-transport", grid, residuals, tol
    )
