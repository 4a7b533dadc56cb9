import math

import numpy as np
import pytest

from minkcurves.frenet_numeric import CurveSpec, TabulatedCurve
from minkcurves.lorentz_core import Vec3M


class CallableCurve(CurveSpec):
    """Test helper: a curve defined by explicit position/derivative callables."""

    def __init__(self, position, derivs, domain):
        self._position = position
        self._derivs = derivs
        self.domain = domain

    def position(self, t):
        return Vec3M(*self._position(t))

    def derivative(self, t, order):
        if self._derivs is None or order > len(self._derivs):
            return None
        return Vec3M(*self._derivs[order - 1](t))

    @property
    def has_exact_derivatives(self):
        return self._derivs is not None


@pytest.fixture
def circular_helix():
    """Unit-speed time-like helix (sqrt(2) t, cos t, sin t): kappa=1, tau=-sqrt(2)."""
    r2 = math.sqrt(2.0)
    return CallableCurve(
        position=lambda t: (r2 * t, math.cos(t), math.sin(t)),
        derivs=[
            lambda t: (r2, -math.sin(t), math.cos(t)),
            lambda t: (0.0, -math.cos(t), -math.sin(t)),
            lambda t: (0.0, math.sin(t), -math.cos(t)),
        ],
        domain=(-10.0, 10.0),
    )


@pytest.fixture
def plane_hyperbola():
    """Unit-speed plane curve (sinh t, cosh t, 0): kappa=1, tau=0."""
    return CallableCurve(
        position=lambda t: (math.sinh(t), math.cosh(t), 0.0),
        derivs=[
            lambda t: (math.cosh(t), math.sinh(t), 0.0),
            lambda t: (math.sinh(t), math.cosh(t), 0.0),
            lambda t: (math.cosh(t), math.sinh(t), 0.0),
        ],
        domain=(-5.0, 5.0),
    )


@pytest.fixture
def timelike_line():
    ts = np.linspace(0.0, 2.0, 9)
    pts = np.stack([2.0 * ts, 1.0 * ts, np.zeros_like(ts)], axis=1)
    return TabulatedCurve(ts, pts)


@pytest.fixture
def lightlike_line():
    ts = np.linspace(0.0, 2.0, 9)
    pts = np.stack([ts, ts, np.zeros_like(ts)], axis=1)
    return TabulatedCurve(ts, pts)


@pytest.fixture
def spacelike_line():
    ts = np.linspace(0.0, 2.0, 9)
    pts = np.stack([ts, 2.0 * ts, np.zeros_like(ts)], axis=1)
    return TabulatedCurve(ts, pts)
