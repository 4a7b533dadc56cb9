"""Minkowski 3-space primitives.

The ambient space is R^3 with the flat metric of signature (-,+,+):

    <u, v> = -u1*v1 + u2*v2 + u3*v3

where the first coordinate is the time-like one.  Everything here is a pure
function on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NearNullVector

__all__ = [
    "Vec3M",
    "CausalCharacter",
    "Frame",
    "minkowski_inner",
    "lorentz_cross",
    "causal_character",
    "mnorm",
    "normalize",
    "frame_gram_residual",
    "frame_cross_residual",
]

# Scale-aware null detector: |<v,v>| <= NULL_TOL * (1 + ||v||^2_euclid) is
# treated as light-like by normalize(). Guards against catastrophic
# cancellation near the light cone.
NULL_TOL = 1e-14


class CausalCharacter(Enum):
    SPACE_LIKE = "space-like"
    TIME_LIKE = "time-like"
    LIGHT_LIKE = "light-like"


@dataclass(frozen=True)
class Vec3M:
    """A 3-vector with Minkowski semantics; x1 is the time-like coordinate."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for c in (self.x1, self.x2, self.x3):
            if not math.isfinite(c):
                raise ValueError(f"Vec3M components must be finite, got {c!r}")

    def __add__(self, other: "Vec3M") -> "Vec3M":
        return Vec3M(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "Vec3M") -> "Vec3M":
        return Vec3M(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Vec3M":
        return Vec3M(-self.x1, -self.x2, -self.x3)

    def __mul__(self, a: float) -> "Vec3M":
        return Vec3M(self.x1 * a, self.x2 * a, self.x3 * a)

    __rmul__ = __mul__

    def __truediv__(self, a: float) -> "Vec3M":
        return Vec3M(self.x1 / a, self.x2 / a, self.x3 / a)

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3], dtype=float)

    @classmethod
    def from_array(cls, arr) -> "Vec3M":
        a = np.asarray(arr, dtype=float)
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def euclid_norm_sq(self) -> float:
        return self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3


def minkowski_inner(u: Vec3M, v: Vec3M) -> float:
    """Metric pairing -u1*v1 + u2*v2 + u3*v3 (symmetric, bilinear)."""
    return -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3


def lorentz_cross(u: Vec3M, v: Vec3M) -> Vec3M:
    """Lorentzian vector product of u and v.

    Explicit component expansion of the formal determinant with rows
    (i, -j, -k), (u1, u2, u3), (v1, v2, v3):

        u x v = (u2*v3 - u3*v2, u1*v3 - u3*v1, u2*v1 - u1*v2)

    The formula is written out once here to fix the sign convention; tests
    assert it agrees with the determinant expansion.  Bilinear, antisymmetric,
    and Minkowski-orthogonal to both arguments.
    """
    return Vec3M(
        u.x2 * v.x3 - u.x3 * v.x2,
        u.x1 * v.x3 - u.x3 * v.x1,
        u.x2 * v.x1 - u.x1 * v.x2,
    )


def causal_character(v: Vec3M) -> CausalCharacter:
    """Classify v by the sign of <v,v>.

    Space-like if <v,v> > 0 or v = 0, time-like if <v,v> < 0, light-like
    (null) if <v,v> = 0 and v != 0.  The zero vector is space-like by
    convention; there is no separate category.
    """
    q = minkowski_inner(v, v)
    if q < 0.0:
        return CausalCharacter.TIME_LIKE
    if q == 0.0 and (v.x1 != 0.0 or v.x2 != 0.0 or v.x3 != 0.0):
        return CausalCharacter.LIGHT_LIKE
    return CausalCharacter.SPACE_LIKE


def mnorm(v: Vec3M) -> float:
    """Norm sqrt(|<v,v>|); zero exactly on the light cone."""
    return math.sqrt(abs(minkowski_inner(v, v)))


def normalize(v: Vec3M) -> Vec3M:
    """v / mnorm(v).  Raises NearNullVector for (near-)null input.

    The guard is scale-aware: |<v,v>| <= NULL_TOL * (1 + ||v||^2_euclid).
    Causal character is preserved.
    """
    q = minkowski_inner(v, v)
    if abs(q) <= NULL_TOL * (1.0 + v.euclid_norm_sq()):
        raise NearNullVector(
            f"cannot normalize near-null vector ({v.x1}, {v.x2}, {v.x3}); <v,v>={q}"
        )
    return v / math.sqrt(abs(q))


@dataclass(frozen=True)
class Frame:
    """Orthonormal Frenet triple for a time-like curve.

    T is time-like (<T,T> = -1), N and B are space-like (<N,N> = <B,B> = +1),
    all mixed inner products vanish, and B = lorentz_cross(T, N).
    """

    T: Vec3M
    N: Vec3M
    B: Vec3M


def frame_gram_residual(frame: Frame) -> float:
    """Max deviation of the six Gram entries from signature (-1, +1, +1, 0, 0, 0)."""
    T, N, B = frame.T, frame.N, frame.B
    return max(
        abs(minkowski_inner(T, T) + 1.0),
        abs(minkowski_inner(N, N) - 1.0),
        abs(minkowski_inner(B, B) - 1.0),
        abs(minkowski_inner(T, N)),
        abs(minkowski_inner(T, B)),
        abs(minkowski_inner(N, B)),
    )


def frame_cross_residual(frame: Frame) -> float:
    """Max-abs component deviation of B from lorentz_cross(T, N)."""
    d = frame.B - lorentz_cross(frame.T, frame.N)
    return max(abs(d.x1), abs(d.x2), abs(d.x3))
