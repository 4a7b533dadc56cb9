"""Invariant check reports shared by the transform and verification layers."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["InvariantReport"]


@dataclass(frozen=True)
class InvariantReport:
    """Outcome of one named residual check over a parameter grid.

    `passed` is always max_residual <= tolerance; `details` carries the
    per-point residuals in grid order.
    """

    name: str
    grid: tuple[float, ...]
    max_residual: float
    tolerance: float
    passed: bool
    details: tuple[float, ...] = field(default=())
    notes: str = ""

    @classmethod
    def from_residuals(cls, name: str, grid, residuals, tolerance: float,
                       notes: str = "") -> "InvariantReport":
        res = tuple(float(r) for r in residuals)
        mx = max(res) if res else 0.0
        return cls(
            name=name,
            grid=tuple(float(t) for t in grid),
            max_residual=mx,
            tolerance=float(tolerance),
            passed=mx <= tolerance,
            details=res,
            notes=notes,
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "grid_size": len(self.grid),
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }
