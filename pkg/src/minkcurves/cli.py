"""Command-line surface: sample curves, compute frames, run transforms and
verification suites, emit CSV/JSON.

Exit codes are a total function of outcome class:
    0  success / all invariants passed
    1  at least one invariant failed (reports still emitted)
    2  usage error (invalid parameters)
    3  causal failure (velocity not time-like)
    4  degenerate geometry (vanishing curvature / irregular parameter)
    5  numeric failure (quadrature budget exhausted)

Output is deterministic: uniform grids, no randomness, floats printed with 17
significant digits (round-trip exact at double precision).  The environment
variable MINKCURVES_TOL relaxes every verification tolerance by a
multiplicative factor.
"""

from __future__ import annotations

import json
import os
import sys

import click
import numpy as np

from .errors import (
    DegenerateAt0,
    NotTimeLike,
    QuadratureFailure,
    VanishingCurvature,
)
from .frenet_numeric import (
    AntiSalkowskiCurve,
    CurveSpec,
    DEFAULT_DOMAIN,
    SalkowskiCurve,
    TabulatedCurve,
    frenet_at,
)
from .transforms import TransformedCurve
from .verify import SUITES, run_suite

EXIT_INVARIANT = 1
EXIT_USAGE = 2
EXIT_CAUSAL = 3
EXIT_DEGENERATE = 4
EXIT_NUMERIC = 5

_FAMILIES = ("salkowski", "anti-salkowski")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _emit(text: str, output: str | None):
    if output is None or output == "-":
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _table_text(columns, rows, fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    payload = {"columns": list(columns), "rows": [[float(v) for v in row] for row in rows]}
    return json.dumps(payload, indent=2) + "\n"


def _usage_fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


def _family_curve(family: str, m: float, t_min: float, t_max: float) -> CurveSpec:
    if m <= 1.0:
        _usage_fail("m must exceed 1")
    if t_min <= 0.0:
        _usage_fail("t-min must be positive (the family is irregular at t=0)")
    if t_max < t_min:
        _usage_fail("t-max must not be below t-min")
    domain = (min(t_min, DEFAULT_DOMAIN[0]), max(t_max, DEFAULT_DOMAIN[1]))
    cls = SalkowskiCurve if family == "salkowski" else AntiSalkowskiCurve
    return cls(m, domain=domain)


def _grid(t_min: float, t_max: float, count: int):
    if count < 2:
        _usage_fail("count must be at least 2")
    if t_max == t_min:
        return []
    return [float(x) for x in np.linspace(t_min, t_max, count)]


def _load_tabulated(path: str) -> TabulatedCurve:
    try:
        source = sys.stdin if path == "-" else path
        data = np.loadtxt(source, delimiter=",", skiprows=1, dtype=float)
    except (OSError, ValueError) as exc:
        _usage_fail(f"cannot read curve samples from {path}: {exc}")
    if data.ndim != 2 or data.shape[1] != 4:
        _usage_fail(f"expected rows t,x1,x2,x3 in {path}")
    try:
        return TabulatedCurve(data[:, 0], data[:, 1:])
    except ValueError as exc:
        _usage_fail(str(exc))


@click.group()
def main():
    """Geometry of time-like curves in Minkowski 3-space."""


@main.command("sample")
@click.option("--family", type=click.Choice(_FAMILIES), required=True)
@click.option("--m", "m", type=float, required=True, help="family parameter, m > 1")
@click.option("--t-min", type=float, default=0.1, show_default=True)
@click.option("--t-max", type=float, default=2.0, show_default=True)
@click.option("--count", type=int, default=64, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--output", "-o", default="-", show_default=True,
              help="output path, or - for stdout")
def cmd_sample(family, m, t_min, t_max, count, fmt, output):
    """Evaluate a built-in family on a uniform grid and emit t,x1,x2,x3 rows."""
    curve = _family_curve(family, m, t_min, t_max)
    rows = []
    for t in _grid(t_min, t_max, count):
        p = curve.position(t)
        rows.append((t, p.x1, p.x2, p.x3))
    _emit(_table_text(("t", "x1", "x2", "x3"), rows, fmt), output)


_FRENET_COLUMNS = (
    "t", "s", "speed", "kappa", "tau",
    "T1", "T2", "T3", "N1", "N2", "N3", "B1", "B2", "B3",
)


@main.command("frenet")
@click.option("--family", type=click.Choice(_FAMILIES), default=None)
@click.option("--m", "m", type=float, default=None)
@click.option("--input", "input_path", type=click.Path(allow_dash=True), default=None,
              help="CSV of t,x1,x2,x3 samples to analyze instead of a family"
                   " (- reads stdin)")
@click.option("--t-min", type=float, default=0.3, show_default=True)
@click.option("--t-max", type=float, default=2.0, show_default=True)
@click.option("--count", type=int, default=32, show_default=True)
@click.option("--method", type=click.Choice(["analytic", "fd"]), default="analytic",
              show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--output", "-o", default="-", show_default=True)
def cmd_frenet(family, m, input_path, t_min, t_max, count, method, fmt, output):
    """Frenet data (arc length, speed, kappa, tau, frame) along a curve."""
    if (family is None) == (input_path is None):
        _usage_fail("provide exactly one of --family/--m or --input")
    if family is not None:
        if m is None:
            _usage_fail("--m is required with --family")
        curve = _family_curve(family, m, t_min, t_max)
        grid = _grid(t_min, t_max, count)
    else:
        curve = _load_tabulated(input_path)
        lo, hi = curve.domain
        # Stay inside the spline stencil margin.
        pad = 0.02 * (hi - lo)
        grid = _grid(lo + pad, hi - pad, count)
    rows = []
    try:
        for t in grid:
            smp = frenet_at(curve, t, method=method)
            f = smp.frame
            rows.append((
                t, smp.arclength, smp.speed, smp.kappa, smp.tau,
                f.T.x1, f.T.x2, f.T.x3,
                f.N.x1, f.N.x2, f.N.x3,
                f.B.x1, f.B.x2, f.B.x3,
            ))
    except NotTimeLike as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAUSAL)
    except (VanishingCurvature, DegenerateAt0) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DEGENERATE)
    except QuadratureFailure as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    _emit(_table_text(_FRENET_COLUMNS, rows, fmt), output)


@main.command("transform")
@click.option("--which", type=click.Choice(["lemma2", "lemma3"]), required=True,
              help="lemma2 = torsion-normalizing, lemma3 = curvature-normalizing")
@click.option("--family", type=click.Choice(_FAMILIES), required=True)
@click.option("--m", "m", type=float, required=True)
@click.option("--t-min", type=float, default=0.2, show_default=True)
@click.option("--t-max", type=float, default=2.0, show_default=True)
@click.option("--count", type=int, default=32, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--output", "-o", default="-", show_default=True)
def cmd_transform(which, family, m, t_min, t_max, count, fmt, output):
    """Sample the transform image beta(t), integrated from t-min."""
    curve = _family_curve(family, m, t_min, t_max)
    kind = "torsion" if which == "lemma2" else "curvature"
    image = TransformedCurve(curve, kind, start=t_min)
    rows = []
    try:
        for t in _grid(t_min, t_max, count):
            p = image.position(t)
            rows.append((t, p.x1, p.x2, p.x3))
    except QuadratureFailure as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    except NotTimeLike as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAUSAL)
    except (VanishingCurvature, DegenerateAt0) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DEGENERATE)
    _emit(_table_text(("t", "x1", "x2", "x3"), rows, fmt), output)


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--m", "ms", type=float, multiple=True,
              help="family parameter; repeatable (default 2)")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@click.option("--output", "-o", default="-", show_default=True)
def cmd_verify(suite, ms, fmt, output):
    """Run invariant suites; exit 0 iff every report passed."""
    if not ms:
        ms = (2.0,)
    for m in ms:
        if m <= 1.0:
            _usage_fail("m must exceed 1")
    tol_scale = 1.0
    env = os.environ.get("MINKCURVES_TOL")
    if env is not None:
        try:
            tol_scale = float(env)
        except ValueError:
            _usage_fail(f"MINKCURVES_TOL must be a float, got {env!r}")
        if tol_scale <= 0.0:
            _usage_fail("MINKCURVES_TOL must be positive")
    try:
        reports = run_suite(suite, ms, tol_scale)
    except QuadratureFailure as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NUMERIC)
    except NotTimeLike as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAUSAL)
    except (VanishingCurvature, DegenerateAt0) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DEGENERATE)
    if fmt == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    else:
        lines = ["name,grid_size,max_residual,tolerance,passed"]
        lines += [
            f"{r.name},{r.to_dict()['grid_size']},{_fmt(r.max_residual)},"
            f"{_fmt(r.tolerance)},{str(r.passed).lower()}"
            for r in reports
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, output)
    if not all(r.passed for r in reports):
        failed = [r.name for r in reports if not r.passed]
        click.echo(f"{len(failed)} invariant(s) failed: {', '.join(failed)}", err=True)
        sys.exit(EXIT_INVARIANT)


if __name__ == "__main__":
    main()
