"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every tolerance is pinned here, not configurable.
"""

import json
import math

import numpy as np
from click.testing import CliRunner

from minkcurves.cli import main as cli_main
from minkcurves.curve_families import (
    anti_salkowski_invariants,
    anti_salkowski_point,
    axis_decomposition,
    salkowski_arclength,
    salkowski_frame,
    salkowski_invariants,
)
from minkcurves.frenet_numeric import AntiSalkowskiCurve, SalkowskiCurve, frenet_at
from minkcurves.frenet_numeric import _frame_data
from minkcurves.lorentz_core import (
    Vec3M,
    frame_cross_residual,
    frame_gram_residual,
    minkowski_inner,
)
from minkcurves.transforms import TransformedCurve
from minkcurves.verify import SlantConfig, helix_ratio, slant_invariant, uniform_grid

M_VALUES = (1.5, 2.0, 5.0)
GRID = uniform_grid(0.3, 2.0, 32)


def _report(num, ok, detail):
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_curvature_constancy():
    worst = 0.0
    for m in M_VALUES:
        curve = SalkowskiCurve(m)
        for t in GRID:
            s = frenet_at(curve, t, h=1e-4, method="fd")
            worst = max(worst, abs(s.kappa - 1.0))
    _report(1, worst < 1e-6,
            f"FD curvature within 1e-6 of 1 (max dev {worst:.3e})")


def test_criterion_2_torsion_law():
    worst_fd = 0.0
    worst_id = 0.0
    for m in M_VALUES:
        curve = SalkowskiCurve(m)
        p = curve.params
        for t in GRID:
            s = frenet_at(curve, t, h=1e-4, method="fd")
            _, tau = salkowski_invariants(p, t)
            worst_fd = max(worst_fd, abs(s.tau - tau))
            sl = salkowski_arclength(p, t)
            worst_id = max(
                worst_id,
                abs(tau * math.sqrt(sl * sl - 1.0 / (m * m)) - sl),
            )
    ok = worst_fd < 1e-6 and worst_id < 1e-8
    _report(2, ok,
            f"FD torsion within 1e-6 of coth(nt) (max {worst_fd:.3e}); "
            f"intrinsic identity within 1e-8 (max {worst_id:.3e})")


def test_criterion_3_frame_validity():
    worst_gram = 0.0
    worst_cross = 0.0
    for m in M_VALUES:
        p = SalkowskiCurve(m).params
        for t in GRID:
            f = salkowski_frame(p, t)
            worst_gram = max(worst_gram, frame_gram_residual(f))
            worst_cross = max(worst_cross, frame_cross_residual(f))
    ok = worst_gram < 1e-10 and worst_cross < 1e-10
    _report(3, ok,
            f"closed-form frames orthonormal (gram {worst_gram:.3e}) and "
            f"B = T x N ({worst_cross:.3e}), both within 1e-10")


def test_criterion_4_constant_angle_axis():
    e3 = Vec3M(0.0, 0.0, 1.0)
    worst_angle = 0.0
    worst_const = 0.0
    worst_unit = 0.0
    for m in M_VALUES:
        p = SalkowskiCurve(m).params
        axes = []
        for t in GRID:
            worst_angle = max(
                worst_angle,
                abs(minkowski_inner(salkowski_frame(p, t).N, e3) - p.n),
            )
            d = axis_decomposition(p, t, branch=1).d
            axes.append(d.as_array())
            worst_unit = max(worst_unit, abs(minkowski_inner(d, d) - 1.0))
        arr = np.array(axes)
        worst_const = max(worst_const, float(np.max(arr.max(0) - arr.min(0))))
    ok = worst_angle < 1e-10 and worst_const < 1e-7 and worst_unit < 1e-9
    _report(4, ok,
            f"<N,e3> = n within 1e-10 ({worst_angle:.3e}); axis constant "
            f"within 1e-7 ({worst_const:.3e}); unit within 1e-9 ({worst_unit:.3e})")


def test_criterion_5_anti_family_invariants():
    worst_tau = 0.0
    worst_kappa = 0.0
    for m in M_VALUES:
        curve = AntiSalkowskiCurve(m)
        p = curve.params
        for t in GRID:
            s = frenet_at(curve, t, h=1e-4, method="fd")
            kw, tw = anti_salkowski_invariants(p, t)
            worst_tau = max(worst_tau, abs(s.tau - tw))
            worst_kappa = max(worst_kappa, abs(s.kappa - kw))
    ok = worst_tau < 1e-4 and worst_kappa < 1e-4
    _report(5, ok,
            f"constant-torsion family: FD tau within 1e-4 of 1 ({worst_tau:.3e}), "
            f"FD kappa within 1e-4 of tanh(nt) ({worst_kappa:.3e})")


def test_criterion_6_torsion_normalizing_transform():
    curve = SalkowskiCurve(2.0)
    p = curve.params
    image = TransformedCurve(curve, "torsion")
    grid = uniform_grid(0.2, 2.0, 20)
    img0 = image.position(grid[0]).as_array()
    ref0 = anti_salkowski_point(p, grid[0]).as_array()
    worst_pos = 0.0
    worst_n = 0.0
    for t in grid:
        img = image.position(t).as_array() - img0
        ref = anti_salkowski_point(p, t).as_array() - ref0
        worst_pos = max(worst_pos, float(np.max(np.abs(img - ref))))
        gap = _frame_data(image, t, method="fd").frame.N - salkowski_frame(p, t).N
        worst_n = max(worst_n, abs(gap.x1), abs(gap.x2), abs(gap.x3))
    ok = worst_pos < 1e-6 and worst_n < 1e-4
    _report(6, ok,
            f"transform image matches the constant-torsion family up to "
            f"translation within 1e-6 ({worst_pos:.3e}); normal transport "
            f"within 1e-4 ({worst_n:.3e})")


def test_criterion_7_curvature_normalizing_transform():
    curve = AntiSalkowskiCurve(2.0)
    p = curve.params
    image = TransformedCurve(curve, "curvature")
    worst_kappa = 0.0
    worst_tau = 0.0
    for t in uniform_grid(0.3, 2.0, 20):
        d = _frame_data(image, t, method="fd")
        _, tau = salkowski_invariants(p, t)
        worst_kappa = max(worst_kappa, abs(d.kappa - 1.0))
        worst_tau = max(worst_tau, abs(d.tau - tau))
    ok = worst_kappa < 1e-4 and worst_tau < 1e-3
    _report(7, ok,
            f"image of the constant-torsion curve: kappa within 1e-4 of 1 "
            f"({worst_kappa:.3e}), tau within 1e-3 of coth(nt) ({worst_tau:.3e})")


def test_criterion_8_slant_invariant():
    worst_sigma = 0.0
    min_spread = math.inf
    for m in M_VALUES:
        curve = SalkowskiCurve(m)
        rep = slant_invariant(curve, GRID, SlantConfig(-1, 1), tol=1e-5)
        sigma_mean = float(rep.notes.split()[-1])
        worst_sigma = max(worst_sigma, abs(sigma_mean + m), rep.max_residual)
        min_spread = min(min_spread, helix_ratio(curve, GRID).max_residual)
    ok = worst_sigma < 1e-5 and min_spread > 0.05
    _report(8, ok,
            f"slant function equals -m within 1e-5 ({worst_sigma:.3e}); "
            f"helix ratio varies by more than 0.05 ({min_spread:.3e})")


def test_criterion_9_fd_convergence_order():
    curve = SalkowskiCurve(2.0)
    p = curve.params

    def errors(h):
        ek = et = 0.0
        for t in (0.5, 1.0, 1.5):
            s = frenet_at(curve, t, h=h, method="fd")
            _, tau = salkowski_invariants(p, t)
            ek = max(ek, abs(s.kappa - 1.0))
            et = max(et, abs(s.tau - tau))
        return ek, et

    ek1, et1 = errors(0.02)
    ek2, et2 = errors(0.01)
    rk, rt = ek1 / ek2, et1 / et2
    ok = 3.0 <= rk <= 5.0 and 3.0 <= rt <= 5.0
    _report(9, ok,
            f"halving h shrinks errors by kappa x{rk:.2f}, tau x{rt:.2f} "
            f"(second-order stencils, expected ratio in [3, 5])")


def test_criterion_10_cli_determinism():
    runner = CliRunner()
    args = ["verify", "--suite", "all", "--m", "2"]
    first = runner.invoke(cli_main, args)
    second = runner.invoke(cli_main, args)
    identical = first.output == second.output
    ok = first.exit_code == 0 and second.exit_code == 0 and identical
    reports = json.loads(first.output) if ok else []
    _report(10, ok,
            f"two verify runs byte-identical ({identical}), exit codes "
            f"({first.exit_code}, {second.exit_code}), {len(reports)} reports all passing")
