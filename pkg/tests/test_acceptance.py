"""End-to-end acceptance checks for the full package.

Each numbered test verifies one acceptance criterion and prints a single
PASS/FAIL line (bypassing capture) so the verdicts are visible in any run.
The heavy experiment runs are shared module-scoped fixtures.
"""

import time
from fractions import Fraction as F

import numpy as np
import pytest

from thielefrac import SampleSet, Termination, residual_report, thiele_greedy
from thielefrac.cfrac import _convergent_arrays, eval_backward
from thielefrac.exact import (
    cfrac_to_rational_exact,
    pdeg,
    residual_exact,
    thiele_exact,
)
from thielefrac.experiments import (
    root_exponential,
    run_newman_abs,
    run_newman_sqrt,
    run_sin_minimax,
    run_sqrt_minimax,
)
from thielefrac.nodes import squared_newman_points

from conftest import random_smooth_function


@pytest.fixture
def verdict(capsys):
    """checks: list of (description, bool). Prints the verdict, then asserts."""

    def _verdict(number, label, checks):
        failed = [d for d, ok in checks if not ok]
        status = "PASS" if not failed else "FAIL"
        with capsys.disabled():
            print(
                f"\nACCEPTANCE {number} [{label}]: {status}"
                + (f" ({'; '.join(failed)})" if failed else ""),
                flush=True,
            )
        assert not failed, f"criterion {number} failed: {failed}"

    return _verdict


@pytest.fixture(scope="module")
def abs_sweep():
    start = time.perf_counter()
    rows = run_newman_abs(n_min=6, n_max=50, grid_size=100_000)
    return {r.n: r for r in rows}, time.perf_counter() - start


@pytest.fixture(scope="module")
def sqrt_sweep():
    start = time.perf_counter()
    rows = run_newman_sqrt(n_min=5, n_max=400, grid_size=100_000)
    return {r.n: r for r in rows}, time.perf_counter() - start


@pytest.fixture(scope="module")
def sin_mm():
    return run_sin_minimax()


@pytest.fixture(scope="module")
def sqrt_mm():
    return run_sqrt_minimax()


def test_criterion_1_abs_newman_sweep(verdict, abs_sweep):
    rows, elapsed = abs_sweep
    checks = []
    scale = rows[20].max_interval_error / root_exponential(20)
    for n in (10, 20, 30, 40, 50):
        ratio = rows[n].max_interval_error / (scale * root_exponential(n))
        checks.append((
            f"n={n} error within 100x of scaled asymptote (ratio {ratio:.3g})",
            1e-2 <= ratio <= 1e2,
        ))
    drop = rows[10].max_interval_error / rows[50].max_interval_error
    checks.append((f"error drops >= 10x from n=10 to n=50 ({drop:.3g}x)",
                   drop >= 10.0))
    worst_norm = max(r.node_residual_2norm for r in rows.values())
    checks.append((f"node residual 2-norm < 1e-12 (worst {worst_norm:.3g})",
                   worst_norm < 1e-12))
    for n in (11, 21, 31):
        checks.append((f"n={n} has poles", rows[n].poles_in_interval))
    for n in (10, 20, 30, 40, 50):
        checks.append((f"n={n} pole-free", not rows[n].poles_in_interval))
    checks.append((f"sweep runtime < 60 s ({elapsed:.1f} s)", elapsed < 60.0))
    verdict(1, "abs on Newman points", checks)


def test_criterion_2_sqrt_newman_sweep(verdict, sqrt_sweep):
    rows, elapsed = sqrt_sweep
    checks = [
        (f"n=400 uses 100..135 points ({rows[400].points_used})",
         100 <= rows[400].points_used <= 135),
        (f"n=400 error < 1e-9 ({rows[400].max_interval_error:.3g})",
         rows[400].max_interval_error < 1e-9),
    ]
    # root-exponential decrease: error falls at least as fast as the
    # reference curve scaled at n=50 (within a factor 100 above it)
    scale = rows[50].max_interval_error / root_exponential(50)
    for n in (100, 200, 400):
        ratio = rows[n].max_interval_error / (scale * root_exponential(n))
        checks.append((
            f"n={n} error <= 100x scaled asymptote (ratio {ratio:.3g})",
            ratio <= 1e2,
        ))
    worst_norm = max(r.node_residual_2norm for r in rows.values())
    checks.append((f"node residual 2-norm < 1e-12 (worst {worst_norm:.3g})",
                   worst_norm < 1e-12))
    checks.append((f"sweep runtime < 5 min ({elapsed:.1f} s)", elapsed < 300.0))
    verdict(2, "sqrt on squared Newman points", checks)


def test_criterion_3_sin_minimax(verdict, sin_mm):
    checks = [
        ("converged", sin_mm.converged),
        (f"leveled error in [5e-9, 5e-8] ({sin_mm.leveled_error:.3g})",
         5e-9 <= sin_mm.leveled_error <= 5e-8),
        (f"51 equioscillations ({sin_mm.equioscillations})",
         sin_mm.equioscillations == 51),
        ("alternating", sin_mm.alternating),
    ]
    verdict(3, "sin minimax", checks)


def test_criterion_4_sqrt_minimax(verdict, sqrt_mm):
    checks = [
        ("converged", sqrt_mm.converged),
        (f"leveled error in [1e-12, 2e-11] ({sqrt_mm.leveled_error:.3g})",
         1e-12 <= sqrt_mm.leveled_error <= 2e-11),
        (f"82 equioscillations ({sqrt_mm.equioscillations})",
         sqrt_mm.equioscillations == 82),
        ("alternating", sqrt_mm.alternating),
    ]
    verdict(4, "sqrt minimax", checks)


def _coefficient_condition(xs, fs, order):
    """Worst relative-error amplification (in units of machine epsilon) of
    any selected coefficient, tracked through the exact inverse-difference
    recursion.  Large values mark instances whose coefficients are not
    determined to high relative accuracy by double-precision data."""
    xf = [F(x) for x in xs]
    v = {k: F(f) for k, f in enumerate(fs)}
    c = {k: 1.0 for k in range(len(xs))}
    worst = 1.0
    for i, j in enumerate(order[:-1]):
        phi, cj = v[j], c[j]
        newv, newc = {}, {}
        for k in order[i + 1:]:
            d = v[k] - phi
            if d == 0:
                return float("inf")
            newc[k] = (
                c[k] * abs(float(v[k])) + cj * abs(float(phi))
            ) / abs(float(d)) + 1.0
            newv[k] = (xf[k] - xf[j]) / d
        v, c = newv, newc
        worst = max(worst, c[order[i + 1]])
    return worst


def test_criterion_5_oracle_equivalence(verdict):
    rng = np.random.default_rng(515151)
    coeff_fail = identity_fail = kept = 0
    while kept < 200:
        m = int(rng.integers(3, 10))  # n = m - 1 <= 8
        xs = np.sort(rng.uniform(-1.0, 1.0, size=m))
        while len(np.unique(xs)) != m:
            xs = np.sort(rng.uniform(-1.0, 1.0, size=m))
        f = random_smooth_function(rng)
        fs = f(xs)
        result = thiele_greedy(SampleSet(tuple(xs), tuple(fs)), tol=0.0)

        order = [list(xs).index(z) for z in result.consumed_nodes]
        if _coefficient_condition(xs, fs, order) > 1e4:
            continue  # degenerate: coefficients ill-determined in doubles
        kept += 1
        exact_xs = [F(x) for x in xs]
        exact_fs = [F(v) for v in fs]
        coeffs, nodes, bad = thiele_exact(exact_xs, exact_fs, order)
        if bad is not None:
            identity_fail += 1
            continue
        for got, want in zip(result.fraction.coefficients, coeffs):
            w = float(want)
            if abs(got - w) > 1e-10 * max(1.0, abs(w)):
                coeff_fail += 1
                break
        # residual-ratio identity, exact arithmetic: for every step i the
        # next coefficient is -(z_{i+1} - z_i) R_{i-1}(z_{i+1}) / R_i(z_{i+1})
        zs = [exact_xs[k] for k in order]
        for i in range(len(coeffs) - 1):
            zk, fk = exact_xs[order[i + 1]], exact_fs[order[i + 1]]
            r_prev = residual_exact(coeffs, nodes[:-1], i - 1, [zk], [fk])[0]
            r_cur = residual_exact(coeffs, nodes[:-1], i, [zk], [fk])[0]
            if r_cur == 0:
                identity_fail += 1
                break
            if coeffs[i + 1] != -(zk - zs[i]) * r_prev / r_cur:
                identity_fail += 1
                break
    checks = [
        (f"coefficients match oracle to 1e-10 ({coeff_fail} failures)",
         coeff_fail == 0),
        (f"residual-ratio identity exact ({identity_fail} failures)",
         identity_fail == 0),
    ]
    verdict(5, "float/exact oracle equivalence", checks)


def test_criterion_6_degree_bounds(verdict):
    rng = np.random.default_rng(626262)
    failures = 0
    for _ in range(100):
        n = int(rng.integers(1, 13))
        coeffs = [
            F(int(rng.integers(1, 40)), int(rng.integers(1, 12)))
            * int(rng.choice([-1, 1]))
            for _ in range(n + 1)
        ]
        nodes = [F(int(k), 4) for k in rng.permutation(64)[:n]]
        a, b = cfrac_to_rational_exact(coeffs, nodes)
        if pdeg(a) > (n + 1) // 2 or pdeg(b) > n // 2:
            failures += 1
    verdict(6, "convergent degree bounds", [
        (f"deg A <= ceil(n/2), deg B <= floor(n/2) ({failures} failures)",
         failures == 0),
    ])


def _rational_target(p, q):
    """Type (p, q) rational with all numerator and denominator roots outside
    [0, 1] and no common factors."""
    num_roots = [2.0 + i for i in range(p)]
    den_roots = [-(2.0 + i) for i in range(q)]

    def f(x):
        x = np.asarray(x, dtype=float)
        num = np.ones_like(x)
        for r in num_roots:
            num = num * (x - r)
        den = np.ones_like(x)
        for r in den_roots:
            den = den * (x - r)
        return num / den

    return f


def test_criterion_7_early_termination_point_budget(verdict):
    grid = np.linspace(0.0, 1.0, 25)
    checks = []
    for p in range(4):
        for q in range(4):
            f = _rational_target(p, q)
            result = thiele_greedy(SampleSet(tuple(grid), tuple(f(grid))))
            ok = (
                result.termination is Termination.TOLERANCE_REACHED
                and result.points_used <= p + q + 2
            )
            checks.append((
                f"type ({p},{q}): {result.termination.value}, "
                f"{result.points_used} points (budget {p + q + 2})",
                ok,
            ))
    verdict(7, "early-termination point budget", checks)


def test_criterion_8_minimax_beats_interpolation(verdict, sqrt_mm):
    pts = squared_newman_points(80)  # 81 points
    result = thiele_greedy(
        SampleSet(tuple(pts), tuple(np.sqrt(pts))), tol=0.0
    )
    grid = np.concatenate(([0.0], np.logspace(-16.0, 0.0, 100_000)))
    interp_err = float(np.max(np.abs(
        eval_backward(result.fraction, grid) - np.sqrt(grid)
    )))
    factor = interp_err / sqrt_mm.leveled_error
    verdict(8, "minimax vs interpolation", [
        (f"leveled error beats interpolation by >= 1.5x ({factor:.3g}x)",
         factor >= 1.5),
    ])
