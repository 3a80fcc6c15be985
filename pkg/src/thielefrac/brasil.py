"""Best rational approximation by interval-rescaling over interpolation nodes.

Each sweep interpolates f at the current nodes with the greedy Thiele
construction (zero tolerance, so every node is consumed), locates one
residual extremum per subinterval of the endpoint-augmented node set, and
then rescales the subinterval widths so that subintervals with
above-average error shrink and the others grow.  At the fixed point the
local errors are leveled and the residual equioscillates.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .cfrac import eval_backward
from .greedy import SampleSet, thiele_greedy


class PoleError(RuntimeError):
    """A residual extremum came out non-finite (the interpolant has a pole)."""


@dataclass(frozen=True)
class ExtremaReport:
    locations: tuple
    signed_residuals: tuple
    leveled_error: float  # max |residual|
    level_ratio: float  # max|residual| / min|residual| - 1

    @property
    def count(self):
        return len(self.locations)


@dataclass(frozen=True)
class BrasilConfig:
    smax: float = 0.1  # step-size cap
    t: float = 0.1  # proportionality factor for the step size
    tol: float = 1e-3  # convergence threshold on level_ratio
    max_iter: int = 1000
    extremum_search_tol: float = None  # abscissa tol; default 1e-14*(b-a)

    def __post_init__(self):
        if not 0 < self.smax < 1:
            raise ValueError("smax must be in (0, 1)")
        if self.t <= 0 or self.tol <= 0 or self.max_iter < 1:
            raise ValueError("t, tol must be positive and max_iter >= 1")


@dataclass(frozen=True)
class BrasilResult:
    fraction: object
    nodes: tuple  # final interpolation nodes, sorted ascending
    final_report: ExtremaReport
    iterations: int
    converged: bool
    degenerate: bool  # perfectly leveled (zero spread) before level_ratio < tol
    trace: tuple = field(repr=False)  # (level_ratio, leveled_error) per iteration


def find_extrema(nodes, a, b, cf, f, search_tol=None):
    """One residual extremum of |f - C| per closed subinterval of
    sorted(unique({a} | nodes | {b}))."""
    if search_tol is None:
        search_tol = 1e-14 * (b - a)
    pts = np.unique(np.concatenate(([a], np.asarray(nodes, dtype=float), [b])))
    if len(pts) < 2:
        raise ValueError("need at least 2 distinct points after adding endpoints")
    locs, resids = [], []
    for lo, hi in zip(pts[:-1], pts[1:]):
        opt = minimize_scalar(
            lambda x: -abs(f(x) - eval_backward(cf, x)),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": search_tol},
        )
        s = float(opt.x)
        # the bounded search never lands exactly on the bracket ends;
        # check them so endpoint extrema of the first/last subinterval win
        best = (s, float(f(s) - eval_backward(cf, s)))
        for cand in (lo, hi):
            r = float(f(cand) - eval_backward(cf, cand))
            if abs(r) > abs(best[1]):
                best = (float(cand), r)
        locs.append(best[0])
        resids.append(best[1])
    ra = np.abs(resids)
    leveled = float(np.max(ra))
    ratio = 0.0 if leveled == 0.0 else float(np.max(ra) / np.min(ra) - 1.0)
    return ExtremaReport(tuple(locs), tuple(resids), leveled, ratio)


def brasil(initial_nodes, f, a, b, cfg=None):
    """Drive the interpolation nodes toward the best-approximation alternant.

    initial_nodes are n+1 distinct points in (a, b); f must be continuous
    on [a, b].  Returns the final fraction with its extrema report and the
    per-iteration (level_ratio, leveled_error) trace.
    """
    cfg = cfg or BrasilConfig()
    nodes = np.sort(np.asarray(initial_nodes, dtype=float))
    if len(np.unique(nodes)) != len(nodes):
        raise ValueError("initial nodes must be distinct")
    if nodes[0] <= a or nodes[-1] >= b:
        raise ValueError("initial nodes must lie strictly inside (a, b)")
    trace = []
    report = None
    cf = None
    converged = degenerate = False
    iterations = 0
    for iterations in range(1, cfg.max_iter + 1):
        result = thiele_greedy(SampleSet.from_function(f, nodes), tol=0.0)
        cf = result.fraction
        report = find_extrema(nodes, a, b, cf, f, cfg.extremum_search_tol)
        if not all(math.isfinite(r) for r in report.signed_residuals):
            raise PoleError(
                f"non-finite residual extremum at iteration {iterations}; "
                f"locations {report.locations}"
            )
        trace.append((report.level_ratio, report.leveled_error))
        if report.level_ratio < cfg.tol:
            converged = True
            break
        r = np.abs(report.signed_residuals)
        h = float(np.mean(r))
        g = float(np.max(np.abs(r - h)))
        if g == 0.0:
            # all local errors already equal: the method's fixed point
            converged = degenerate = True
            break
        gk = (r - h) / g
        s = min(cfg.smax, cfg.t * g / h)
        ck = (1.0 - s) ** gk
        aug = np.unique(np.concatenate(([a], nodes, [b])))
        lk = ck * np.diff(aug)
        cums = np.cumsum(lk)
        new_nodes = a + (b - a) * cums[:-1] / cums[-1]
        if not (np.all(np.diff(new_nodes) > 0)
                and new_nodes[0] > a and new_nodes[-1] < b):
            raise RuntimeError("rescaled nodes left the open interval")
        assert 0.0 < s <= cfg.smax
        nodes = new_nodes
    return BrasilResult(
        fraction=cf,
        nodes=tuple(nodes),
        final_report=report,
        iterations=iterations,
        converged=converged,
        degenerate=degenerate,
        trace=tuple(trace),
    )


def equioscillation_check(report, rel_tol):
    """(count, alternating, leveled) summary of an extrema report."""
    signs = np.sign(report.signed_residuals)
    alternating = bool(
        len(signs) >= 2 and np.all(signs[:-1] * signs[1:] < 0)
    )
    leveled = bool(report.level_ratio < rel_tol)
    return report.count, alternating, leveled
