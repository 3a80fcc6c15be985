"""Greedy adaptive construction of Thiele continued fractions.

The first node is the sample minimizing |f|; every later node is the
remaining sample where the current convergent's error is largest.  The
inverse differences are updated incrementally for the whole pool, and the
recursion stops early once the maximum error over the unconsumed points
drops below tol * max |f| there.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .cfrac import ContinuedFraction, _backward, eval_backward


class Termination(enum.Enum):
    TOLERANCE_REACHED = "tolerance_reached"
    ALL_POINTS_USED = "all_points_used"
    TERM_CAP_REACHED = "term_cap_reached"
    NO_FINITE_CANDIDATE = "no_finite_candidate"


@dataclass(frozen=True)
class SampleSet:
    """Distinct abscissae with function values."""

    xs: tuple
    fs: tuple

    def __post_init__(self):
        xs = tuple(float(v) for v in np.atleast_1d(np.asarray(self.xs, dtype=float)))
        fs = tuple(float(v) for v in np.atleast_1d(np.asarray(self.fs, dtype=float)))
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "fs", fs)
        if len(xs) != len(fs):
            raise ValueError("xs and fs must have the same length")
        if len(xs) < 1:
            raise ValueError("need at least one sample")
        if not np.all(np.isfinite(xs)) or not np.all(np.isfinite(fs)):
            raise ValueError("samples must be finite")
        if len(set(xs)) != len(xs):
            raise ValueError("abscissae must be pairwise distinct")

    def __len__(self):
        return len(self.xs)

    @classmethod
    def from_function(cls, f, xs):
        xs = np.asarray(xs, dtype=float)
        return cls(tuple(xs), tuple(float(f(x)) for x in xs))


@dataclass(frozen=True)
class GreedyResult:
    fraction: ContinuedFraction
    consumed_nodes: tuple  # all consumed abscissae, in consumption order
    points_used: int
    termination: Termination
    final_max_residual: float


@dataclass(frozen=True)
class ResidualReport:
    residuals: tuple  # f_i - C(x_i) per sample
    norm2: float
    norm_inf: float


DEFAULT_TOL = 5e-15


def thiele_greedy(samples, tol=DEFAULT_TOL, max_terms=None):
    """Build a continued fraction from samples by greedy node selection.

    tol >= 0 is the relative early-termination tolerance; max_terms caps
    the number of consumed points (None = unlimited).  A point whose
    working inverse difference is non-finite is never consumed; the
    next-largest-error point with a finite value is taken instead.
    """
    if tol < 0:
        raise ValueError("tol must be >= 0")
    if max_terms is not None and max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    pool_x = np.asarray(samples.xs, dtype=float)
    pool_f = np.asarray(samples.fs, dtype=float)
    w = pool_f.copy()  # working inverse differences for the pool
    ca, cz = [], []  # consumed coefficients and nodes
    errs = None  # |C(pool) - f(pool)| for the current fraction

    while True:
        k = len(ca)
        if k == 0:
            i = int(np.argmin(np.abs(pool_f)))
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                w = (pool_x - cz[-1]) / (w - ca[-1])
            # errs was computed for this same fraction over this same pool
            # during the previous stopping check
            i = -1
            for j in np.argsort(-errs, kind="stable"):
                if np.isfinite(w[j]):
                    i = int(j)
                    break
            if i < 0:
                return _finish(ca, cz, Termination.NO_FINITE_CANDIDATE,
                               float(np.nanmax(errs)))
        ca.append(float(w[i]) if k > 0 else float(pool_f[i]))
        cz.append(float(pool_x[i]))
        keep = np.arange(len(pool_x)) != i
        pool_x, pool_f, w = pool_x[keep], pool_f[keep], w[keep]

        if len(pool_x) == 0:
            return _finish(ca, cz, Termination.ALL_POINTS_USED, 0.0)
        errs = np.abs(_backward(ca, cz[:-1], pool_x) - pool_f)
        max_err = float(np.max(errs))
        if max_err < tol * float(np.max(np.abs(pool_f))):
            return _finish(ca, cz, Termination.TOLERANCE_REACHED, max_err)
        if max_terms is not None and len(ca) >= max_terms:
            return _finish(ca, cz, Termination.TERM_CAP_REACHED, max_err)


def _finish(ca, cz, termination, final_max_residual):
    cf = ContinuedFraction(tuple(ca), tuple(cz[:-1]))
    return GreedyResult(
        fraction=cf,
        consumed_nodes=tuple(cz),
        points_used=len(ca),
        termination=termination,
        final_max_residual=final_max_residual,
    )


def residual_report(cf, samples):
    """Per-sample residuals f_i - C(x_i) with their 2- and max-norms."""
    xs = np.asarray(samples.xs, dtype=float)
    fs = np.asarray(samples.fs, dtype=float)
    res = fs - eval_backward(cf, xs)
    return ResidualReport(
        residuals=tuple(float(r) for r in res),
        norm2=float(np.linalg.norm(res)),
        norm_inf=float(np.max(np.abs(res))),
    )
