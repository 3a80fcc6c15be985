"""Thiele interpolating continued fractions: representation and evaluation.

A fraction with coefficients (a_0, ..., a_n) and nodes (z_0, ..., z_{n-1})
represents

    a_0 + (x - z_0) / (a_1 + (x - z_1) / (a_2 + ...))

Evaluation follows IEEE semantics throughout: hitting a pole produces
inf/nan instead of raising, since evaluating at a pole is a legal query.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

# Renormalization thresholds for the three-term recurrence.  Powers of two
# are exact in binary floating point, so rescaling never perturbs the ratio.
_BIG = 2.0 ** 500
_SMALL = 2.0 ** -500


@dataclass(frozen=True)
class ContinuedFraction:
    """Immutable Thiele continued fraction (inverse differences + nodes)."""

    coefficients: tuple
    nodes: tuple

    def __post_init__(self):
        a = tuple(float(v) for v in self.coefficients)
        z = tuple(float(v) for v in self.nodes)
        object.__setattr__(self, "coefficients", a)
        object.__setattr__(self, "nodes", z)
        if len(a) < 1:
            raise ValueError("need at least one coefficient")
        if len(a) != len(z) + 1:
            raise ValueError(
                f"coefficient count {len(a)} must be node count {len(z)} + 1"
            )
        if not all(math.isfinite(v) for v in a):
            raise ValueError("all coefficients must be finite")
        if not all(math.isfinite(v) for v in z):
            raise ValueError("all nodes must be finite")
        if len(set(z)) != len(z):
            raise ValueError("nodes must be pairwise distinct")

    @property
    def degree(self):
        """Index n of the convergent this fraction represents."""
        return len(self.coefficients) - 1

    def to_dict(self):
        return {"a": list(self.coefficients), "z": list(self.nodes)}

    @classmethod
    def from_dict(cls, doc):
        return cls(tuple(doc["a"]), tuple(doc["z"]))

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ConvergentValue:
    """Numerator/denominator pair of a convergent, up to a 2**scale factor."""

    numerator: float
    denominator: float
    scale_exponent: int

    @property
    def ratio(self):
        with np.errstate(divide="ignore", invalid="ignore"):
            return float(np.float64(self.numerator) / np.float64(self.denominator))


def _backward(a, z, x):
    """Backward evaluation of a_0 + (x-z_0)/(a_1 + ...) at scalar or array x."""
    n = len(a) - 1
    if np.ndim(x) == 0:
        xv = float(x)
        res = 0.0
        for i in range(n, 0, -1):
            num = xv - z[i - 1]
            den = a[i] + res
            if den == 0.0:
                res = math.nan if num == 0.0 else math.copysign(math.inf, num)
            elif math.isnan(den):
                res = math.nan
            else:
                res = num / den
        return a[0] + res
    xv = np.asarray(x, dtype=float)
    res = np.zeros_like(xv)
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(n, 0, -1):
            res = (xv - z[i - 1]) / (a[i] + res)
    return a[0] + res


def eval_backward(cf, x):
    """Evaluate the full fraction at x (scalar or array), innermost-first.

    Non-finite output signals a pole at x and is not an error.
    """
    return _backward(cf.coefficients, cf.nodes, x)


def eval_tail(cf, i, x):
    """Evaluate the suffix fraction starting at coefficient a_i.

    The last tail (i == n) is the constant a_n; i == 0 recovers the whole
    fraction.
    """
    n = cf.degree
    if not 0 <= i <= n:
        raise IndexError(f"tail index {i} out of range [0, {n}]")
    return _backward(cf.coefficients[i:], cf.nodes[i:], x)


def _convergent_arrays(a, z, x, k):
    """Run the three-term recurrence to index k at every point of array x.

    Returns (A_k, B_k, scale) where the true numerator/denominator are
    A_k * 2**scale and B_k * 2**scale.  The running 4-tuple is renormalized
    by a power of two whenever any magnitude exceeds 2**500 or all fall
    below 2**-500.
    """
    x = np.asarray(x, dtype=float)
    am2 = np.zeros_like(x)
    bm2 = np.ones_like(x)
    am1 = np.ones_like(x)
    bm1 = np.zeros_like(x)
    scale = np.zeros(x.shape, dtype=np.int64)
    for j in range(k + 1):
        fac = (x - z[j - 1]) if j >= 1 else np.ones_like(x)
        aj = a[j] * am1 + fac * am2
        bj = a[j] * bm1 + fac * bm2
        m = np.maximum(
            np.maximum(np.abs(aj), np.abs(bj)),
            np.maximum(np.abs(am1), np.abs(bm1)),
        )
        mask = (m > _BIG) | ((m > 0.0) & (m < _SMALL))
        if np.any(mask):
            _, e = np.frexp(m[mask])
            aj[mask] = np.ldexp(aj[mask], -e)
            bj[mask] = np.ldexp(bj[mask], -e)
            am1[mask] = np.ldexp(am1[mask], -e)
            bm1[mask] = np.ldexp(bm1[mask], -e)
            scale[mask] += e
        am2, bm2, am1, bm1 = am1, bm1, aj, bj
    return am1, bm1, scale


def eval_convergent_pair(cf, k, x):
    """Normalized (A_k(x), B_k(x)) convergent pair from the forward recurrence."""
    if not 0 <= k < len(cf.coefficients):
        raise IndexError(f"convergent index {k} out of range")
    av, bv, scale = _convergent_arrays(
        cf.coefficients, cf.nodes, np.array([float(x)]), k
    )
    return ConvergentValue(float(av[0]), float(bv[0]), int(scale[0]))


def detect_unattainable(cf, samples, tol):
    """Indices i >= 1 of nodes whose data value the fraction fails to attain.

    The primary test is direct evaluation: |C(z_i) - f(z_i)| compared
    against tol * max(1, |f(z_i)|).  A non-finite evaluation at a node also
    counts as a failure to attain it.
    """
    return [i for i, _ in unattainable_diagnostics(cf, samples, tol)]


def unattainable_diagnostics(cf, samples, tol):
    """Like detect_unattainable but returns (index, info) pairs.

    info carries the direct-evaluation error and the value of the tail
    T_{i+1,n} at z_i, whose vanishing characterizes unattainable nodes.
    """
    lookup = {float(x): float(f) for x, f in zip(samples.xs, samples.fs)}
    out = []
    for i, zi in enumerate(cf.nodes):
        if i == 0:
            continue
        if zi not in lookup:
            raise ValueError(f"node {zi!r} missing from samples")
        fi = lookup[zi]
        ci = eval_backward(cf, zi)
        err = abs(ci - fi)
        bad = (not math.isfinite(ci)) or err > tol * max(1.0, abs(fi))
        if bad:
            tail = eval_tail(cf, i + 1, zi) if i + 1 <= cf.degree else math.nan
            out.append((i, {"direct_error": err, "tail_value": tail}))
    return out


def scan_poles(cf, a, b, grid_size):
    """Bracket poles of the final convergent on [a, b].

    Evaluates the denominator B_n on a uniform grid; a sign change of B
    between adjacent grid points with a nonvanishing numerator at both
    endpoints brackets a pole.  Returns a list of (left, right) intervals.
    """
    if not a < b:
        raise ValueError("need a < b")
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    grid = np.linspace(a, b, grid_size)
    av, bv, _ = _convergent_arrays(cf.coefficients, cf.nodes, grid, cf.degree)
    return pole_brackets(grid, av, bv)


def pole_brackets(grid, numer, denom):
    """Sign-change brackets of denom along grid where numer does not vanish.

    A grid point landing exactly on a denominator root is bracketed by its
    neighboring grid points."""
    sign = np.sign(denom)
    flip = sign[:-1] * sign[1:] < 0
    ok = (numer[:-1] != 0.0) & (numer[1:] != 0.0)
    out = [
        (float(grid[i]), float(grid[i + 1]))
        for i in np.nonzero(flip & ok)[0]
    ]
    for i in np.nonzero((sign == 0.0) & (numer != 0.0))[0]:
        out.append((
            float(grid[max(i - 1, 0)]),
            float(grid[min(i + 1, len(grid) - 1)]),
        ))
    out.sort()
    return out
