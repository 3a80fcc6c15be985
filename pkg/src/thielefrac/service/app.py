"""HTTP service wrapping the continued-fraction library.

The CLI is a thin client of these endpoints; everything here delegates to
the core modules and only handles wire conversion.
"""

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import __version__
from ..cfrac import ContinuedFraction, eval_backward
from ..experiments import (
    EXPERIMENT_NAMES,
    run_newman_abs,
    run_newman_sqrt,
    run_sin_minimax,
    run_sqrt_minimax,
)
from ..greedy import SampleSet, residual_report, thiele_greedy
from ..io import format_value
from ..nodes import chebyshev1, newman_points, power_grid, squared_newman_points
from .schemas import (
    EvaluateRequest,
    EvaluateResponse,
    ExperimentRequest,
    ExperimentResponse,
    ExperimentRowModel,
    FractionModel,
    InterpolateRequest,
    InterpolateResponse,
    MinimaxModel,
    NodesResponse,
    _clean,
)

app = FastAPI(
    title="thielefrac",
    version=__version__,
    description="Greedy Thiele continued-fraction interpolation and minimax "
    "rational approximation",
)


def _bad_request(exc):
    return HTTPException(status_code=422, detail=str(exc))


def _to_fraction(model):
    try:
        return ContinuedFraction(tuple(model.a), tuple(model.z))
    except ValueError as exc:
        raise _bad_request(exc) from exc


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/interpolate", response_model=InterpolateResponse)
def interpolate(req: InterpolateRequest):
    try:
        samples = SampleSet(tuple(req.xs), tuple(req.fs))
        result = thiele_greedy(samples, tol=req.tol, max_terms=req.max_terms)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    report = residual_report(result.fraction, samples)
    return InterpolateResponse(
        fraction=FractionModel(**result.fraction.to_dict()),
        points_used=result.points_used,
        termination=result.termination.value,
        final_max_residual=_clean(result.final_max_residual),
        node_residual_2norm=_clean(report.norm2),
        node_residual_max=_clean(report.norm_inf),
    )


@app.post("/evaluate", response_model=EvaluateResponse)
def evaluate(req: EvaluateRequest):
    cf = _to_fraction(req.fraction)
    if req.points is not None:
        xs = np.asarray(req.points, dtype=float)
    else:
        g = req.grid
        if not g.a < g.b:
            raise _bad_request("grid requires a < b")
        xs = np.linspace(g.a, g.b, g.m)
    values = eval_backward(cf, xs)
    return EvaluateResponse(
        xs=[float(x) for x in xs],
        values=[format_value(v) for v in np.atleast_1d(values)],
    )


@app.post("/experiment", response_model=ExperimentResponse)
def experiment(req: ExperimentRequest):
    if req.name not in EXPERIMENT_NAMES:
        raise _bad_request(
            f"unknown experiment {req.name!r}; available: {EXPERIMENT_NAMES}"
        )
    sweep_kw = {
        k: v
        for k, v in (
            ("n_min", req.n_min),
            ("n_max", req.n_max),
            ("grid_size", req.grid_size),
            ("tol", req.tol),
        )
        if v is not None
    }
    brasil_kw = {
        k: v
        for k, v in (
            ("smax", req.smax),
            ("t", req.t),
            ("tol", req.tol),
            ("max_iter", req.max_iter),
        )
        if v is not None
    }
    try:
        if req.name == "newman_abs":
            rows = run_newman_abs(**sweep_kw)
        elif req.name == "newman_sqrt":
            rows = run_newman_sqrt(**sweep_kw)
        elif req.name == "sin_minimax":
            return _minimax_response(req.name, run_sin_minimax(**brasil_kw))
        else:
            return _minimax_response(req.name, run_sqrt_minimax(**brasil_kw))
    except ValueError as exc:
        raise _bad_request(exc) from exc
    return ExperimentResponse(
        name=req.name,
        rows=[ExperimentRowModel(**r.__dict__) for r in rows],
    )


def _minimax_response(name, summary):
    return ExperimentResponse(
        name=name,
        minimax=MinimaxModel(
            fraction=FractionModel(**summary.fraction.to_dict()),
            leveled_error=summary.leveled_error,
            level_ratio=summary.level_ratio,
            iterations=summary.iterations,
            converged=summary.converged,
            degenerate=summary.degenerate,
            equioscillations=summary.equioscillations,
            alternating=summary.alternating,
            trace=list(summary.trace),
        ),
    )


@app.get("/nodes", response_model=NodesResponse)
def nodes(
    kind: str,
    n: int = None,
    m: int = None,
    p: float = None,
    a: float = None,
    b: float = None,
    drop_endpoints: bool = False,
):
    try:
        if kind == "newman":
            pts = newman_points(n)
        elif kind == "squared_newman":
            pts = squared_newman_points(n)
        elif kind == "chebyshev1":
            pts = chebyshev1(m, a, b)
        elif kind == "power_grid":
            pts = power_grid(m, p, a, b, drop_endpoints)
        else:
            raise ValueError(
                f"unknown node family {kind!r}; available: newman, "
                "squared_newman, chebyshev1, power_grid"
            )
    except (ValueError, TypeError) as exc:
        raise _bad_request(exc) from exc
    return NodesResponse(kind=kind, points=[float(x) for x in pts])
