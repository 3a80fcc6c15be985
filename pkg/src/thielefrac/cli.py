"""Command-line front end: a thin client of the HTTP service.

Without --server the commands talk to an in-process instance of the
service; with --server URL they hit a remote one started via `serve`.
"""

import json
import sys

import click
import httpx

from .experiments import EXPERIMENT_NAMES, SWEEP_HEADER
from .io import read_samples


def _make_client(server):
    if server:
        return httpx.Client(base_url=server, timeout=None)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _post(ctx, path, payload):
    with _make_client(ctx.obj["server"]) as client:
        resp = client.post(path, json=payload)
    if resp.status_code != 200:
        detail = resp.json().get("detail", resp.text)
        raise click.ClickException(f"{path} failed: {detail}")
    return resp.json()


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service (default: in-process).")
@click.pass_context
def main(ctx, server):
    """Thiele continued-fraction interpolation and minimax approximation."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.option("--input", "input_path", required=True,
              type=click.Path(exists=True), help="Sample CSV with header x,f.")
@click.option("--tol", default=5e-15, show_default=True,
              help="Relative early-termination tolerance.")
@click.option("--max-terms", default=None, type=int,
              help="Cap on consumed points (default: unlimited).")
@click.option("--output", "output_path", default=None,
              type=click.Path(), help="Write the fraction document here.")
@click.pass_context
def interpolate(ctx, input_path, tol, max_terms, output_path):
    """Build a continued fraction from a sample CSV."""
    try:
        samples = read_samples(input_path)
    except (OSError, ValueError) as exc:
        raise click.ClickException(str(exc))
    data = _post(ctx, "/interpolate", {
        "xs": list(samples.xs),
        "fs": list(samples.fs),
        "tol": tol,
        "max_terms": max_terms,
    })
    doc = json.dumps(data["fraction"])
    if output_path:
        with open(output_path, "w") as fh:
            fh.write(doc + "\n")
    else:
        click.echo(doc)
    click.echo(f"points_used: {data['points_used']}", err=True)
    click.echo(f"termination: {data['termination']}", err=True)
    click.echo(f"final_max_residual: {data['final_max_residual']}", err=True)
    click.echo(f"node_residual_2norm: {data['node_residual_2norm']}", err=True)
    click.echo(f"node_residual_max: {data['node_residual_max']}", err=True)


def _parse_grid(_ctx, _param, value):
    if value is None:
        return None
    try:
        a, b, m = value.split(",")
        return {"a": float(a), "b": float(b), "m": int(m)}
    except ValueError:
        raise click.BadParameter("expected a,b,m (two floats and a count)")


@main.command("eval")
@click.option("--cfrac", "cfrac_path", required=True,
              type=click.Path(exists=True), help="Fraction document (JSON).")
@click.option("--points", "points_path", default=None,
              type=click.Path(exists=True),
              help="CSV of query abscissae (header x, or x,f).")
@click.option("--grid", default=None, callback=_parse_grid, metavar="A,B,M",
              help="Uniform grid of M points on [A, B].")
@click.option("--output", "output_path", default=None, type=click.Path(),
              help="Write the x,C CSV here (default: stdout).")
@click.pass_context
def eval_cmd(ctx, cfrac_path, points_path, grid, output_path):
    """Evaluate a fraction document on points or a grid; emits x,C CSV.

    Pole values are printed as inf/-inf/nan sentinels."""
    if (points_path is None) == (grid is None):
        raise click.UsageError("provide exactly one of --points or --grid")
    try:
        with open(cfrac_path) as fh:
            fraction = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise click.ClickException(f"malformed fraction document: {exc}")
    if not isinstance(fraction, dict) or "a" not in fraction or "z" not in fraction:
        raise click.ClickException(
            f"malformed fraction document {cfrac_path}: needs keys 'a' and 'z'"
        )
    payload = {"fraction": {"a": fraction["a"], "z": fraction["z"]}}
    if points_path:
        payload["points"] = _read_points(points_path)
    else:
        payload["grid"] = grid
    data = _post(ctx, "/evaluate", payload)
    lines = ["x,C"]
    lines += [f"{x!r},{v}" for x, v in zip(data["xs"], data["values"])]
    text = "\n".join(lines) + "\n"
    if output_path:
        with open(output_path, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _read_points(path):
    pts = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            field = line.split(",")[0]
            if lineno == 1 and field == "x":
                continue
            try:
                pts.append(float(field))
            except ValueError:
                raise click.ClickException(
                    f"{path}:{lineno}: non-numeric abscissa {field!r}"
                )
    if not pts:
        raise click.ClickException(f"{path}: no query points")
    return pts


@main.command()
@click.argument("name", type=click.Choice(EXPERIMENT_NAMES))
@click.option("--nmin", default=None, type=int, help="Sweep start (sweeps only).")
@click.option("--nmax", default=None, type=int, help="Sweep end (sweeps only).")
@click.option("--grid-size", default=None, type=int,
              help="Dense evaluation grid size (sweeps only).")
@click.option("--smax", default=None, type=float, help="Step-size cap (minimax).")
@click.option("--t", default=None, type=float,
              help="Step proportionality factor (minimax).")
@click.option("--tol", default=None, type=float,
              help="Termination tolerance (sweep) or level-ratio tolerance (minimax).")
@click.option("--max-iter", default=None, type=int, help="Iteration cap (minimax).")
@click.option("--out", "out_path", default=None, type=click.Path(),
              help="Write the result table/document here (default: stdout).")
@click.pass_context
def experiment(ctx, name, nmin, nmax, grid_size, smax, t, tol, max_iter, out_path):
    """Run one of the named studies and emit its table or summary."""
    data = _post(ctx, "/experiment", {
        "name": name,
        "n_min": nmin,
        "n_max": nmax,
        "grid_size": grid_size,
        "smax": smax,
        "t": t,
        "tol": tol,
        "max_iter": max_iter,
    })
    if data["rows"] is not None:
        lines = [SWEEP_HEADER]
        for r in data["rows"]:
            lines.append(
                f"{r['n']},{r['max_interval_error']!r},"
                f"{r['node_residual_2norm']!r},{r['points_used']},"
                f"{str(r['poles_in_interval']).lower()},{r['runtime_ms']!r},"
                f"{r['asymptote']!r}"
            )
        text = "\n".join(lines) + "\n"
    else:
        mm = data["minimax"]
        doc = dict(mm["fraction"])
        doc["trace"] = mm["trace"]
        for key in ("leveled_error", "level_ratio", "iterations", "converged",
                    "degenerate", "equioscillations", "alternating"):
            doc[key] = mm[key]
        text = json.dumps(doc) + "\n"
        click.echo(
            f"leveled_error: {mm['leveled_error']}  iterations: "
            f"{mm['iterations']}  converged: {mm['converged']}  "
            f"equioscillations: {mm['equioscillations']}  "
            f"alternating: {mm['alternating']}",
            err=True,
        )
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("kind", type=click.Choice(
    ["newman", "squared_newman", "chebyshev1", "power_grid"]))
@click.option("--n", default=None, type=int, help="Family index (Newman kinds).")
@click.option("--m", default=None, type=int, help="Point count (grid kinds).")
@click.option("--p", default=None, type=float, help="Power (power_grid).")
@click.option("--a", default=None, type=float, help="Interval start.")
@click.option("--b", default=None, type=float, help="Interval end.")
@click.option("--drop-endpoints", is_flag=True, default=False)
@click.pass_context
def nodes(ctx, kind, n, m, p, a, b, drop_endpoints):
    """Print an interpolation point family, one abscissa per line."""
    params = {"kind": kind, "drop_endpoints": drop_endpoints}
    for key, val in (("n", n), ("m", m), ("p", p), ("a", a), ("b", b)):
        if val is not None:
            params[key] = val
    with _make_client(ctx.obj["server"]) as client:
        resp = client.get("/nodes", params=params)
    if resp.status_code != 200:
        raise click.ClickException(str(resp.json().get("detail", resp.text)))
    for x in resp.json()["points"]:
        click.echo(repr(x))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
