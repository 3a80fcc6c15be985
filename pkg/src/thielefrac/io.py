"""CSV ingestion for sample sets and evaluation output formatting."""

import csv
import math

from .greedy import SampleSet


class SampleFormatError(ValueError):
    """Malformed sample CSV; message carries the offending line number."""


def parse_samples_csv(text, source="<string>"):
    """Parse `x,f` CSV text into a SampleSet; malformed rows are hard errors."""
    reader = csv.reader(text.splitlines())
    try:
        header = next(reader)
    except StopIteration:
        raise SampleFormatError(f"{source}: empty input") from None
    if [h.strip() for h in header] != ["x", "f"]:
        raise SampleFormatError(f"{source}:1: expected header 'x,f'")
    xs, fs = [], []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 2:
            raise SampleFormatError(
                f"{source}:{lineno}: expected 2 fields, got {len(row)}"
            )
        try:
            x, f = float(row[0]), float(row[1])
        except ValueError:
            raise SampleFormatError(
                f"{source}:{lineno}: non-numeric value in {row!r}"
            ) from None
        if not (math.isfinite(x) and math.isfinite(f)):
            raise SampleFormatError(f"{source}:{lineno}: non-finite value")
        xs.append(x)
        fs.append(f)
    if not xs:
        raise SampleFormatError(f"{source}: no sample rows")
    if len(set(xs)) != len(xs):
        raise SampleFormatError(f"{source}: duplicate abscissae in input")
    return SampleSet(tuple(xs), tuple(fs))


def read_samples(path):
    with open(path) as fh:
        return parse_samples_csv(fh.read(), source=str(path))


def format_value(v):
    """Full-precision decimal, with inf/-inf/nan sentinels for non-finite."""
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return repr(v)
