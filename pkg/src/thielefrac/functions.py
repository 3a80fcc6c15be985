"""Named built-in target functions with their default domains."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BuiltinFunction:
    name: str
    fn: object
    domain: tuple


BUILTINS = {
    b.name: b
    for b in (
        BuiltinFunction("abs_x", np.abs, (-1.0, 1.0)),
        BuiltinFunction("sqrt_x", np.sqrt, (0.0, 1.0)),
        BuiltinFunction(
            "sin20_ratio",
            lambda x: np.sin(20.0 * x) / (1.0 + 25.0 * x * x),
            (-1.0, 2.0),
        ),
        BuiltinFunction("cos_exp", lambda x: np.cos(np.exp(x)), (-1.0, 1.0)),
    )
}


def get_builtin(name):
    try:
        return BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown function {name!r}; available: {sorted(BUILTINS)}"
        ) from None
