"""JSON and CSV serialization for spaces, signals, graphs, bases and matrices.

JSON carries full double precision (Python's float serialization is exact
round-trip); CSV matrices use one row per line with complex entries written
as ``re+imj`` text. Rounding for display is applied only where stated.
"""
from __future__ import annotations

import json

import numpy as np

from .bases import OrthonormalBasis
from .fourier import Signal
from .graphs import Graph
from .spaces import FiniteDim, SampledFunction, ScalarField, ValueSpace
from .exponents import Exponent


# -- scalars ---------------------------------------------------------------

def format_scalar(value) -> str:
    value = complex(value)
    if value.imag == 0:
        return repr(value.real)
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}j"


def parse_scalar(text: str):
    value = complex(text)
    return value.real if value.imag == 0 else value


def _scalar_to_json(value):
    value = complex(value)
    return value.real if value.imag == 0 else [value.real, value.imag]


def _scalar_from_json(obj):
    if isinstance(obj, (list, tuple)):
        return complex(obj[0], obj[1])
    return float(obj)


def _array_to_json(values) -> list:
    return [_scalar_to_json(v) for v in np.asarray(values).ravel()]


def _array_from_json(items) -> np.ndarray:
    return np.asarray([_scalar_from_json(v) for v in items])


# -- value spaces ----------------------------------------------------------

def space_to_json_dict(space: ValueSpace) -> dict:
    if isinstance(space, FiniteDim):
        return {"kind": "finite_dim", "dim": space.dim, "p": str(space.p),
                "field": space.field.value}
    if isinstance(space, SampledFunction):
        return {"kind": "sampled_function", "grid": space.grid, "p": "inf",
                "field": space.field.value, "interval": [space.lower, space.upper]}
    raise TypeError(f"cannot serialize space {space!r}")


def space_from_json_dict(obj: dict) -> ValueSpace:
    kind = obj["kind"]
    field = ScalarField(obj.get("field", "real"))
    if kind == "finite_dim":
        return FiniteDim(int(obj["dim"]), Exponent(obj.get("p", 2)), field)
    if kind == "sampled_function":
        lower, upper = obj.get("interval", [0.0, 1.0])
        return SampledFunction(int(obj["grid"]), float(lower), float(upper), field)
    raise ValueError(f"unknown space kind {kind!r}")


# -- value elements ----------------------------------------------------------

def element_to_json(element) -> list:
    """A value element as a JSON array of scalars (complex as [re, im])."""
    return _array_to_json(element.coords)


def element_from_json(space: ValueSpace, items):
    return space.element(_array_from_json(items))


# -- signals ---------------------------------------------------------------

def signal_to_json_dict(f: Signal) -> dict:
    return {"n": f.n, "space": space_to_json_dict(f.space),
            "values": [_array_to_json(row) for row in f.coords]}


def signal_from_json_dict(obj: dict) -> Signal:
    space = space_from_json_dict(obj["space"])
    coords = np.stack([_array_from_json(row) for row in obj["values"]])
    return Signal(space, coords)


def load_signal(path) -> Signal:
    with open(path, encoding="utf-8") as fh:
        return signal_from_json_dict(json.load(fh))


def save_signal(f: Signal, path) -> None:
    write_json(signal_to_json_dict(f), path)


def load_scalar_signal(path) -> np.ndarray:
    """Scalar signals are 1-dimensional signal files or {"n", "values"} JSON."""
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    if "space" in obj:
        f = signal_from_json_dict(obj)
        if f.space.dim != 1:
            raise ValueError("expected a signal over a one-dimensional value space")
        return f.coords[:, 0]
    return _array_from_json(obj["values"])


# -- graphs ----------------------------------------------------------------

def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "directed": g.directed,
            "edges": sorted([i, j] for i, j in g.edges)}


def graph_from_json_dict(obj: dict) -> Graph:
    edges = frozenset((int(i), int(j)) for i, j in obj.get("edges", []))
    return Graph(int(obj["n"]), edges, directed=bool(obj.get("directed", False)))


# -- bases -----------------------------------------------------------------

def basis_to_json_dict(basis: OrthonormalBasis) -> dict:
    return {"n": basis.n, "field": basis.field.value,
            "columns": [_array_to_json(basis.matrix[:, k]) for k in range(basis.n)]}


def basis_from_json_dict(obj: dict) -> OrthonormalBasis:
    columns = [_array_from_json(col) for col in obj["columns"]]
    mat = np.stack(columns, axis=1)
    if ScalarField(obj.get("field", "real")) is ScalarField.COMPLEX:
        mat = mat.astype(np.complex128)
    return OrthonormalBasis(mat)


def load_basis(path) -> OrthonormalBasis:
    with open(path, encoding="utf-8") as fh:
        return basis_from_json_dict(json.load(fh))


def save_basis(basis: OrthonormalBasis, path) -> None:
    write_json(basis_to_json_dict(basis), path)


# -- matrices --------------------------------------------------------------

def matrix_to_csv(matrix: np.ndarray) -> str:
    lines = [",".join(format_scalar(v) for v in row) for row in np.asarray(matrix)]
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str) -> np.ndarray:
    rows = [[parse_scalar(cell) for cell in line.split(",")]
            for line in text.strip().splitlines()]
    return np.asarray(rows)


# -- files -----------------------------------------------------------------

def write_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_text(text: str, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
