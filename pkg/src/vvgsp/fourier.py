"""Vector-valued signals and their frequency transform.

A signal assigns an element of a value space to each of N vertices; the
transform expands it over an orthonormal basis of K^N:

    fhat(k) = sum_n conj(u_k(n)) f(n),      f(n) = sum_k u_k(n) fhat(k).

Summation is performed in ascending vertex/frequency order so results are
bit-reproducible and independent of any batching.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import OrthonormalBasis
from .errors import DimensionMismatch, NotHilbert, SpaceMismatch
from .spaces import ScalarField, ValueElement, ValueSpace, _as_field_array, coerce_scalar


@dataclass(frozen=True, eq=False)
class Signal:
    """A length-N sequence of value-space elements, stored as (N, dim) coordinates."""

    space: ValueSpace
    coords: np.ndarray

    def __post_init__(self):
        coords = _as_field_array(self.coords, self.space.field)
        if coords.ndim == 1 and self.space.dim == 1:
            coords = coords.reshape(-1, 1)
        if coords.ndim != 2 or coords.shape[1] != self.space.dim:
            raise ValueError(
                f"expected coordinates of shape (N, {self.space.dim}), got {coords.shape}"
            )
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    def value(self, vertex: int) -> ValueElement:
        """The element at a 1-based vertex."""
        if not (1 <= vertex <= self.n):
            raise IndexError(f"vertex {vertex} out of range 1..{self.n}")
        return self.space.element(self.coords[vertex - 1])

    @property
    def values(self) -> tuple:
        return tuple(self.space.element(row) for row in self.coords)

    def vertex_norms(self) -> np.ndarray:
        """The per-vertex value norms (||f(1)||, ..., ||f(N)||)."""
        return self.space.norms(self.coords)

    def is_zero(self) -> bool:
        return bool(np.all(self.coords == 0))

    def _check_compatible(self, other: "Signal"):
        if not isinstance(other, Signal):
            raise TypeError("expected a Signal")
        if other.space != self.space:
            raise SpaceMismatch(f"{self.space!r} vs {other.space!r}")
        if other.n != self.n:
            raise DimensionMismatch(f"signal lengths {self.n} vs {other.n}")

    def __add__(self, other):
        self._check_compatible(other)
        return Signal(self.space, self.coords + other.coords)

    def __sub__(self, other):
        self._check_compatible(other)
        return Signal(self.space, self.coords - other.coords)

    def __neg__(self):
        return Signal(self.space, -self.coords)

    def scale(self, lam):
        lam = coerce_scalar(lam, self.space.field)
        return Signal(self.space, lam * self.coords)

    __mul__ = scale

    def __rmul__(self, lam):
        return self.scale(lam)


def signal_from_elements(elements) -> Signal:
    """Build a signal from value elements; all must share one space."""
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    space = elements[0].space
    for el in elements[1:]:
        if el.space != space:
            raise SpaceMismatch("elements belong to different spaces")
    return Signal(space, np.stack([el.coords for el in elements]))


def zero_signal(space: ValueSpace, n: int) -> Signal:
    return Signal(space, np.zeros((n, space.dim), dtype=space.field.dtype))


def _transform_space(space: ValueSpace, basis: OrthonormalBasis) -> ValueSpace:
    # a complex basis promotes real value spaces to complex coordinates
    if basis.field is ScalarField.COMPLEX and space.field is ScalarField.REAL:
        return space.complexified()
    return space


def _forward_coords(matrix: np.ndarray, coords: np.ndarray) -> np.ndarray:
    """fhat coordinates; vertex axis is -2, summed in ascending order."""
    n = matrix.shape[0]
    out = np.zeros(coords.shape, dtype=np.result_type(matrix.dtype, coords.dtype))
    for row in range(n):
        out += np.conj(matrix[row, :])[:, None] * coords[..., row, :][..., None, :]
    return out


def _inverse_coords(matrix: np.ndarray, coords: np.ndarray) -> np.ndarray:
    """Inverse-transform coordinates; frequency axis is -2, ascending order."""
    n = matrix.shape[0]
    out = np.zeros(coords.shape, dtype=np.result_type(matrix.dtype, coords.dtype))
    for col in range(n):
        out += matrix[:, col][:, None] * coords[..., col, :][..., None, :]
    return out


def _check_dims(f: Signal, basis: OrthonormalBasis):
    if f.n != basis.n:
        raise DimensionMismatch(f"signal length {f.n} vs basis dimension {basis.n}")


def gft(f: Signal, basis: OrthonormalBasis) -> Signal:
    """The frequency transform fhat(k) = sum_n conj(u_k(n)) f(n)."""
    _check_dims(f, basis)
    return Signal(_transform_space(f.space, basis), _forward_coords(basis.matrix, f.coords))


def igft(f: Signal, basis: OrthonormalBasis) -> Signal:
    """The inverse transform fcheck(n) = sum_k u_k(n) f(k); inverts gft."""
    _check_dims(f, basis)
    return Signal(_transform_space(f.space, basis), _inverse_coords(basis.matrix, f.coords))


def signal_inner(f: Signal, g: Signal):
    """Sum of per-vertex inner products; requires a Hilbert value space."""
    f._check_compatible(g)
    if not f.space.hilbert_flag:
        raise NotHilbert(f"{f.space!r} has no inner product")
    value = complex(np.sum(f.coords * np.conj(g.coords)))
    return value.real if f.space.field is ScalarField.REAL else value


def parseval_check(f: Signal, g: Signal, basis: OrthonormalBasis):
    """Return (<fhat, ghat>, <f, g>); equal for Hilbert value spaces."""
    _check_dims(f, basis)
    fhat = gft(f, basis)
    ghat = gft(g, basis)
    return signal_inner(fhat, ghat), signal_inner(f, g)
