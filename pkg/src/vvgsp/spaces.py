"""Normed value spaces in which graph signals take their values.

Two concrete space kinds are provided: finite-dimensional coordinate spaces
with a p-norm, and continuous functions on an interval represented by
uniform samples under the sup norm (approximated by the max over samples).
All operations are pure over immutable data.
"""
from __future__ import annotations

import dataclasses
import enum
from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatch, NotHilbert, SpaceMismatch
from .exponents import Exponent, as_exponent

DEFAULT_GRID = 256

# When enabled (tests do this), Hilbert-flagged spaces verify the
# parallelogram law on random pairs at construction time.
_construction_checks = False


def enable_construction_checks(on: bool = True) -> None:
    global _construction_checks
    _construction_checks = on


class ScalarField(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self):
        return np.float64 if self is ScalarField.REAL else np.complex128


def _as_field(value) -> ScalarField:
    return value if isinstance(value, ScalarField) else ScalarField(str(value).lower())


def coerce_scalar(lam, field: ScalarField):
    """Validate a scalar against a field; reject complex scalars on real spaces."""
    lam = complex(lam)
    if field is ScalarField.REAL:
        if lam.imag != 0.0:
            raise FieldMismatch(f"complex scalar {lam} not allowed in a real space")
        return lam.real
    return lam


def _as_field_array(values, field: ScalarField) -> np.ndarray:
    arr = np.asarray(values)
    if field is ScalarField.REAL:
        if np.iscomplexobj(arr):
            if np.any(arr.imag != 0):
                raise FieldMismatch("complex coordinates in a real space")
            arr = arr.real
        return np.ascontiguousarray(arr, dtype=np.float64)
    return np.ascontiguousarray(arr, dtype=np.complex128)


class ValueSpace:
    """Common behaviour of value spaces. Concrete kinds are frozen dataclasses.

    Subclasses provide ``dim`` (coordinate count), ``field``, ``hilbert_flag``
    and ``norms`` (norm along the last axis, batched over leading axes).
    """

    dim: int
    field: ScalarField

    def norms(self, coords: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def norm(self, coords) -> float:
        return float(self.norms(np.asarray(coords)))

    def inner(self, x, y):
        """Standard inner product, conjugate-linear in the second argument."""
        if not self.hilbert_flag:
            raise NotHilbert(f"{self!r} has no inner product consistent with its norm")
        value = complex(np.sum(np.asarray(x) * np.conj(np.asarray(y))))
        return value.real if self.field is ScalarField.REAL else value

    def element(self, coords) -> "ValueElement":
        return ValueElement(self, coords)

    def zero(self) -> "ValueElement":
        return self.element(np.zeros(self.dim, dtype=self.field.dtype))

    def unit(self) -> "ValueElement":
        """A canonical element of norm exactly 1."""
        raise NotImplementedError

    def complexified(self) -> "ValueSpace":
        if self.field is ScalarField.COMPLEX:
            return self
        return dataclasses.replace(self, field=ScalarField.COMPLEX)

    def random_coords(self, rng: np.random.Generator, leading_shape=()) -> np.ndarray:
        """Coordinates uniform in [-1, 1] (real) or the unit disk (complex)."""
        shape = tuple(leading_shape) + (self.dim,)
        if self.field is ScalarField.REAL:
            return rng.uniform(-1.0, 1.0, shape)
        radius = np.sqrt(rng.uniform(0.0, 1.0, shape))
        angle = rng.uniform(0.0, 2.0 * np.pi, shape)
        return radius * np.exp(1j * angle)

    def random_element(self, rng: np.random.Generator) -> "ValueElement":
        return self.element(self.random_coords(rng))

    def _maybe_self_check(self):
        if _construction_checks and self.hilbert_flag:
            dev = check_parallelogram(self, pairs=100, seed=0)
            if dev > 1e-12:
                raise AssertionError(
                    f"{self!r} declared Hilbert but parallelogram deviation {dev:g}"
                )


@dataclass(frozen=True)
class FiniteDim(ValueSpace):
    """K^d with the p-norm (p = inf means the max norm)."""

    dim: int
    p: Exponent = Exponent(2)
    field: ScalarField = ScalarField.REAL

    def __post_init__(self):
        object.__setattr__(self, "p", as_exponent(self.p))
        object.__setattr__(self, "field", _as_field(self.field))
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        self._maybe_self_check()

    @property
    def hilbert_flag(self) -> bool:
        # any p-norm on a one-dimensional space is |x|, which is hilbertian
        return self.p == Exponent(2) or self.dim == 1

    def norms(self, coords: np.ndarray) -> np.ndarray:
        mags = np.abs(coords)
        if self.p.is_inf:
            return mags.max(axis=-1)
        pf = float(self.p)
        return (mags**pf).sum(axis=-1) ** (1.0 / pf)

    def unit(self) -> "ValueElement":
        coords = np.zeros(self.dim, dtype=self.field.dtype)
        coords[0] = 1.0
        return self.element(coords)


@dataclass(frozen=True)
class SampledFunction(ValueSpace):
    """C([lower, upper]) sampled on a uniform grid, with the sup norm.

    The sup norm is approximated from below by the max over the samples;
    the grid size is caller-chosen.
    """

    grid: int = DEFAULT_GRID
    lower: float = 0.0
    upper: float = 1.0
    field: ScalarField = ScalarField.REAL

    def __post_init__(self):
        object.__setattr__(self, "field", _as_field(self.field))
        if self.grid < 1:
            raise ValueError("grid size must be >= 1")
        if not self.upper > self.lower:
            raise ValueError("interval must have positive length")
        self._maybe_self_check()

    @property
    def dim(self) -> int:
        return self.grid

    @property
    def hilbert_flag(self) -> bool:
        return self.grid == 1

    def norms(self, coords: np.ndarray) -> np.ndarray:
        return np.abs(coords).max(axis=-1)

    def unit(self) -> "ValueElement":
        return self.element(np.ones(self.grid, dtype=self.field.dtype))

    def grid_points(self) -> np.ndarray:
        if self.grid == 1:
            return np.array([self.lower])
        return np.linspace(self.lower, self.upper, self.grid)

    def sample(self, fn) -> "ValueElement":
        """Sample a callable t -> scalar on the grid."""
        return self.element(np.asarray([fn(t) for t in self.grid_points()]))


@dataclass(frozen=True, eq=False)
class ValueElement:
    """An element of a value space; immutable coordinates."""

    space: ValueSpace
    coords: np.ndarray

    def __post_init__(self):
        coords = _as_field_array(self.coords, self.space.field)
        if coords.ndim != 1 or coords.shape[0] != self.space.dim:
            raise ValueError(
                f"expected {self.space.dim} coordinates, got shape {coords.shape}"
            )
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)

    def _check_space(self, other: "ValueElement"):
        if not isinstance(other, ValueElement):
            raise TypeError("expected a ValueElement")
        if other.space != self.space:
            raise SpaceMismatch(f"{self.space!r} vs {other.space!r}")

    def __add__(self, other):
        self._check_space(other)
        return ValueElement(self.space, self.coords + other.coords)

    def __sub__(self, other):
        self._check_space(other)
        return ValueElement(self.space, self.coords - other.coords)

    def __neg__(self):
        return ValueElement(self.space, -self.coords)

    def scale(self, lam):
        lam = coerce_scalar(lam, self.space.field)
        return ValueElement(self.space, lam * self.coords)

    __mul__ = scale

    def __rmul__(self, lam):
        return self.scale(lam)

    def norm(self) -> float:
        return self.space.norm(self.coords)

    def inner(self, other):
        self._check_space(other)
        return self.space.inner(self.coords, other.coords)


def check_parallelogram(space: ValueSpace, pairs: int = 100, seed: int = 0) -> float:
    """Max relative deviation of the parallelogram law over random pairs."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(pairs):
        x = space.random_coords(rng)
        y = space.random_coords(rng)
        lhs = space.norm(x + y) ** 2 + space.norm(x - y) ** 2
        rhs = 2.0 * space.norm(x) ** 2 + 2.0 * space.norm(y) ** 2
        scale = max(lhs, rhs, 1e-30)
        worst = max(worst, abs(lhs - rhs) / scale)
    return worst


def find_parallelogram_violation(space: ValueSpace, tol: float = 1e-9):
    """Search axis-aligned pairs (e_i, e_j) for a parallelogram-law violation.

    Returns a violating (x, y) pair of elements, or None if all axis-aligned
    pairs satisfy the law within tol.
    """
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            x = np.zeros(space.dim, dtype=space.field.dtype)
            y = np.zeros(space.dim, dtype=space.field.dtype)
            x[i] = 1.0
            y[j] = 1.0
            lhs = space.norm(x + y) ** 2 + space.norm(x - y) ** 2
            rhs = 2.0 * space.norm(x) ** 2 + 2.0 * space.norm(y) ** 2
            if abs(lhs - rhs) > tol * max(lhs, rhs):
                return space.element(x), space.element(y)
    return None
