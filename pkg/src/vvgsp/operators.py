"""Convolution of scalar with vector-valued signals, the translation
operator and its algebra (kernel, range, inverse, adjoint, operator norms),
and the convolution continuity bound.

Scalar signals are plain 1-D arrays of field scalars; ``scalar_signal``
lifts one to a Signal over the one-dimensional value space when value-space
semantics (norms, transforms) are wanted. Convolution is always evaluated
in the spectral domain: transform, multiply pointwise, transform back.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bases import OrthonormalBasis
from .errors import (DimensionMismatch, NotHilbert, NotInvertible,
                     VertexOutOfRange)
from .exponents import INF, Exponent, as_exponent
from .fourier import Signal, _forward_coords, _inverse_coords, _transform_space
from .norms import mixed_norm
from .spaces import FiniteDim, ScalarField

ZERO_TOL = 1e-12
ISOMETRY_TOL = 1e-10


def as_scalar_signal(values, n: int | None = None) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError(f"scalar signal must be one-dimensional, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise DimensionMismatch(f"scalar signal length {arr.shape[0]} vs basis dimension {n}")
    if not np.iscomplexobj(arr):
        arr = arr.astype(np.float64)
    return arr


def scalar_signal(values, field: ScalarField | None = None) -> Signal:
    """Lift a 1-D array of scalars to a Signal over the 1-dimensional space."""
    arr = as_scalar_signal(values)
    if field is None:
        field = ScalarField.COMPLEX if np.iscomplexobj(arr) else ScalarField.REAL
    return Signal(FiniteDim(1, 2, field), arr.reshape(-1, 1))


def _scalar_hat(alpha: np.ndarray, basis: OrthonormalBasis) -> np.ndarray:
    return _forward_coords(basis.matrix, alpha.reshape(-1, 1))[:, 0]


def _spectral_multiply(multiplier: np.ndarray, f, basis: OrthonormalBasis):
    """Apply a spectral multiplier: igft(multiplier * gft(f)).

    ``f`` may be a Signal or a 1-D scalar array; the result has the same kind.
    """
    if isinstance(f, Signal):
        if f.n != basis.n:
            raise DimensionMismatch(f"signal length {f.n} vs basis dimension {basis.n}")
        fhat = _forward_coords(basis.matrix, f.coords)
        out = _inverse_coords(basis.matrix, multiplier[:, None] * fhat)
        space = f.space
        if np.iscomplexobj(out) and space.field is ScalarField.REAL:
            space = space.complexified()
        return Signal(space, out)
    arr = as_scalar_signal(f, basis.n)
    fhat = _forward_coords(basis.matrix, arr.reshape(-1, 1))
    out = _inverse_coords(basis.matrix, multiplier[:, None] * fhat)
    return out[:, 0]


def convolve(alpha, f, basis: OrthonormalBasis):
    """Spectral-domain convolution: gft(alpha * f)(k) = alphahat(k) fhat(k).

    ``alpha`` is a scalar signal; ``f`` may be a Signal or another scalar
    signal (the result then is a scalar signal too).
    """
    alpha = as_scalar_signal(alpha, basis.n)
    return _spectral_multiply(_scalar_hat(alpha, basis), f, basis)


def convolution_identity(basis: OrthonormalBasis) -> np.ndarray:
    """The convolution identity: the sum of the basis vectors.

    Its transform is the all-ones spectrum, so convolving with it is a no-op.
    """
    return basis.matrix.sum(axis=1)


def delta(m: int, n: int) -> np.ndarray:
    """The spike scalar signal at vertex m (1-based)."""
    if not (1 <= m <= n):
        raise VertexOutOfRange(f"vertex {m} out of range 1..{n}")
    out = np.zeros(n)
    out[m - 1] = 1.0
    return out


def _check_vertex(m: int, basis: OrthonormalBasis):
    if not (1 <= m <= basis.n):
        raise VertexOutOfRange(f"vertex {m} out of range 1..{basis.n}")


def translate(m: int, f, basis: OrthonormalBasis):
    """Translation to vertex m: convolution with the spike delta_m.

    Acts spectrally as multiplication by conj(u_k(m)).
    """
    _check_vertex(m, basis)
    return _spectral_multiply(np.conj(basis.row(m)), f, basis)


def _kernel_split(m: int, basis: OrthonormalBasis, zero_tol: float):
    mags = np.abs(basis.row(m))
    kernel_mask = mags <= zero_tol
    kernel_indices = tuple(int(k) + 1 for k in np.flatnonzero(kernel_mask))
    return mags, kernel_mask, kernel_indices


@dataclass(frozen=True)
class TranslationAnalysis:
    """Structure of the translation at a vertex: which spectral indices it
    kills, invertibility, and (on Hilbert spaces) the induced operator norms."""

    m: int
    kernel_indices: tuple
    kernel_dim: int
    invertible: bool
    induced_norm: float | None
    induced_inverse_norm: float | None
    isometry_condition: bool

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "K0": list(self.kernel_indices),
            "invertible": self.invertible,
            "induced_norm": self.induced_norm,
            "induced_inverse_norm": self.induced_inverse_norm,
            "isometry_condition": self.isometry_condition,
        }


def analyze_translation(m: int, basis: OrthonormalBasis, hilbert: bool = True,
                        zero_tol: float = ZERO_TOL) -> TranslationAnalysis:
    """Kernel indices, invertibility and induced norms of the translation.

    ``induced_norm``/``induced_inverse_norm`` are the operator norms of the
    induced isomorphism onto the range and of its inverse; they are 2-norm
    statements and reported only when ``hilbert`` is true. The isometry
    condition is max |u_k(m)| == (N - d)^(-1/2) over the surviving indices.
    """
    _check_vertex(m, basis)
    mags, kernel_mask, kernel_indices = _kernel_split(m, basis, zero_tol)
    surviving = mags[~kernel_mask]
    d = len(kernel_indices)
    invertible = d == 0
    isometry = False
    induced = induced_inv = None
    if surviving.size:
        top = float(surviving.max())
        isometry = abs(top - (basis.n - d) ** -0.5) <= ISOMETRY_TOL
        if hilbert:
            induced = top
            induced_inv = 1.0 / float(surviving.min())
    return TranslationAnalysis(m, kernel_indices, d, invertible, induced,
                               induced_inv, isometry)


def translation_inverse(m: int, g, basis: OrthonormalBasis,
                        zero_tol: float = ZERO_TOL):
    """Invert the translation at m; requires u_k(m) != 0 for every k."""
    _check_vertex(m, basis)
    _, _, kernel_indices = _kernel_split(m, basis, zero_tol)
    if kernel_indices:
        raise NotInvertible(
            f"translation at vertex {m} is singular; vanishing spectral indices {list(kernel_indices)}",
            kernel_indices,
        )
    return _spectral_multiply(1.0 / np.conj(basis.row(m)), g, basis)


def kernel_range_projectors(m: int, f: Signal, basis: OrthonormalBasis,
                            zero_tol: float = ZERO_TOL):
    """Split f = f_ker + f_im along the kernel/range decomposition of the
    translation at m; both projections are idempotent."""
    _check_vertex(m, basis)
    if f.n != basis.n:
        raise DimensionMismatch(f"signal length {f.n} vs basis dimension {basis.n}")
    _, kernel_mask, _ = _kernel_split(m, basis, zero_tol)
    fhat = _forward_coords(basis.matrix, f.coords)
    space = _transform_space(f.space, basis)
    ker = _inverse_coords(basis.matrix, np.where(kernel_mask[:, None], fhat, 0.0))
    im = _inverse_coords(basis.matrix, np.where(kernel_mask[:, None], 0.0, fhat))
    return Signal(space, ker), Signal(space, im)


def translation_adjoint(m: int, g: Signal, basis: OrthonormalBasis) -> Signal:
    """The 2-norm adjoint of the translation: spectral multiplier u_k(m).

    Coincides with the translation itself exactly when row m is real.
    """
    _check_vertex(m, basis)
    if not g.space.hilbert_flag:
        raise NotHilbert(f"adjoint requires a Hilbert value space, got {g.space!r}")
    return _spectral_multiply(basis.row(m), g, basis)


def translation_opnorm_hilbert(m: int, basis: OrthonormalBasis) -> float:
    """||T_m||_{2->2} on Hilbert-valued signals: the max magnitude in row m.

    Attained by any signal whose spectrum is a spike at the maximizing index.
    """
    _check_vertex(m, basis)
    return float(np.abs(basis.row(m)).max())


_YOUNG_BASE = (Fraction(1), Fraction(4, 3), Fraction(3, 2), Fraction(2),
               Fraction(3), Fraction(4))


def _young_grid(grid_size: int):
    values = set(_YOUNG_BASE)
    for i in range(1, grid_size):
        values.add(Fraction(1) + Fraction(3 * i, grid_size))
    return [Exponent(v) for v in sorted(values)] + [INF]


def young_bound(basis: OrthonormalBasis, p, q, r, grid_size: int = 1) -> float:
    """Upper bound for the convolution norm ||alpha * f||_r
    <= bound * ||alpha||_p ||f||_q.

    Minimizes ||U*||_{s,r} ||U||_{p',t} ||U||_{q',w} over a finite grid of
    exponent triples with 1/s + 1/t + 1/w = 1; the continuum minimum may be
    slightly smaller, so this is a certified but possibly loose bound.
    """
    if grid_size < 1:
        raise ValueError("grid_size must be >= 1")
    p, q, r = as_exponent(p), as_exponent(q), as_exponent(r)
    pc, qc = p.conjugate(), q.conjugate()
    adjoint = basis.adjoint()
    grid = _young_grid(grid_size)
    best = np.inf
    for s in grid:
        budget = 1 - s.reciprocal()
        for t in grid:
            rest = budget - t.reciprocal()
            if rest < 0:
                continue
            w = INF if rest == 0 else Exponent(1 / rest)
            product = (mixed_norm(adjoint, s, r)
                       * mixed_norm(basis, pc, t)
                       * mixed_norm(basis, qc, w))
            best = min(best, product)
    return float(best)
