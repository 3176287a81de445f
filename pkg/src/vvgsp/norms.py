"""Signal p-norms, mixed matrix norms, coherences, operator-norm bounds with
extremal witnesses, and uncertainty lower bounds.

The transform norm ||F||_{p->q} is known exactly when q = inf (it equals the
conjugate coherence of the basis), when p = 1 (the q-coherence of the
adjoint), and on Hilbert value spaces when p = q = 2 (it is 1). Otherwise
only the mixed-norm upper bound is available and an empirical lower bound
is reported alongside it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import OrthonormalBasis
from .errors import ExponentOrder, NotExactRegime, ZeroSignal
from .exponents import INF, Exponent, as_exponent, holder_gap
from .fourier import Signal, _forward_coords, _transform_space, gft
from .spaces import FiniteDim, ValueSpace

UNCERTAINTY_VARIANTS = ("p_to_inf", "one_to_q", "p_to_q")


def _pnorm_along_last(values: np.ndarray, p: Exponent) -> np.ndarray:
    """p-norm of nonnegative data along the last axis."""
    if p.is_inf:
        return values.max(axis=-1)
    pf = float(p)
    return (values**pf).sum(axis=-1) ** (1.0 / pf)


def signal_norm(f: Signal, p) -> float:
    """L^p norm over vertices of the value-space norms; p = inf is the max."""
    return float(_pnorm_along_last(f.vertex_norms(), as_exponent(p)))


def holder_embedding_check(f: Signal, p, q):
    """Return (||f||_q, ||f||_p, N^(1/p-1/q) ||f||_q) for p < q.

    The middle value always lies between the outer two.
    """
    p, q = as_exponent(p), as_exponent(q)
    if not p < q:
        raise ExponentOrder(f"need p < q, got p={p}, q={q}")
    nq = signal_norm(f, q)
    np_ = signal_norm(f, p)
    factor = float(f.n) ** float(holder_gap(p, q))
    return nq, np_, factor * nq


def _matrix_of(basis_or_matrix) -> np.ndarray:
    if isinstance(basis_or_matrix, OrthonormalBasis):
        return basis_or_matrix.matrix
    return np.asarray(basis_or_matrix)


def mixed_norm(matrix, p, q) -> float:
    """The l^{p,q} norm: p-norm down each column, then q-norm across columns."""
    p, q = as_exponent(p), as_exponent(q)
    mags = np.abs(_matrix_of(matrix))
    column_norms = _pnorm_along_last(mags.T, p)
    return float(_pnorm_along_last(column_norms, q))


def coherence(basis, p) -> float:
    """The p-coherence: the largest column p-norm, kappa_p = ||.||_{p,inf}.

    kappa_2 is always 1 for an orthonormal basis; kappa_inf is the mutual
    coherence (largest entry magnitude).
    """
    return mixed_norm(basis, p, INF)


def coherence_bounds_check(basis, p):
    """Return (lower, kappa_p, upper) with the Holder bounds around kappa_p."""
    p = as_exponent(p)
    value = coherence(basis, p)
    n = _matrix_of(basis).shape[0]
    if p == Exponent(2):
        return 1.0, value, 1.0
    edge = float(n) ** float(p.reciprocal() - Exponent(2).reciprocal())
    if p < Exponent(2):
        return 1.0, value, edge
    return edge, value, 1.0


@dataclass(frozen=True)
class NormReport:
    """An operator-norm value or bound, with a witness when it is attained."""

    bound: float
    exact: bool
    witness: Signal | None
    formula: str


def _unit_spike(space: ValueSpace, n: int, vertex: int) -> Signal:
    coords = np.zeros((n, space.dim), dtype=space.field.dtype)
    coords[vertex - 1] = space.unit().coords
    return Signal(space, coords)


def _sgn(values: np.ndarray) -> np.ndarray:
    """z/|z| with sgn(0) = 0."""
    mags = np.abs(values)
    out = np.zeros_like(values)
    nz = mags > 0
    out[nz] = values[nz] / mags[nz]
    return out


def _profile_signal(space: ValueSpace, profile: np.ndarray) -> Signal:
    coords = profile[:, None] * space.unit().coords[None, :]
    return Signal(space, coords)


def sharpness_witness(basis: OrthonormalBasis, space: ValueSpace, p, q) -> Signal:
    """A nonzero signal attaining ||F||_{p->q} in the exact regimes.

    For q = inf: a spike at the entry maximizer (p = 1), the profile
    sgn(u_k*) |u_k*|^(p'/p) (1 < p < inf), or the sign profile (p = inf).
    For p = 1, q < inf: a spike at the row q-norm maximizer. Argmax ties
    break to the smallest (k, n) lexicographically.
    """
    p, q = as_exponent(p), as_exponent(q)
    space = _transform_space(space, basis)
    mat = basis.matrix
    n = basis.n
    if q.is_inf:
        if p == Exponent(1):
            # spike at n* where |u_k(n)| is maximal
            flat = np.abs(mat.T)  # (k, n): row-major argmax = lexicographic (k, n)
            _, n_star = np.unravel_index(int(flat.argmax()), flat.shape)
            return _unit_spike(space, n, int(n_star) + 1)
        if p.is_inf:
            col_norms = _pnorm_along_last(np.abs(mat.T), Exponent(1))
            k_star = int(col_norms.argmax())
            return _profile_signal(space, _sgn(mat[:, k_star]))
        pc = p.conjugate()
        col_norms = _pnorm_along_last(np.abs(mat.T), pc)
        k_star = int(col_norms.argmax())
        column = mat[:, k_star]
        exponent = float(pc.fraction / p.fraction)
        mags = np.abs(column)
        profile = _sgn(column) * np.where(mags > 0, mags**exponent, 0.0)
        return _profile_signal(space, profile)
    if p == Exponent(1):
        row_norms = _pnorm_along_last(np.abs(mat), q)
        n_star = int(row_norms.argmax())
        return _unit_spike(space, n, n_star + 1)
    raise NotExactRegime(f"no sharp witness for p={p}, q={q}")


def fourier_opnorm(basis: OrthonormalBasis, space: ValueSpace, p, q) -> NormReport:
    """The operator norm of the transform from L^p to L^q, exact or bounded."""
    p, q = as_exponent(p), as_exponent(q)
    if q.is_inf:
        bound = coherence(basis, p.conjugate())
        return NormReport(bound, True, sharpness_witness(basis, space, p, q),
                          "conjugate-coherence (p -> inf)")
    if p == Exponent(1):
        bound = coherence(basis.adjoint(), q)
        return NormReport(bound, True, sharpness_witness(basis, space, p, q),
                          "adjoint-coherence (1 -> q)")
    if p == Exponent(2) and q == Exponent(2) and space.hilbert_flag:
        witness = _unit_spike(_transform_space(space, basis), basis.n, 1)
        return NormReport(1.0, True, witness, "hilbert-isometry (2 -> 2)")
    bound = mixed_norm(basis, p.conjugate(), q)
    return NormReport(bound, False, None, "mixed-norm upper bound")


def _batch_signal_norms(space: ValueSpace, coords: np.ndarray, p: Exponent) -> np.ndarray:
    # coords (..., N, dim) -> (...,)
    return _pnorm_along_last(space.norms(coords), p)


def empirical_opnorm(basis: OrthonormalBasis, space: ValueSpace, p, q,
                     samples: int = 1000, seed: int = 0) -> float:
    """Empirical lower bound for ||F||_{p->q}: the best ratio over random
    signals plus a deterministic witness pool (spikes, sign profiles, power
    profiles, and the flat two-vector pair on two-dimensional spaces).

    Deterministic given the seed; never exceeds the theoretical bound.
    """
    p, q = as_exponent(p), as_exponent(q)
    if samples < 0:
        raise ValueError("samples must be >= 0")
    work_space = _transform_space(space, basis)
    mat = basis.matrix
    n = basis.n
    unit = work_space.unit().coords

    pool = []
    for vertex in range(n):  # spikes
        coords = np.zeros((n, work_space.dim), dtype=work_space.field.dtype)
        coords[vertex] = unit
        pool.append(coords)
    for k in range(n):  # sign profiles
        pool.append(_sgn(mat[:, k])[:, None] * unit[None, :])
    if not p.is_inf and p != Exponent(1):  # power profiles for 1 < p < inf
        exponent = float(p.conjugate().fraction / p.fraction)
        for k in range(n):
            mags = np.abs(mat[:, k])
            profile = _sgn(mat[:, k]) * np.where(mags > 0, mags**exponent, 0.0)
            pool.append(profile[:, None] * unit[None, :])
    if n == 2 and isinstance(work_space, FiniteDim) and work_space.dim == 2:
        # the flat pair ((1,1),(1,-1)); extremal for the sup-norm plane
        pool.append(np.array([[1.0, 1.0], [1.0, -1.0]], dtype=work_space.field.dtype))

    candidates = np.stack(pool)
    if samples:
        rng = np.random.default_rng(seed)
        random_coords = work_space.random_coords(rng, leading_shape=(samples, n))
        candidates = np.concatenate([candidates, random_coords.astype(candidates.dtype)])

    in_norms = _batch_signal_norms(work_space, candidates, p)
    out_coords = _forward_coords(mat, candidates)
    out_norms = _batch_signal_norms(work_space, out_coords, q)
    nonzero = in_norms > 0
    if not np.any(nonzero):
        return 0.0
    return float((out_norms[nonzero] / in_norms[nonzero]).max())


def uncertainty_bound(basis: OrthonormalBasis, variant: str, p=None, q=None) -> float:
    """Lower bound for a localization ratio of a signal and its transform.

    variant "p_to_inf": (||f||_p ||fhat||_p) / (||f||_inf ||fhat||_inf)
        >= 1 / (kappa_{p'}(U) kappa_{p'}(U*))
    variant "one_to_q":  (||f||_1 ||fhat||_1) / (||f||_q ||fhat||_q)
        >= 1 / (kappa_q(U) kappa_q(U*))
    variant "p_to_q":    (||f||_p ||fhat||_p) / (||f||_q ||fhat||_q)
        >= 1 / (||U||_{p',q} ||U*||_{p',q})
    """
    if variant not in UNCERTAINTY_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {UNCERTAINTY_VARIANTS}")
    adjoint = basis.adjoint()
    if variant == "p_to_inf":
        if p is None:
            raise ValueError("variant p_to_inf requires p")
        pc = as_exponent(p).conjugate()
        return 1.0 / (coherence(basis, pc) * coherence(adjoint, pc))
    if variant == "one_to_q":
        if q is None:
            raise ValueError("variant one_to_q requires q")
        q = as_exponent(q)
        return 1.0 / (coherence(basis, q) * coherence(adjoint, q))
    if p is None or q is None:
        raise ValueError("variant p_to_q requires both p and q")
    pc = as_exponent(p).conjugate()
    q = as_exponent(q)
    return 1.0 / (mixed_norm(basis, pc, q) * mixed_norm(adjoint, pc, q))


def uncertainty_ratio(f: Signal, basis: OrthonormalBasis, numerator_p, denominator_q) -> float:
    """(||f||_p ||fhat||_p) / (||f||_q ||fhat||_q) for a nonzero signal."""
    if f.is_zero():
        raise ZeroSignal("uncertainty ratio undefined for the zero signal")
    fhat = gft(f, basis)
    p, q = as_exponent(numerator_p), as_exponent(denominator_q)
    return (signal_norm(f, p) * signal_norm(fhat, p)) / (
        signal_norm(f, q) * signal_norm(fhat, q)
    )
