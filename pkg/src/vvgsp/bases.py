"""Orthonormal bases of K^N: eigenbases of symmetric matrices, the DFT
basis of the directed cycle, and validated user-supplied unitary matrices.

Convention: the matrix entry at row n, column k is u_k(n), i.e. columns are
the basis vectors (frequencies) and rows are indexed by vertices. Both
indices are 1-based on the accessor interface.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotSymmetric, NotUnitary
from .spaces import ScalarField

UNITARITY_TOL = 1e-10
SIGN_TOL = 1e-9


def _max_abs(a: np.ndarray) -> float:
    return float(np.abs(a).max()) if a.size else 0.0


def unitarity_defect(matrix: np.ndarray):
    """Worst entry deviation of U*U and UU* from the identity."""
    n = matrix.shape[0]
    eye = np.eye(n)
    left = matrix.conj().T @ matrix - eye
    right = matrix @ matrix.conj().T - eye
    dev = max(_max_abs(left), _max_abs(right))
    worst = np.unravel_index(np.abs(left).argmax(), left.shape) if left.size else (0, 0)
    return dev, (int(worst[0]) + 1, int(worst[1]) + 1)


@dataclass(frozen=True, eq=False)
class OrthonormalBasis:
    """An N x N unitary matrix together with optional source eigenvalues."""

    matrix: np.ndarray
    eigenvalues: np.ndarray | None = None

    def __post_init__(self):
        mat = np.asarray(self.matrix)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"basis matrix must be square, got shape {mat.shape}")
        dtype = np.complex128 if np.iscomplexobj(mat) else np.float64
        mat = np.ascontiguousarray(mat, dtype=dtype)
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)
        if self.eigenvalues is not None:
            ev = np.ascontiguousarray(self.eigenvalues, dtype=np.float64)
            ev.flags.writeable = False
            object.__setattr__(self, "eigenvalues", ev)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def field(self) -> ScalarField:
        return ScalarField.COMPLEX if np.iscomplexobj(self.matrix) else ScalarField.REAL

    def column(self, k: int) -> np.ndarray:
        """The basis vector u_k (1-based)."""
        return self.matrix[:, k - 1]

    def row(self, vertex: int) -> np.ndarray:
        """The row u(n) = (u_1(n), ..., u_N(n)) (1-based)."""
        return self.matrix[vertex - 1, :]

    def entry(self, vertex: int, k: int):
        """u_k(n), both indices 1-based."""
        return self.matrix[vertex - 1, k - 1]

    def adjoint(self) -> "OrthonormalBasis":
        """The basis whose matrix is the conjugate transpose; involutive."""
        return OrthonormalBasis(self.matrix.conj().T)


def _validate_unitary(matrix: np.ndarray, tol: float):
    dev, worst = unitarity_defect(matrix)
    if dev > tol:
        raise NotUnitary(
            f"matrix is not unitary: max deviation {dev:.3e} at entry {worst} exceeds {tol:.1e}"
        )


def from_matrix(matrix, tol: float = UNITARITY_TOL) -> OrthonormalBasis:
    """Validate an arbitrary square matrix as an orthonormal basis."""
    mat = np.asarray(matrix, dtype=np.complex128 if np.iscomplexobj(np.asarray(matrix)) else np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise NotUnitary(f"expected a square matrix, got shape {mat.shape}")
    _validate_unitary(mat, tol)
    return OrthonormalBasis(mat)


def identity_basis(n: int) -> OrthonormalBasis:
    return OrthonormalBasis(np.eye(n))


def dft_basis(n: int) -> OrthonormalBasis:
    """The normalized DFT basis u_k(n) = exp(2 pi i (n-1)(k-1) / N) / sqrt(N).

    These are the eigenvectors of the directed cycle's adjacency matrix; all
    entries have magnitude N^(-1/2), the minimum possible coherence.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    idx = np.arange(n)
    mat = np.exp((2j * np.pi / n) * np.outer(idx, idx)) / np.sqrt(n)
    basis = OrthonormalBasis(mat)
    _validate_unitary(basis.matrix, UNITARITY_TOL)
    return basis


def eigenbasis(matrix, symmetry_tol: float = 1e-12) -> OrthonormalBasis:
    """Orthonormal eigenbasis of a real symmetric matrix.

    Columns are ordered by ascending eigenvalue. Sign convention: the first
    entry of each eigenvector with magnitude above 1e-9 is made positive.
    """
    mat = np.asarray(matrix)
    if np.iscomplexobj(mat):
        if np.any(mat.imag != 0):
            raise NotSymmetric("expected a real matrix")
        mat = mat.real
    mat = mat.astype(np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {mat.shape}")
    defect = _max_abs(mat - mat.T)
    if defect > symmetry_tol:
        raise NotSymmetric(f"matrix deviates from symmetry by {defect:.3e}")
    try:
        eigvals, eigvecs = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    for k in range(eigvecs.shape[1]):
        col = eigvecs[:, k]
        nz = np.flatnonzero(np.abs(col) > SIGN_TOL)
        if nz.size and col[nz[0]] < 0:
            eigvecs[:, k] = -col
    basis = OrthonormalBasis(eigvecs, eigenvalues=eigvals)
    _validate_unitary(basis.matrix, UNITARITY_TOL)
    return basis
