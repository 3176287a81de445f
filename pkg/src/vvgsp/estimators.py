"""Scikit-learn compatible front end for the frequency transform.

``GraphFourierTransform`` derives an orthonormal basis from a graph's
adjacency matrix at fit time and then maps batches of scalar signals
(rows of X) to and from the frequency domain, so the transform composes
with pipelines and the wider estimator ecosystem.
"""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import bases, graphs
from .fourier import _forward_coords, _inverse_coords
from .validation import as_signal_matrix, as_square_matrix, graph_from_adjacency

_BASIS_MODES = ("adjacency", "laplacian", "normalized_laplacian", "dft")


class GraphFourierTransform(BaseEstimator, TransformerMixin):
    """Frequency transform of scalar graph signals over a fitted basis.

    Parameters
    ----------
    basis : str or array-like, default "laplacian"
        "adjacency", "laplacian" or "normalized_laplacian" eigendecompose the
        corresponding matrix of the undirected graph passed to fit;
        "dft" uses the normalized DFT basis (the eigenvectors of the directed
        cycle); an explicit square array is validated as a unitary matrix.
    unitarity_tol : float, default 1e-10
        Tolerance for validating explicit basis matrices.

    Attributes
    ----------
    basis_ : OrthonormalBasis
        The fitted orthonormal basis.
    eigenvalues_ : ndarray or None
        Ascending eigenvalues when the basis came from a matrix.
    """

    def __init__(self, basis="laplacian", unitarity_tol=1e-10):
        self.basis = basis
        self.unitarity_tol = unitarity_tol

    def fit(self, X, y=None):
        """Derive the basis from an adjacency matrix X (N x N, entries 0/1)."""
        if isinstance(self.basis, str):
            if self.basis not in _BASIS_MODES:
                raise ValueError(
                    f"basis must be one of {_BASIS_MODES} or an explicit matrix"
                )
            A = as_square_matrix(X, "adjacency")
            n = A.shape[0]
            if self.basis == "dft":
                fitted = bases.dft_basis(n)
            else:
                graph = graph_from_adjacency(A)
                matrix = {
                    "adjacency": graphs.adjacency,
                    "laplacian": graphs.laplacian,
                    "normalized_laplacian": graphs.normalized_laplacian,
                }[self.basis](graph)
                fitted = bases.eigenbasis(matrix)
        else:
            fitted = bases.from_matrix(self.basis, tol=self.unitarity_tol)
            if X is not None:
                n = as_square_matrix(X, "adjacency").shape[0]
                if n != fitted.n:
                    raise ValueError(
                        f"explicit basis is {fitted.n}x{fitted.n} but X has {n} vertices"
                    )
        self.basis_ = fitted
        self.eigenvalues_ = None if fitted.eigenvalues is None else fitted.eigenvalues.copy()
        self.n_features_in_ = fitted.n
        return self

    def transform(self, X):
        """Transform rows of X (n_signals, N) to frequency coefficients."""
        check_is_fitted(self, "basis_")
        arr = as_signal_matrix(X, self.n_features_in_)
        return _forward_coords(self.basis_.matrix, arr.T).T

    def inverse_transform(self, X):
        """Map frequency coefficients back to vertex-domain signals."""
        check_is_fitted(self, "basis_")
        arr = as_signal_matrix(X, self.n_features_in_)
        return _inverse_coords(self.basis_.matrix, arr.T).T
