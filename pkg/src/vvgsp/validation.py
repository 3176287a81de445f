"""Input validation helpers shared by the estimator API and the CLI."""
from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .graphs import Graph


def as_square_matrix(X, name: str = "X") -> np.ndarray:
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {arr.shape}")
    return arr


def as_signal_matrix(X, n: int, name: str = "X") -> np.ndarray:
    """Coerce to a 2-D (n_signals, N) array of real or complex scalars."""
    arr = np.asarray(X)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 1- or 2-dimensional, got shape {arr.shape}")
    if arr.shape[1] != n:
        raise DimensionMismatch(f"{name} has {arr.shape[1]} columns, expected {n}")
    if not np.iscomplexobj(arr):
        arr = arr.astype(np.float64)
    return arr


def graph_from_adjacency(A) -> Graph:
    """Build a Graph from a 0/1 adjacency matrix (validates the encoding)."""
    arr = as_square_matrix(A, "adjacency")
    if np.iscomplexobj(arr):
        raise ValueError("adjacency matrix must be real")
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError("adjacency matrix entries must be 0 or 1 (weighted graphs unsupported)")
    if np.any(np.diag(arr) != 0):
        raise ValueError("adjacency matrix must have a zero diagonal (no loops)")
    directed = bool(np.any(arr != arr.T))
    idx = np.argwhere(arr == 1)
    edges = frozenset((int(i) + 1, int(j) + 1) for i, j in idx)
    return Graph(arr.shape[0], edges, directed=directed)
