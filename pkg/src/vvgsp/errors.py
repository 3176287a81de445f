"""Exception types raised by the library."""


class GraphSignalError(Exception):
    """Base class for all library-specific errors."""


class SpaceMismatch(GraphSignalError):
    """Operation between elements or signals of different value spaces."""


class FieldMismatch(GraphSignalError):
    """Scalar or coordinate data incompatible with the space's scalar field."""


class NotHilbert(GraphSignalError):
    """Inner-product operation requested on a space without one."""


class DimensionMismatch(GraphSignalError):
    """Signal length does not match the basis dimension."""


class DirectedUnsupported(GraphSignalError):
    """Degree/Laplacian matrices are only defined here for undirected graphs."""


class IsolatedVertex(GraphSignalError):
    """Normalized Laplacian undefined: some vertex has degree zero."""


class UnsupportedDirected(GraphSignalError):
    """Directed variant not available for the requested graph family."""


class NotSymmetric(GraphSignalError):
    """Eigenbasis construction requires a real symmetric matrix."""


class NoConvergence(GraphSignalError):
    """Eigenvalue iteration failed to converge."""


class NotUnitary(GraphSignalError):
    """Matrix failed the orthonormality validation."""


class ExponentOrder(GraphSignalError):
    """Exponent pair violates the required strict ordering p < q."""


class NotExactRegime(GraphSignalError):
    """No sharp operator-norm witness is known for this (p, q) pair."""


class ZeroSignal(GraphSignalError):
    """A nonzero signal is required."""


class VertexOutOfRange(GraphSignalError):
    """Vertex index outside 1..N."""


class NotInvertible(GraphSignalError):
    """Translation operator is singular; carries the offending spectral indices."""

    def __init__(self, message, kernel_indices=()):
        super().__init__(message)
        self.kernel_indices = tuple(kernel_indices)
