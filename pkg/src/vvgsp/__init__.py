"""Graph signal processing for vector-valued signals.

Signals on a finite graph take values in a pluggable normed space (finite
dimensional p-norm spaces or sampled function spaces). The library provides
the frequency transform over arbitrary orthonormal bases, exact operator
norms with extremal witnesses, mixed-norm and coherence computations,
uncertainty lower bounds, and the convolution/translation operator algebra.
"""

__version__ = "0.1.0"

from .bases import OrthonormalBasis, dft_basis, eigenbasis, from_matrix, identity_basis
from .errors import (DimensionMismatch, DirectedUnsupported, ExponentOrder,
                     FieldMismatch, GraphSignalError, IsolatedVertex,
                     NoConvergence, NotExactRegime, NotHilbert, NotInvertible,
                     NotSymmetric, NotUnitary, SpaceMismatch,
                     UnsupportedDirected, VertexOutOfRange, ZeroSignal)
from .estimators import GraphFourierTransform
from .exponents import INF, Exponent, as_exponent
from .fourier import (Signal, gft, igft, parseval_check, signal_from_elements,
                      signal_inner, zero_signal)
from .graphs import (Graph, adjacency, complete_graph, cycle_graph,
                     degree_matrix, laplacian, normalized_laplacian,
                     path_graph, standard_graph, star_graph)
from .norms import (NormReport, coherence, coherence_bounds_check,
                    empirical_opnorm, fourier_opnorm, holder_embedding_check,
                    mixed_norm, sharpness_witness, signal_norm,
                    uncertainty_bound, uncertainty_ratio)
from .operators import (TranslationAnalysis, analyze_translation, convolve,
                        convolution_identity, delta, kernel_range_projectors,
                        scalar_signal, translate, translation_adjoint,
                        translation_inverse, translation_opnorm_hilbert,
                        young_bound)
from .spaces import (FiniteDim, SampledFunction, ScalarField, ValueElement,
                     ValueSpace, check_parallelogram,
                     find_parallelogram_violation)

__all__ = [name for name in dir() if not name.startswith("_")]
