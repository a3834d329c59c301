"""Vertex multiplication for graph signals.

The adjacency matrix ``A = V diag(lambda) V^-1`` of a graph defines a graph
Fourier transform ``x -> V^-1 x``.  Ordering its eigenvalues by frequency and
taking the periodic spectral derivative on that (irregular) frequency grid
gives, after conjugation back to the vertex domain, the vertex multiplication
matrix: the graph analogue of ``f(u) -> u f(u)``.  Its columns are coordinate
vectors of the vertices; their norms give scalar coordinates.
"""

from .duality import (
    SamplingGrid,
    VertexMultiplication,
    coordinates,
    differential_operator,
    dual_derivative,
    fourier_derivative,
    l1_coordinates,
    normalized_coordinates,
    vertex_multiplication,
    vm_apply,
)
from .errors import *  # noqa: F401,F403
from .gft import FrequencyGrid, OrderedSpectrum, gft, igft, order_and_normalize
from .graph import Graph, as_signal, cycle_graph, demo_graph, graph_from_edge_list, validate
from .io import load_graph, read_graph, save_graph
from .spectral import (
    SpectralDecomposition,
    branch_log,
    cyclic_shift_matrix,
    dft_matrix,
    eigen_frequency,
    log_cyclic_shift,
    matrix_exp,
    matrix_log_from_decomposition,
    spectral_decompose,
)

__version__ = "0.1.0"
