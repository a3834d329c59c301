"""Graph and graph-signal model, demo graphs, and structural diagnostics.

Adjacency convention: ``adjacency[i, j]`` is the weight feeding vertex ``i``
from vertex ``j``, so an edge ``src -> dst`` lands at ``[dst, src]`` and the
directed cycle ``0 -> 1 -> ... -> n-1 -> 0`` is exactly the cyclic shift.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateEdge,
    IndexOutOfRange,
    InvalidSize,
    NonFiniteWeight,
    UnknownKind,
)
from .spectral import cyclic_shift_matrix

DEMO_KINDS = ("G1", "G2", "G3")


@dataclass(frozen=True, eq=False)
class Graph:
    adjacency: np.ndarray

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"adjacency must be square, got shape {a.shape}")
        if a.shape[0] < 2:
            raise InvalidSize(f"graph needs n >= 2 vertices, got {a.shape[0]}")
        bad = np.argwhere(~np.isfinite(a))
        if bad.size:
            raise NonFiniteWeight(
                f"non-finite adjacency entry at {tuple(bad[0])}", indices=bad[0]
            )
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self):
        return self.adjacency.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash(self.adjacency.tobytes())

    def __repr__(self):
        return f"Graph(n={self.n}, nnz={np.count_nonzero(self.adjacency)})"


def as_signal(x, n):
    """Validate a graph signal of length ``n`` and return it as complex128."""
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] != n:
        raise DimensionMismatch(f"signal must have length {n}, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteWeight("signal has non-finite entries")
    return v


def graph_from_edge_list(n, edges):
    """Build a graph from ``(src, dst, weight)`` triples; edge src -> dst feeds dst."""
    if n < 2:
        raise InvalidSize(f"graph needs n >= 2 vertices, got {n}")
    a = np.zeros((n, n), dtype=np.complex128)
    seen = set()
    for k, (src, dst, weight) in enumerate(edges):
        if not (0 <= src < n and 0 <= dst < n):
            raise IndexOutOfRange(
                f"edge {k}: ({src}, {dst}) outside [0, {n})", indices=[k]
            )
        if (src, dst) in seen:
            raise DuplicateEdge(f"edge {k}: duplicate ({src}, {dst})", indices=[k])
        w = complex(weight)
        if not np.isfinite(w):
            raise NonFiniteWeight(f"edge {k}: weight {weight!r}", indices=[k])
        seen.add((src, dst))
        a[dst, src] = w
    return Graph(a)


def cycle_graph(n):
    return Graph(cyclic_shift_matrix(n))


def demo_graph(kind, n=8):
    """The three example graphs: time series ring, ring plus chord 0 -> 2, and
    the circulant with links i -> i+1 and i -> i+2 (mod n)."""
    kind = str(kind).upper()
    if kind not in DEMO_KINDS:
        raise UnknownKind(f"unknown demo graph {kind!r}; choose from {DEMO_KINDS}")
    minimum = {"G1": 2, "G2": 3, "G3": 4}[kind]
    if n < minimum:
        raise InvalidSize(f"{kind} needs n >= {minimum}, got {n}")
    s = cyclic_shift_matrix(n)
    if kind == "G1":
        return Graph(s)
    if kind == "G2":
        a = s.copy()
        a[2, 0] = 1.0
        return Graph(a)
    return Graph(s + s @ s)


def validate(graph):
    """Structural diagnostics; never raises and never mutates."""
    a = graph.adjacency
    nz = a != 0
    zero_rows = np.flatnonzero(~nz.any(axis=1))
    zero_cols = np.flatnonzero(~nz.any(axis=0))
    mags = np.abs(a[nz])
    return {
        "n": graph.n,
        "symmetric": bool(np.array_equal(a, a.T)),
        "hermitian": bool(np.array_equal(a, a.conj().T)),
        "complex": bool(np.any(a.imag)),
        "nnz": int(nz.sum()),
        "self_loops": [int(i) for i in np.flatnonzero(np.diag(nz))],
        "zero_rows": [int(i) for i in zero_rows],
        "zero_cols": [int(i) for i in zero_cols],
        "isolated": [int(i) for i in np.intersect1d(zero_rows, zero_cols)],
        "max_abs": float(mags.max()) if mags.size else 0.0,
        "min_abs_nonzero": float(mags.min()) if mags.size else 0.0,
    }
