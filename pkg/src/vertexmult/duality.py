"""Differential operators on periodic samples and vertex multiplication.

``differential_operator`` is the derivative on an irregular periodic grid,
``-diag(delta)^-1 log S``.  The same construction on the ordered frequency
grid of a graph, rotated by ``j``, gives the dual derivative; conjugating it
back to the vertex domain with the graph Fourier basis gives the vertex
multiplication matrix ``U = Vinv @ dual_derivative @ V``.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateRange, IllConditioned, InvalidGrid, NumericalFailure
from .gft import EPS_FREQ, order_and_normalize
from .graph import Graph, as_signal
from .spectral import (
    VCOND_FAIL,
    cyclic_shift_matrix,
    log_cyclic_shift,
    spectral_decompose,
)

ZERO_FREQ_POLICIES = ("error", "midpoint", "perturb")
PERTURB_EPS = 1e-3
NORMS = {"l1": 1, "l2": 2, "linf": np.inf}


@dataclass(frozen=True, eq=False)
class SamplingGrid:
    points: np.ndarray
    period: float
    delta: np.ndarray

    @classmethod
    def from_points(cls, points, period):
        t = np.asarray(points, dtype=float)
        period = float(period)
        if not (np.isfinite(period) and period > 0):
            raise InvalidGrid(f"period must be positive and finite, got {period}")
        if t.ndim != 1 or t.size < 2:
            raise InvalidGrid("need at least two sample points")
        bad = np.flatnonzero(~np.isfinite(t) | (t < 0) | (t >= period))
        if bad.size:
            raise InvalidGrid(f"sample point outside [0, {period:g})", indices=bad)
        bad = np.flatnonzero(np.diff(t) <= 0)
        if bad.size:
            raise InvalidGrid("sample points must be strictly increasing", indices=bad + 1)
        delta = np.empty_like(t)
        delta[0] = t[0] - (t[-1] - period)
        delta[1:] = np.diff(t)
        return cls(t, period, delta)

    @classmethod
    def uniform(cls, n, period=2 * np.pi):
        return cls.from_points(period * np.arange(n) / n, period)

    @property
    def n(self):
        return self.points.size


def differential_operator(grid):
    """Derivative matrix on periodic samples: exp(-diag(delta) @ D) is the shift."""
    return -log_cyclic_shift(grid.n) / grid.delta[:, None]


def fourier_derivative(freqs):
    return -log_cyclic_shift(freqs.n) / freqs.delta_omega[:, None]


def dual_derivative(freqs):
    """``1j * diag(delta_omega)^-1 @ log S``, i.e. ``-1j * fourier_derivative``."""
    return 1j * log_cyclic_shift(freqs.n) / freqs.delta_omega[:, None]


@dataclass(frozen=True, eq=False)
class VertexMultiplication:
    matrix: np.ndarray
    spectrum: object
    policy: str = "error"
    source: str = ""
    extras: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.matrix.shape[0]

    @property
    def is_paper(self):
        """False under the zero-modulus workarounds, which go beyond the plain construction."""
        return self.policy == "error"

    def coordinate_vector(self, i):
        return self.matrix[:, i]

    @property
    def columns(self):
        return [self.matrix[:, i] for i in range(self.n)]


def vertex_multiplication(
    graph,
    eps_freq=EPS_FREQ,
    tol=1e-9,
    zero_freq_policy="error",
    perturb_eps=PERTURB_EPS,
    cond_fail=VCOND_FAIL,
):
    """Vertex multiplication matrix of ``graph``.

    ``zero_freq_policy`` handles eigenvalues of zero modulus, whose frequency
    is undefined: ``"error"`` raises, ``"midpoint"`` places them in the widest
    frequency gap, ``"perturb"`` decomposes ``A + perturb_eps * S`` instead.
    The last two are workarounds and are flagged via ``is_paper``.
    """
    if zero_freq_policy not in ZERO_FREQ_POLICIES:
        raise ValueError(f"zero_freq_policy must be one of {ZERO_FREQ_POLICIES}")
    if not isinstance(graph, Graph):
        graph = Graph(graph)
    a = graph.adjacency
    extras = {}
    if zero_freq_policy == "perturb":
        d0 = spectral_decompose(a, tol)
        extras["zero_modulus"] = bool(np.any(np.abs(d0.lambdas) <= 1e-10))
        extras["perturb_eps"] = perturb_eps
        a = a + perturb_eps * cyclic_shift_matrix(graph.n)
        spectrum = order_and_normalize(spectral_decompose(a, tol), eps_freq)
    else:
        spectrum = order_and_normalize(
            spectral_decompose(a, tol), eps_freq, zero_policy=zero_freq_policy
        )
        extras["zero_modulus"] = bool(spectrum.assigned)
    if spectrum.vcond > cond_fail:
        raise IllConditioned(
            f"eigenvector condition {spectrum.vcond:.3e} exceeds {cond_fail:.0e}"
        )
    u = spectrum.Vinv @ dual_derivative(spectrum.grid) @ spectrum.V
    source = f"n={graph.n} zero_freq_policy={zero_freq_policy}"
    return VertexMultiplication(u, spectrum, zero_freq_policy, source, extras)


def vm_apply(vm, x):
    """``U @ x``, cross-checked against the sum of coordinate vectors ``sum_i x_i u_i``."""
    x = as_signal(x, vm.n)
    y = vm.matrix @ x
    acc = np.zeros(vm.n, dtype=np.complex128)
    for i in range(vm.n):
        acc += x[i] * vm.matrix[:, i]
    scale = max(1.0, float(np.max(np.abs(vm.matrix) @ np.abs(x))))
    if np.max(np.abs(y - acc)) > 1e-12 * scale:
        raise NumericalFailure("matrix product and coordinate-vector sum disagree")
    return y


def coordinates(vm, norm="l1"):
    """Scalar vertex coordinates: the ``norm`` of each coordinate vector."""
    if norm not in NORMS:
        raise ValueError(f"norm must be one of {tuple(NORMS)}")
    return np.linalg.norm(vm.matrix, ord=NORMS[norm], axis=0)


def l1_coordinates(vm):
    return np.abs(vm.matrix).sum(axis=0)


def normalized_coordinates(coords):
    """Affine map of ``coords`` onto ``[0, n-1]`` (min -> 0, max -> n-1)."""
    c = np.asarray(coords, dtype=float)
    lo, hi = c.min(), c.max()
    if hi - lo <= 1e-12 * max(1.0, abs(hi)):
        raise DegenerateRange(f"coordinates span no range (min = max = {hi:.17g})")
    return (c.size - 1) * (c - lo) / (hi - lo)
