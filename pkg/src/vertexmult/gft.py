"""Eigenvalue frequencies, increasing-frequency ordering, and the GFT.

An eigenvalue is written ``r * exp(-1j * w)`` with ``w`` in ``[0, 2pi)``.
With that sign the time-series ring gets the unitary DFT as its GFT and
the vertex multiplication of the ring comes out as ``diag(0, ..., n-1)``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFrequencies, ZeroModulusEigenvalue
from .graph import as_signal
from .spectral import (
    EPS_MOD,
    TWO_PI,
    SpectralDecomposition,
    condition_number,
    eigen_frequency,
)

EPS_FREQ = 1e-8
ZERO_POLICIES = ("error", "midpoint")
# moduli this close count as tied when picking an eigenvector's phase pivot
_PIVOT_TIE = 1e-12
# frequency gaps this close count as tied under the midpoint policy
_GAP_TIE = 1e-9


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """Strictly increasing frequencies in [0, 2pi) and their circular spacings.

    ``delta_omega[0]`` wraps around: ``omegas[0] - (omegas[-1] - 2pi)``.
    """

    omegas: np.ndarray
    permutation: np.ndarray
    delta_omega: np.ndarray

    @classmethod
    def from_omegas(cls, omegas, permutation=None):
        w = np.asarray(omegas, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("need at least one frequency")
        if np.any(w < 0) or np.any(w >= TWO_PI) or np.any(np.diff(w) <= 0):
            raise ValueError("frequencies must be strictly increasing in [0, 2pi)")
        delta = np.empty_like(w)
        delta[0] = w[0] - (w[-1] - TWO_PI)
        delta[1:] = np.diff(w)
        if permutation is None:
            permutation = np.arange(w.size)
        return cls(w, np.asarray(permutation, dtype=int), delta)

    @property
    def n(self):
        return self.omegas.size


@dataclass(frozen=True, eq=False)
class OrderedSpectrum:
    decomposition: SpectralDecomposition
    grid: FrequencyGrid
    magnitudes: np.ndarray
    policy: str = "error"
    # ordered positions whose frequency was assigned rather than measured
    assigned: tuple = ()

    @property
    def V(self):
        return self.decomposition.V

    @property
    def Vinv(self):
        return self.decomposition.Vinv

    @property
    def lambdas(self):
        return self.decomposition.lambdas

    @property
    def omegas(self):
        return self.grid.omegas

    @property
    def vcond(self):
        return self.decomposition.vcond

    @property
    def n(self):
        return self.grid.n

    def to_dict(self):
        return {
            "omegas": self.grid.omegas.tolist(),
            "r": self.magnitudes.tolist(),
            "permutation": self.grid.permutation.tolist(),
        }


def _assign_missing(omegas, missing):
    """Put each unassigned frequency at the midpoint of the widest circular gap
    among the frequencies assigned so far (ties: lowest starting frequency)."""
    omegas = omegas.copy()
    known = ~missing
    if not known.any():
        raise ZeroModulusEigenvalue(
            "every eigenvalue has zero modulus; no frequency to anchor on",
            indices=np.flatnonzero(missing),
        )
    for i in np.flatnonzero(missing):
        w = np.sort(omegas[known])
        gaps = np.append(np.diff(w), w[0] + TWO_PI - w[-1])
        k = int(np.flatnonzero(gaps >= gaps.max() - _GAP_TIE)[0])
        omegas[i] = (w[k] + gaps[k] / 2.0) % TWO_PI
        known[i] = True
    return omegas


def _phase_normalize(V):
    V = V.copy()
    for k in range(V.shape[1]):
        v = V[:, k]
        norm = np.linalg.norm(v)
        if abs(norm - 1.0) > 4 * np.finfo(float).eps:
            v = v / norm
        mod = np.abs(v)
        pivot = int(np.flatnonzero(mod >= mod.max() - _PIVOT_TIE)[0])
        m = mod[pivot]
        # componentwise so an already-real pivot gives a phase of exactly 1
        v = v * complex(v[pivot].real / m, -v[pivot].imag / m)
        v[pivot] = mod[pivot]
        V[:, k] = v
    return V


def order_and_normalize(d, eps_freq=EPS_FREQ, zero_policy="error", eps_mod=EPS_MOD):
    """Sort eigenpairs by increasing frequency and fix eigenvector scale/phase.

    Each eigenvector is scaled to unit norm and rotated so its largest-modulus
    entry (lowest index among ties) is real and positive.  ``zero_policy``
    decides what happens to eigenvalues with ``|lambda| <= eps_mod``:
    ``"error"`` raises, ``"midpoint"`` assigns them a frequency in the widest
    gap left by the others.
    """
    if zero_policy not in ZERO_POLICIES:
        raise ValueError(f"zero_policy must be one of {ZERO_POLICIES}")
    mags = np.abs(d.lambdas)
    missing = mags <= eps_mod
    if missing.any() and zero_policy == "error":
        raise ZeroModulusEigenvalue(
            "eigenvalue(s) with zero modulus have no frequency",
            indices=np.flatnonzero(missing),
        )
    omegas = np.array(
        [0.0 if z else eigen_frequency(lam, eps_mod) for lam, z in zip(d.lambdas, missing)]
    )
    if missing.any():
        omegas = _assign_missing(omegas, missing)

    perm = np.argsort(omegas, kind="stable")
    w = omegas[perm]
    gaps = np.append(np.diff(w), w[0] + TWO_PI - w[-1]) if w.size > 1 else np.array([TWO_PI])
    close = np.flatnonzero(gaps < eps_freq)
    if close.size:
        pairs = sorted({int(perm[i]) for i in close} | {int(perm[(i + 1) % w.size]) for i in close})
        raise DegenerateFrequencies(
            f"{close.size} frequency gap(s) below {eps_freq:g}; "
            "vertex multiplication needs distinct frequencies",
            indices=pairs,
        )

    V = _phase_normalize(d.V[:, perm])
    ordered = SpectralDecomposition(
        V=V,
        lambdas=d.lambdas[perm],
        Vinv=np.linalg.inv(V),
        residual=d.residual,
        vcond=condition_number(V),
    )
    return OrderedSpectrum(
        decomposition=ordered,
        grid=FrequencyGrid.from_omegas(w, perm),
        magnitudes=mags[perm],
        policy=zero_policy,
        assigned=tuple(int(i) for i in np.flatnonzero(missing[perm])),
    )


def gft(spectrum, x):
    """Spectral coefficients ``Vinv @ x``, in increasing-frequency order."""
    return spectrum.Vinv @ as_signal(x, spectrum.n)


def igft(spectrum, xt):
    return spectrum.V @ as_signal(xt, spectrum.n)
