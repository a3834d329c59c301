"""Dense complex linear-algebra kernel.

Eigendecomposition with residual/conditioning checks, the branch-consistent
matrix logarithm, the cyclic shift and unitary DFT matrices, and a matrix
exponential that never touches an eigendecomposition (used as an oracle).
"""

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    InvalidSize,
    NonDiagonalizable,
    NumericalFailure,
    ZeroModulusEigenvalue,
)

EPS_MOD = 1e-10
VCOND_WARN = 1e10
VCOND_FAIL = 1e14
TWO_PI = 2.0 * np.pi


def as_matrix(a):
    """Return ``a`` as a finite square complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise InvalidSize(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NumericalFailure("matrix has non-finite entries")
    return m


def max_norm(a):
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """``A = V diag(lambdas) Vinv`` with unit-norm eigenvector columns."""

    V: np.ndarray
    lambdas: np.ndarray
    Vinv: np.ndarray
    residual: float
    vcond: float

    @property
    def n(self):
        return self.V.shape[0]


def _column_normalize(V):
    norms = np.linalg.norm(V, axis=0)
    if np.any(norms == 0):
        raise NonDiagonalizable("eigensolver returned a zero eigenvector")
    return V / norms


def condition_number(V):
    with np.errstate(all="ignore"):
        c = float(np.linalg.cond(V))
    return c if np.isfinite(c) else np.inf


def spectral_decompose(A, tol=1e-9):
    """Diagonalize ``A``; raise if no well-conditioned eigenbasis exists.

    Eigenvalue order is whatever the solver returns; ordering by frequency
    happens in :func:`vertexmult.gft.order_and_normalize`.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    A = as_matrix(A)
    # Real input goes through the real solver so real eigenvalues come back
    # with an exactly zero imaginary part (matters for the [0, 2pi) branch).
    work = A.real if not np.any(A.imag) else A
    try:
        lambdas, V = np.linalg.eig(work)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigensolver did not converge: {exc}") from exc
    lambdas = lambdas.astype(np.complex128)
    V = _column_normalize(V.astype(np.complex128))

    residual = max_norm(A @ V - V * lambdas)
    if residual > tol * (1.0 + max_norm(A)):
        raise NonDiagonalizable(f"eigen-residual {residual:.3e} exceeds tolerance")
    vcond = condition_number(V)
    if vcond > VCOND_FAIL:
        raise NonDiagonalizable(
            f"eigenvector matrix condition {vcond:.3e} > {VCOND_FAIL:.0e}; "
            "matrix is defective or nearly so"
        )
    if vcond > VCOND_WARN:
        warnings.warn(
            f"eigenvector matrix is ill-conditioned (cond {vcond:.3e})",
            RuntimeWarning,
            stacklevel=2,
        )
    Vinv = np.linalg.inv(V)
    return SpectralDecomposition(V, lambdas, Vinv, residual, vcond)


def eigen_frequency(lam, eps_mod=EPS_MOD):
    """Frequency of an eigenvalue: the unique w in [0, 2pi) with lam = |lam| e^{-jw}."""
    lam = complex(lam)
    if abs(lam) <= eps_mod:
        raise ZeroModulusEigenvalue(f"|lambda| = {abs(lam):.3e} has no argument")
    w = (-np.angle(lam)) % TWO_PI
    # -0.0 % 2pi and tiny negative angles can round up to exactly 2pi
    return 0.0 if w >= TWO_PI else float(w)


def branch_log(lam, eps_mod=EPS_MOD):
    """log(r e^{-jw}) = ln r - jw with w in [0, 2pi)."""
    return complex(np.log(abs(lam)), -eigen_frequency(lam, eps_mod))


def matrix_log_from_decomposition(d, eps_mod=EPS_MOD):
    small = np.flatnonzero(np.abs(d.lambdas) <= eps_mod)
    if small.size:
        raise ZeroModulusEigenvalue(
            "zero-modulus eigenvalue(s): log undefined", indices=small
        )
    logs = np.array([branch_log(lam, eps_mod) for lam in d.lambdas])
    return (d.V * logs) @ d.Vinv


def cyclic_shift_matrix(n):
    """Forward cyclic shift: ``(S x)[i] = x[i-1]``."""
    if n < 2:
        raise InvalidSize(f"cyclic shift needs n >= 2, got {n}")
    return np.roll(np.eye(n, dtype=np.complex128), 1, axis=0)


def dft_matrix(n):
    """Unitary DFT, entry (k, m) = exp(-2j pi k m / n) / sqrt(n)."""
    if n < 1:
        raise InvalidSize(f"DFT needs n >= 1, got {n}")
    km = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(-2j * np.pi * km / n) / np.sqrt(n)


def log_cyclic_shift(n):
    """Branch-consistent logarithm of the n-point cyclic shift.

    Circulant with eigenvalue -2j pi k / n on the k-th DFT mode; built from its
    first column so the result is exactly circulant.
    """
    if n < 2:
        raise InvalidSize(f"cyclic shift needs n >= 2, got {n}")
    col = np.fft.ifft(-2j * np.pi * np.arange(n) / n)
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return col[idx]


def matrix_exp(A):
    """Matrix exponential by Pade scaling-and-squaring (no eigendecomposition)."""
    A = as_matrix(A)
    with np.errstate(over="raise", invalid="raise"):
        try:
            E = scipy.linalg.expm(A)
        except FloatingPointError as exc:
            raise NumericalFailure(f"matrix exponential overflowed: {exc}") from exc
    if not np.all(np.isfinite(E)):
        raise NumericalFailure("matrix exponential overflowed")
    return E
