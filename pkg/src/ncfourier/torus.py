"""Trigonometric profiles on a discretized circle.

The circle is sampled at M equispaced points t_j = j / M.  A real cosine
polynomial sum_f amp_f cos(2 pi f t) of degree < M/2 is represented exactly
by its sample values (no aliasing), synthesized with one inverse FFT, and
its L_p norms against normalized Lebesgue measure are plain Riemann sums,
which are exact in the same degree range for p = 2.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError

__all__ = ["cosine_profile", "riemann_lp"]


def cosine_profile(m: int, freqs, amps) -> np.ndarray:
    """Sample values of sum_k amps[k] * cos(2 pi freqs[k] t) on the M-point grid.

    Frequencies must be distinct nonnegative integers below M/2 so the
    samples determine the polynomial.
    """
    freqs = np.asarray(freqs, dtype=int).ravel()
    amps = np.asarray(amps, dtype=float).ravel()
    if freqs.shape != amps.shape:
        raise ParameterError("freqs and amps must have matching length")
    if m < 2:
        raise ParameterError(f"grid size must be at least 2, got {m}")
    if freqs.size and (freqs.min() < 0 or 2 * freqs.max() >= m):
        raise ParameterError(
            f"frequencies must lie in [0, M/2) = [0, {m / 2:g}); the grid is too "
            "coarse for this profile"
        )
    if np.unique(freqs).size != freqs.size:
        raise ParameterError("frequencies must be distinct")
    spectrum = np.zeros(m, dtype=complex)
    for f, a in zip(freqs, amps):
        if f == 0:
            spectrum[0] += a * m
        else:
            spectrum[f] += 0.5 * a * m
            spectrum[m - f] += 0.5 * a * m
    return np.fft.ifft(spectrum).real


def riemann_lp(values: np.ndarray, p: float) -> float:
    """L_p norm against normalized counting measure on the sample grid."""
    values = np.asarray(values, dtype=float).ravel()
    if not p > 0:
        raise ParameterError(f"p must be positive, got {p}")
    if np.isinf(p):
        return float(np.max(np.abs(values)))
    return float(np.mean(np.abs(values) ** p) ** (1.0 / p))
