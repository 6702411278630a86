"""Pure-python (vectorized numpy) kernels for batched sequence evaluation.

Mirrors the API of the compiled extension ``cpnot._kernels``; one of the two
is selected at import time by :mod:`cpnot._backend`.  Both kernels evaluate
the same closed-form errored gate as :func:`cpnot.errors.errored_gate` and
accumulate the product with the last executed pulse leftmost.
"""

from __future__ import annotations

import numpy as np


def propagators(
    thetas: np.ndarray, phis: np.ndarray, eps: np.ndarray, f: np.ndarray
) -> np.ndarray:
    """Errored sequence propagators at a batch of error points.

    Parameters
    ----------
    thetas, phis : (n,) float64
        Pulse angles and phases in execution order.
    eps, f : (m,) float64
        Error coordinates, one pair per point.

    Returns
    -------
    (m, 2, 2) complex128 array of propagators.
    """
    m = eps.shape[0]
    o00 = np.ones(m, dtype=complex)
    o01 = np.zeros(m, dtype=complex)
    o10 = np.zeros(m, dtype=complex)
    o11 = np.ones(m, dtype=complex)
    root = np.sqrt(1.0 + f * f)
    scale = (1.0 + eps) * root
    for theta, phi in zip(thetas, phis):
        a = 0.5 * theta * scale
        c = np.cos(a)
        s = np.sin(a) / root
        cp = np.cos(phi)
        sp = np.sin(phi)
        g00 = c - 1j * (s * f)
        g01 = -s * sp - 1j * (s * cp)
        g10 = s * sp - 1j * (s * cp)
        g11 = c + 1j * (s * f)
        n00 = g00 * o00 + g01 * o10
        n01 = g00 * o01 + g01 * o11
        n10 = g10 * o00 + g11 * o10
        n11 = g10 * o01 + g11 * o11
        o00, o01, o10, o11 = n00, n01, n10, n11
    out = np.empty((m, 2, 2), dtype=complex)
    out[:, 0, 0] = o00
    out[:, 0, 1] = o01
    out[:, 1, 0] = o10
    out[:, 1, 1] = o11
    return out


def fidelities(
    thetas: np.ndarray,
    phis: np.ndarray,
    eps: np.ndarray,
    f: np.ndarray,
    target: np.ndarray,
) -> np.ndarray:
    """Propagator fidelity against ``target`` at a batch of error points."""
    props = propagators(thetas, phis, eps, f)
    tc = target.conj()
    tr = (
        tc[0, 0] * props[:, 0, 0]
        + tc[0, 1] * props[:, 0, 1]
        + tc[1, 0] * props[:, 1, 0]
        + tc[1, 1] * props[:, 1, 1]
    )
    return np.minimum(1.0, np.abs(tr) * 0.5)
