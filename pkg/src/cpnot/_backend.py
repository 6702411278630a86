"""Kernel backend selection and array-shaping shims.

The compiled Cython extension is preferred when it was built; otherwise the
vectorized numpy fallback is used.  Set the environment variable
``CPNOT_DISABLE_EXTENSION`` (to any non-empty value) before import to force
the fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .sequences import PulseSequence
from .su2 import pulse_gate

if os.environ.get("CPNOT_DISABLE_EXTENSION"):
    from . import _kernels_py as _impl

    BACKEND = "numpy"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "numpy"

__all__ = ["BACKEND", "sequence_propagators", "sequence_fidelities", "not_gate_target"]


def not_gate_target() -> np.ndarray:
    """The target gate used throughout: a pi rotation about the x-axis."""
    return pulse_gate(math.pi, 0.0)


def _as_points(eps, f) -> tuple[np.ndarray, np.ndarray]:
    eps = np.ascontiguousarray(np.atleast_1d(eps), dtype=np.float64)
    f = np.ascontiguousarray(np.atleast_1d(f), dtype=np.float64)
    if eps.shape != f.shape:
        eps, f = np.broadcast_arrays(eps, f)
        eps = np.ascontiguousarray(eps)
        f = np.ascontiguousarray(f)
    return eps.ravel(), f.ravel()


def _seq_arrays(seq: PulseSequence) -> tuple[np.ndarray, np.ndarray]:
    return (
        np.ascontiguousarray(seq.thetas, dtype=np.float64),
        np.ascontiguousarray(seq.phis, dtype=np.float64),
    )


def sequence_propagators(seq: PulseSequence, eps, f) -> np.ndarray:
    """Batch of errored propagators, shape (m, 2, 2)."""
    thetas, phis = _seq_arrays(seq)
    e, ff = _as_points(eps, f)
    return _impl.propagators(thetas, phis, e, ff)


def sequence_fidelities(seq: PulseSequence, eps, f, target: np.ndarray | None = None) -> np.ndarray:
    """Batch of fidelities against ``target`` (default: the ideal NOT gate)."""
    thetas, phis = _seq_arrays(seq)
    e, ff = _as_points(eps, f)
    if target is None:
        target = not_gate_target()
    target = np.ascontiguousarray(target, dtype=np.complex128)
    return _impl.fidelities(thetas, phis, e, ff, target)
