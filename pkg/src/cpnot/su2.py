"""Exact arithmetic for 2x2 unitary propagators.

Gates are plain ``numpy`` arrays of shape (2, 2) and dtype complex128.  A
rotation by angle ``theta`` about an axis in the xy-plane at azimuth ``phi``
has the propagator

    cos(theta/2) * I - 1j * sin(theta/2) * (cos(phi) sx + sin(phi) sy)

and sequences of such propagators act with time running right to left:
the gate executed first sits rightmost in a matrix product.

All comparisons of gates in this package go through
:func:`equal_up_to_global_phase`; global phases are physically meaningless
and are never silently stripped.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "IDENTITY",
    "AxisAngle",
    "pulse_gate",
    "z_gate",
    "compose",
    "fidelity",
    "axis_angle",
    "equal_up_to_global_phase",
    "is_unitary",
]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

#: Max-norm tolerance for unitarity checks.
UNITARY_TOL = 1e-12


class AxisAngle(NamedTuple):
    """Canonical axis-angle decomposition of a 2x2 unitary.

    ``theta`` is reduced to [0, pi] (the representative with the smaller
    rotation angle); the axis is a unit 3-vector.  The identity decomposes
    to ``theta=0`` with the fixed axis (0, 0, 1).
    """

    theta: float
    axis: tuple[float, float, float]


def _require_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


def pulse_gate(theta: float, phi: float) -> np.ndarray:
    """Propagator of a rotation by ``theta`` about the in-plane axis at azimuth ``phi``.

    Parameters
    ----------
    theta : float
        Rotation angle in radians.
    phi : float
        Azimuth of the rotation axis in the xy-plane, radians.

    Returns
    -------
    numpy.ndarray
        2x2 complex unitary.
    """
    _require_finite(theta=theta, phi=phi)
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    e = cmath.exp(-1j * phi)
    return np.array([[c, -1j * s * e], [-1j * s / e, c]], dtype=complex)


def z_gate(alpha: float) -> np.ndarray:
    """Propagator of a rotation by ``alpha`` about the z-axis: diag(e^{-ia/2}, e^{+ia/2})."""
    _require_finite(alpha=alpha)
    half = cmath.exp(-0.5j * alpha)
    return np.array([[half, 0], [0, 1.0 / half]], dtype=complex)


def compose(later: np.ndarray, earlier: np.ndarray) -> np.ndarray:
    """Matrix product ``later @ earlier``: ``earlier`` acts first in time."""
    return later @ earlier


def fidelity(target: np.ndarray, actual: np.ndarray) -> float:
    """Propagator fidelity |tr(U^dag V)| / tr(U^dag U) for 2x2 unitaries.

    Insensitive to global phases of either argument; the result is clipped
    into [0, 1] to absorb roundoff.  Infidelity is ``1 - fidelity``.
    """
    overlap = np.trace(target.conj().T @ actual)
    return float(min(1.0, abs(overlap) / 2.0))


def is_unitary(g: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    """True when max-norm(G^dag G - I) <= tol and |det G| = 1 within tol."""
    defect = np.max(np.abs(g.conj().T @ g - IDENTITY))
    det = g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]
    return bool(defect <= tol and abs(abs(det) - 1.0) <= tol)


def axis_angle(g: np.ndarray) -> AxisAngle:
    """Decompose a unitary as a rotation: g = (phase) * exp(-1j*theta/2 * axis.sigma).

    The global phase is discarded.  ``theta`` is returned in [0, pi]; at
    theta = pi, where axis and -axis describe the same rotation, the sign is
    fixed by making the largest-magnitude axis component positive.
    """
    det = g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]
    gs = g / cmath.sqrt(det)
    tr_half = 0.5 * (gs[0, 0] + gs[1, 1]).real
    # v = sin(theta/2) * axis, read off the Pauli components
    vx = -0.5 * (gs[0, 1].imag + gs[1, 0].imag)
    vy = 0.5 * (gs[1, 0].real - gs[0, 1].real)
    vz = 0.5 * (gs[1, 1].imag - gs[0, 0].imag)
    if tr_half < 0.0:
        tr_half, vx, vy, vz = -tr_half, -vx, -vy, -vz
    norm = math.sqrt(vx * vx + vy * vy + vz * vz)
    # atan2 keeps full precision near the identity, where acos of the
    # trace would round the angle away entirely
    theta = 2.0 * math.atan2(norm, tr_half)
    if norm < 1e-14:
        return AxisAngle(theta, (0.0, 0.0, 1.0))
    nx, ny, nz = vx / norm, vy / norm, vz / norm
    if abs(theta - math.pi) < 1e-12:
        # theta = pi: rotation about n equals rotation about -n
        biggest = max((abs(nx), nx), (abs(ny), ny), (abs(nz), nz))[1]
        if biggest < 0.0:
            nx, ny, nz = -nx, -ny, -nz
    return AxisAngle(theta, (nx, ny, nz))


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-12) -> bool:
    """True when a = c*b for some unit-modulus scalar c, within max-norm ``tol``.

    The phase is read off the largest-magnitude entry of ``b`` (for a
    unitary that entry has magnitude >= 1/sqrt(2), so this is stable).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    idx = int(np.argmax(np.abs(b)))
    bij = b.flat[idx]
    aij = a.flat[idx]
    if abs(aij) <= tol:
        return False
    c = aij / bij
    c /= abs(c)
    return bool(np.max(np.abs(a - c * b)) <= tol)
