"""Errored propagators for pulse-strength and off-resonance errors.

Two systematic error channels are modeled:

* pulse-strength error ``epsilon``: every rotation angle is scaled by
  (1 + epsilon);
* off-resonance fraction ``f``: the rotation axis is tilted out of the
  xy-plane by adding ``f * sigma_z`` to the generator, which also stretches
  the rotation angle by sqrt(1 + f^2).

The combined propagator is evaluated in closed form as the rotation by
(1 + epsilon) * theta * sqrt(1 + f^2) about the unit axis
(cos phi, sin phi, f) / sqrt(1 + f^2); no Trotterization is involved, so
every errored gate is exactly unitary.  With both errors active the
pulse-strength scaling applies to the whole generator (the offset term is
present while the drive runs); the model reduces exactly to the single-error
forms on each axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import UnsupportedSequenceError
from .sequences import Pulse, PulseSequence
from .su2 import IDENTITY, compose, pulse_gate

__all__ = [
    "ErrorPoint",
    "errored_gate",
    "sequence_propagator",
    "first_order_ore_factor",
    "second_order_ore_factors",
]


@dataclass(frozen=True)
class ErrorPoint:
    """A point in error space: fractional pulse-strength error and off-resonance fraction."""

    epsilon: float = 0.0
    f: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.epsilon) and math.isfinite(self.f)):
            raise ValueError("error parameters must be finite")


def errored_gate(pulse: Pulse, e: ErrorPoint) -> np.ndarray:
    """Closed-form propagator of a single pulse under both error channels."""
    root = math.sqrt(1.0 + e.f * e.f)
    angle = (1.0 + e.epsilon) * pulse.theta * root
    c = math.cos(0.5 * angle)
    s = math.sin(0.5 * angle) / root
    ephase = cmath.exp(-1j * pulse.phi)
    return np.array(
        [
            [c - 1j * s * e.f, -1j * s * ephase],
            [-1j * s / ephase, c + 1j * s * e.f],
        ],
        dtype=complex,
    )


def sequence_propagator(seq: PulseSequence, e: ErrorPoint) -> np.ndarray:
    """Product of errored gates over the sequence, last executed leftmost.

    This is the scalar reference path; batched evaluation over many error
    points goes through :mod:`cpnot._backend`.
    """
    g = IDENTITY
    for p in seq.pulses:
        g = compose(errored_gate(p, e), g)
    return g


def first_order_ore_factor(pulse: Pulse, f: float) -> tuple[np.ndarray, np.ndarray]:
    """First-order factorization of an off-resonant pi pulse.

    Returns the pair (ideal pi gate, small rotation by 2f at phase
    phi + pi/2) whose product reproduces the errored gate up to O(f^2).
    Only used to validate the series machinery.
    """
    if not pulse.is_pi:
        raise UnsupportedSequenceError("first_order_ore_factor requires a pi pulse")
    ideal = pulse_gate(pulse.theta, pulse.phi)
    lam = pulse_gate(2.0 * f, pulse.phi + 0.5 * math.pi)
    return ideal, lam


def second_order_ore_factors(
    pulse: Pulse, f: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Second-order refinement: (pi gate, lambda at phi + pi/2, mu at phi).

    mu = pi * f^2 / 2; the ordered product pi * lambda * mu leaves an
    O(f^3) residual against the exact errored gate.
    """
    ideal, lam = first_order_ore_factor(pulse, f)
    mu = pulse_gate(0.5 * math.pi * f * f, pulse.phi)
    return ideal, lam, mu
