"""Composite pulse sequences and their toggling-frame phase structure.

A :class:`PulseSequence` stores pulses in execution order (first pulse
executed first).  The propagator convention of :mod:`cpnot.su2` runs time
right to left, so :func:`ideal_propagator` is the one place where the order
is reversed; nothing else in the package should re-derive that convention.

For sequences of pi pulses the net in-plane phase ``Phi`` (alternating sum
of pulse phases) and the toggling-frame phases ``phi'`` / ``phi''`` used by
the error analysis are computed here.  Operations that are only derived for
pi pulses reject anything else with :class:`UnsupportedSequenceError`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .exceptions import UnsupportedSequenceError
from .su2 import IDENTITY, axis_angle, compose, pulse_gate

__all__ = [
    "TWO_PI",
    "PI_TOL",
    "PHASE_TOL",
    "Pulse",
    "PulseSequence",
    "SymmetryClass",
    "net_phase",
    "toggling_phases_pse",
    "toggling_phases_ore",
    "phases_from_toggling",
    "classify_symmetry",
    "is_time_symmetric",
    "is_time_antisymmetric",
    "ideal_propagator",
    "transform",
    "sequence_to_dict",
    "sequence_from_dict",
    "save_sequence",
    "load_sequence",
]

TWO_PI = 2.0 * math.pi

#: Tolerance for recognizing a nominal pi pulse.
PI_TOL = 1e-12

#: Tolerance for phase comparisons mod 2*pi (the catalog mixes closed forms
#: evaluated along different branches, e.g. -150 deg vs 210 deg).
PHASE_TOL = 1e-9


def canonical_phase(phi: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    phi = phi % TWO_PI
    # % can return TWO_PI itself for tiny negative inputs after rounding
    return phi if phi < TWO_PI else 0.0


def phases_close(a: float, b: float, tol: float = PHASE_TOL) -> bool:
    """Equality of angles mod 2*pi."""
    d = (a - b) % TWO_PI
    return d <= tol or TWO_PI - d <= tol


@dataclass(frozen=True)
class Pulse:
    """A single ideal rotation: nominal angle ``theta`` and phase ``phi`` (radians).

    ``phi`` is canonicalized to [0, 2*pi) at construction; ``theta`` must lie
    in (0, 4*pi].
    """

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("pulse angles must be finite")
        if not 0.0 < self.theta <= 4.0 * math.pi:
            raise ValueError(f"theta must lie in (0, 4*pi], got {self.theta}")
        object.__setattr__(self, "phi", canonical_phase(self.phi))

    @property
    def is_pi(self) -> bool:
        return abs(self.theta - math.pi) <= PI_TOL


@dataclass(frozen=True)
class PulseSequence:
    """Ordered pulses in execution order, with a name and free-form metadata."""

    name: str
    pulses: tuple[Pulse, ...]
    meta: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        pulses = tuple(self.pulses)
        if not pulses:
            raise ValueError("a pulse sequence must contain at least one pulse")
        object.__setattr__(self, "pulses", pulses)
        object.__setattr__(self, "meta", dict(self.meta))

    def __len__(self) -> int:
        return len(self.pulses)

    @property
    def thetas(self) -> np.ndarray:
        return np.array([p.theta for p in self.pulses])

    @property
    def phis(self) -> np.ndarray:
        return np.array([p.phi for p in self.pulses])

    @property
    def all_pi(self) -> bool:
        return all(p.is_pi for p in self.pulses)

    @classmethod
    def from_phases(
        cls,
        name: str,
        phis: Iterable[float],
        meta: Mapping[str, str] | None = None,
    ) -> "PulseSequence":
        """Build a sequence of pi pulses from a list of phases."""
        pulses = tuple(Pulse(math.pi, p) for p in phis)
        return cls(name, pulses, meta or {})


@dataclass(frozen=True)
class SymmetryClass:
    """Time-ordering symmetry of the phase list.

    ``kind`` is one of ``symmetric`` (palindromic phases), ``antisymmetric``
    (phases negate under reversal, central phase in {0, pi}) or ``neither``.
    Sequences whose phases are both (all phases in {0, pi}) report
    ``symmetric``.  ``phi_sum_zero`` records whether the net phase vanishes
    mod 2*pi; it is None for sequences where the net phase is undefined
    (non-pi pulses or even length).
    """

    kind: str
    phi_sum_zero: bool | None


def _require_all_pi(seq: PulseSequence, op: str) -> None:
    if not seq.all_pi:
        raise UnsupportedSequenceError(
            f"{op} is only defined for sequences of pi pulses ({seq.name!r} has other angles)"
        )


def net_phase(seq: PulseSequence) -> float:
    """Net in-plane phase of an odd sequence of pi pulses.

    The product of an odd number of pi rotations is itself a pi rotation
    about the in-plane axis at the alternating sum of the pulse phases;
    that sum (reduced to [0, 2*pi)) is returned.
    """
    _require_all_pi(seq, "net_phase")
    if len(seq) % 2 == 0:
        raise UnsupportedSequenceError(
            "net_phase requires an odd number of pulses (an even pi sequence is a z-rotation)"
        )
    signs = np.where(np.arange(len(seq)) % 2 == 0, 1.0, -1.0)
    return canonical_phase(float(np.dot(signs, seq.phis)))


def toggling_phases_pse(seq: PulseSequence) -> np.ndarray:
    """Toggling-frame phases phi' for pulse-strength error terms.

    Commuting the ideal pi pulses to the front of the errored sequence
    leaves the per-pulse error rotations at modified phases

        phi'_j = (-1)^(j+1) phi_j + 2 * sum_{k<j} (-1)^(k+1) phi_k

    (1-indexed), each reduced to [0, 2*pi).
    """
    _require_all_pi(seq, "toggling_phases_pse")
    phis = seq.phis
    signs = np.where(np.arange(len(phis)) % 2 == 0, 1.0, -1.0)
    signed = signs * phis
    prefix = np.concatenate(([0.0], np.cumsum(signed)[:-1]))
    return np.array([canonical_phase(v) for v in signed + 2.0 * prefix])


def toggling_phases_ore(seq: PulseSequence) -> np.ndarray:
    """Toggling-frame phases phi'' for off-resonance error terms.

    phi''_j = phi'_j + (-1)^(j+1) * pi/2, reduced to [0, 2*pi).
    """
    primed = toggling_phases_pse(seq)
    signs = np.where(np.arange(len(primed)) % 2 == 0, 1.0, -1.0)
    return np.array([canonical_phase(v) for v in primed + signs * 0.5 * math.pi])


def phases_from_toggling(primed) -> np.ndarray:
    """Invert the toggling map: pulse phases whose phi' equal ``primed``.

    Uses the recursion phi_{j+1} = phi_j + (-1)^j (phi'_{j+1} - phi'_j)
    (1-indexed) with phi_1 = phi'_1; useful for constructing sequences with
    prescribed error-polygon geometry.
    """
    primed = np.asarray(primed, dtype=float)
    phis = np.empty_like(primed)
    phis[0] = primed[0]
    for j in range(1, len(primed)):
        sign = -1.0 if j % 2 == 1 else 1.0
        phis[j] = phis[j - 1] + sign * (primed[j] - primed[j - 1])
    return np.array([canonical_phase(v) for v in phis])


def is_time_symmetric(seq: PulseSequence, tol: float = PHASE_TOL) -> bool:
    """Phases (and angles) read the same forwards and backwards."""
    ps = seq.pulses
    return all(
        abs(a.theta - b.theta) <= PI_TOL and phases_close(a.phi, b.phi, tol)
        for a, b in zip(ps, reversed(ps))
    )


def is_time_antisymmetric(seq: PulseSequence, tol: float = PHASE_TOL) -> bool:
    """Phases negate under time reversal (angles palindromic)."""
    ps = seq.pulses
    return all(
        abs(a.theta - b.theta) <= PI_TOL and phases_close(a.phi, -b.phi, tol)
        for a, b in zip(ps, reversed(ps))
    )


def classify_symmetry(seq: PulseSequence, tol: float = PHASE_TOL) -> SymmetryClass:
    """Classify the sequence as symmetric / antisymmetric / neither."""
    if is_time_symmetric(seq, tol):
        kind = "symmetric"
    elif is_time_antisymmetric(seq, tol):
        kind = "antisymmetric"
    else:
        kind = "neither"
    try:
        phi_sum_zero: bool | None = phases_close(net_phase(seq), 0.0, tol)
    except UnsupportedSequenceError:
        phi_sum_zero = None
    return SymmetryClass(kind, phi_sum_zero)


def ideal_propagator(seq: PulseSequence) -> np.ndarray:
    """Error-free propagator of the sequence (last executed pulse leftmost)."""
    g = IDENTITY
    for p in seq.pulses:
        g = compose(pulse_gate(p.theta, p.phi), g)
    return g


def net_axis_matches(seq: PulseSequence, tol: float = 1e-9) -> bool:
    """Check that the ideal propagator is a pi rotation about the net-phase axis.

    Diagnostic used by the test-suite; the axis comparison allows the
    overall sign flip inherent to pi rotations.
    """
    phi = net_phase(seq)
    aa = axis_angle(ideal_propagator(seq))
    want = np.array([math.cos(phi), math.sin(phi), 0.0])
    have = np.array(aa.axis)
    return (
        abs(aa.theta - math.pi) <= tol
        and min(np.max(np.abs(have - want)), np.max(np.abs(have + want))) <= tol
    )


_TRANSFORMS = ("reverse-order", "negate-phases", "cyclic-shift", "phase-offset")


def transform(
    seq: PulseSequence,
    which: str,
    *,
    k: int = 1,
    offset: float = 0.0,
) -> PulseSequence:
    """Return a transformed copy of the sequence.

    ``reverse-order``
        Reverse the execution order.
    ``negate-phases``
        Negate every pulse phase (mirrors the off-resonance response).
    ``cyclic-shift``
        Apply ``k`` elementary shifts, each moving the first pulse to the
        end with its phase negated.  Requires pi pulses only; preserves the
        pulse-strength fidelity profile exactly.
    ``phase-offset``
        Add ``offset`` to every phase.

    The transformation is recorded in the metadata.
    """
    if which not in _TRANSFORMS:
        raise ValueError(f"unknown transform {which!r}; expected one of {_TRANSFORMS}")
    pulses = list(seq.pulses)
    if which == "reverse-order":
        pulses = pulses[::-1]
        tag = "reverse-order"
    elif which == "negate-phases":
        pulses = [Pulse(p.theta, -p.phi) for p in pulses]
        tag = "negate-phases"
    elif which == "cyclic-shift":
        _require_all_pi(seq, "cyclic-shift")
        k = k % len(pulses)
        for _ in range(k):
            first = pulses.pop(0)
            pulses.append(Pulse(first.theta, -first.phi))
        tag = f"cyclic-shift({k})"
    else:
        pulses = [Pulse(p.theta, p.phi + offset) for p in pulses]
        tag = f"phase-offset({offset:.12g})"
    meta = dict(seq.meta)
    meta["transform"] = f"{tag} of {seq.name}" if "transform" not in meta else (
        f"{tag} of [{meta['transform']}]"
    )
    return PulseSequence(f"{seq.name}~{tag}", tuple(pulses), meta)


# ---------------------------------------------------------------------------
# Sequence file format: JSON object with angles in degrees, execution order.


def sequence_to_dict(seq: PulseSequence) -> dict:
    return {
        "name": seq.name,
        "pulses": [
            {"theta_deg": math.degrees(p.theta), "phi_deg": math.degrees(p.phi)}
            for p in seq.pulses
        ],
        "meta": {str(k): str(v) for k, v in seq.meta.items()},
    }


def sequence_from_dict(data: Mapping) -> PulseSequence:
    pulses = tuple(
        Pulse(math.radians(p["theta_deg"]), math.radians(p["phi_deg"]))
        for p in data["pulses"]
    )
    return PulseSequence(str(data["name"]), pulses, dict(data.get("meta", {})))


def save_sequence(seq: PulseSequence, path: str | Path) -> None:
    Path(path).write_text(json.dumps(sequence_to_dict(seq), indent=2) + "\n")


def load_sequence(path: str | Path) -> PulseSequence:
    return sequence_from_dict(json.loads(Path(path).read_text()))
