"""Composite-pulse NOT gates: evaluation, certification and design.

The package models sequences of in-plane rotations implementing a robust
NOT gate, evaluates their propagators under pulse-strength and
off-resonance errors, certifies the leading infidelity order on each error
axis, ships the standard catalog of published pulse families, and
re-derives those designs from their geometric constraints.
"""

__version__ = "0.1.0"

from ._backend import BACKEND, sequence_fidelities, sequence_propagators
from .errors import ErrorPoint, errored_gate, sequence_propagator
from .exceptions import (
    ConvergenceError,
    CpnotError,
    IndeterminateOrderError,
    InsufficientSignalError,
    RootNotFoundError,
    SeriesError,
    SolverError,
    UnknownSequenceError,
    UnsupportedSequenceError,
)
from .families import CatalogEntry, catalog, catalog_names, make, save_catalog
from .sequences import (
    Pulse,
    PulseSequence,
    SymmetryClass,
    classify_symmetry,
    ideal_propagator,
    load_sequence,
    net_phase,
    phases_from_toggling,
    save_sequence,
    toggling_phases_ore,
    toggling_phases_pse,
    transform,
)
from .series import (
    BchSummary,
    CertificationReport,
    FidelityGrid,
    SeriesReport,
    bch_summary,
    certify,
    fidelity_grid,
    fourth_order_coefficients_family5,
    infidelity_series,
    taylor_coefficient,
)
from .solvers import (
    DesignProblem,
    Solution,
    brute_force_fidelity3,
    optimize_asbo9,
    optimize_family5,
    optimize_rhombus7,
    optimize_sym7,
    optimize_sym9,
    solve_antisym5,
    solve_simultaneous5,
    solve_sym5,
    solve_triangle3,
)
from .su2 import (
    AxisAngle,
    axis_angle,
    compose,
    equal_up_to_global_phase,
    fidelity,
    pulse_gate,
    z_gate,
)

__all__ = [
    "__version__",
    "BACKEND",
    "AxisAngle",
    "BchSummary",
    "CatalogEntry",
    "CertificationReport",
    "ConvergenceError",
    "CpnotError",
    "DesignProblem",
    "ErrorPoint",
    "FidelityGrid",
    "IndeterminateOrderError",
    "InsufficientSignalError",
    "Pulse",
    "PulseSequence",
    "RootNotFoundError",
    "SeriesError",
    "SeriesReport",
    "Solution",
    "SolverError",
    "SymmetryClass",
    "UnknownSequenceError",
    "UnsupportedSequenceError",
    "axis_angle",
    "bch_summary",
    "brute_force_fidelity3",
    "catalog",
    "catalog_names",
    "certify",
    "classify_symmetry",
    "compose",
    "equal_up_to_global_phase",
    "errored_gate",
    "fidelity",
    "fidelity_grid",
    "fourth_order_coefficients_family5",
    "ideal_propagator",
    "infidelity_series",
    "load_sequence",
    "make",
    "net_phase",
    "phases_from_toggling",
    "optimize_asbo9",
    "optimize_family5",
    "optimize_rhombus7",
    "optimize_sym7",
    "optimize_sym9",
    "pulse_gate",
    "save_catalog",
    "save_sequence",
    "sequence_fidelities",
    "sequence_propagator",
    "sequence_propagators",
    "solve_antisym5",
    "solve_simultaneous5",
    "solve_sym5",
    "solve_triangle3",
    "taylor_coefficient",
    "toggling_phases_ore",
    "toggling_phases_pse",
    "transform",
    "z_gate",
]
