"""Catalog of named composite NOT gates, with exact closed-form phases.

Every entry is a sequence of pi rotations (plus the two well-known
exceptions BB1-symmetric and CORPSE, which contain other angles) whose
ideal propagator is a NOT gate.  Phases come from closed forms evaluated in
double precision; the mirror-image variant of each family (negated phases)
is equivalent and can be obtained with
``transform(seq, "negate-phases")``.

``claimed_orders`` records the advertised leading infidelity order per axis
(pulse-strength, off-resonance) as lower bounds; the certification suite
confirms them for the whole catalog.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .exceptions import UnknownSequenceError
from .sequences import Pulse, PulseSequence, save_sequence

__all__ = [
    "PSI",
    "CatalogEntry",
    "make",
    "catalog",
    "catalog_names",
    "save_catalog",
    "tycko5_phases",
    "sym5_phases",
    "sym7_plus_phases",
    "sym7_minus_phases",
    "rhombus7_phases",
    "asbo9_phases",
    "sym9_phases",
    "sym9_beta",
]

PI = math.pi

#: The recurring five-pulse design angle arccos(-1/4), about 104.48 degrees.
PSI = math.acos(-0.25)


@dataclass(frozen=True)
class CatalogEntry:
    """A named sequence plus its provenance and advertised error orders."""

    sequence: PulseSequence
    provenance: str
    claimed_orders: tuple[int, int]  # (epsilon axis, f axis), lower bounds

    @property
    def name(self) -> str:
        return self.sequence.name


# ---------------------------------------------------------------------------
# Parameterized family constructors (phases in radians, execution order).


def tycko5_phases(alpha: float) -> tuple[float, ...]:
    """Five-pulse family with first-order tolerance of both error types.

    The odd toggling-frame vectors form an equilateral triangle and the even
    pair is antiparallel for every ``alpha``; the free parameter tunes the
    second-order behaviour.
    """
    return (
        PI + 2 * alpha,
        alpha,
        -PI / 3,
        -5 * PI / 3 - alpha,
        -7 * PI / 3 - 2 * alpha,
    )


def sym5_beta(alpha: float, branch: int = -1) -> float:
    """Companion phase of the symmetric five-pulse family.

    Solves the first-order closure condition 1 + 2cos(alpha)
    + 2cos(2alpha - beta) = 0; defined for alpha in [pi/3, 5pi/3] (mod 2pi).
    ``branch`` selects the sign of the arccos term.
    """
    arg = -(1.0 + 2.0 * math.cos(alpha)) / 2.0
    if not -1.0 <= arg <= 1.0:
        raise ValueError(f"alpha={alpha} is outside the domain of the symmetric family")
    return 2.0 * alpha + branch * math.acos(arg)


def sym5_phases(alpha: float, branch: int = -1) -> tuple[float, ...]:
    """Symmetric five-pulse family (alpha, beta, 2beta-2alpha, beta, alpha)."""
    beta = sym5_beta(alpha, branch)
    return (alpha, beta, 2 * beta - 2 * alpha, beta, alpha)


def rhombus7_phases(alpha: float, beta: float) -> tuple[float, ...]:
    """Seven-pulse family: even toggling vectors form a triangle, odd a rhombus."""
    return (
        alpha,
        2 * beta,
        beta,
        -2 * PI / 3,
        -PI / 3 - alpha + 2 * beta,
        -2 * PI / 3 - 2 * alpha + 4 * beta,
        -PI - 2 * alpha + 3 * beta,
    )


def sym7_plus_phases(alpha: float) -> tuple[float, ...]:
    """Symmetric seven-pulse family (phi'_3 = phi'_1 + pi branch)."""
    return (
        alpha,
        2 * PI / 3 + 2 * alpha,
        7 * PI / 3 + 3 * alpha,
        10 * PI / 3 + 4 * alpha,
        7 * PI / 3 + 3 * alpha,
        2 * PI / 3 + 2 * alpha,
        alpha,
    )


def sym7_minus_phases(alpha: float) -> tuple[float, ...]:
    """Symmetric seven-pulse family (phi'_3 = phi'_1 - pi branch).

    Optimizing one error type on this branch leaves large second-order
    errors of the other type, so no optimum is shipped in the catalog.
    """
    return (
        alpha,
        2 * PI / 3 + 2 * alpha,
        PI / 3 + alpha,
        -2 * PI / 3,
        PI / 3 + alpha,
        2 * PI / 3 + 2 * alpha,
        alpha,
    )


def asbo9_phases(alpha: float) -> tuple[float, ...]:
    """Antisymmetric nine-pulse family suppressing first and second order errors of both types."""
    return (
        4 * alpha + PSI,
        3 * alpha + 2 * PSI,
        2 * alpha + PSI,
        alpha + PI,
        0.0,
        -alpha - PI,
        -2 * alpha - PSI,
        -3 * alpha - 2 * PSI,
        -4 * alpha - PSI,
    )


def sym9_beta(alpha: float) -> float:
    """Companion phase of the symmetric nine-pulse design."""
    arg = -(1.0 + 2.0 * math.cos(alpha)) / 2.0
    if not -1.0 <= arg <= 1.0:
        raise ValueError(f"alpha={alpha} is outside the domain of the symmetric nine-pulse family")
    return 2.0 * alpha + math.acos(arg)


def sym9_phases(alpha: float) -> tuple[float, ...]:
    """Symmetric nine-pulse family (alpha, beta, beta, beta-pi, 2beta-2alpha, ... mirrored)."""
    beta = sym9_beta(alpha)
    return (
        alpha,
        beta,
        beta,
        beta - PI,
        2 * beta - 2 * alpha,
        beta - PI,
        beta,
        beta,
        alpha,
    )


# Optimal parameters (closed forms where they exist).

SCROFULOUS_STEP = 2 * PI / 3
SYM5_ALPHA_PSE = 2.0 * math.asin((5.0 / 32.0) ** 0.25)
TYCKO5_ALPHA_PSE = math.acos((3.0 - math.sqrt(13.0)) / 8.0)
TYCKO5_ALPHA_ORE = math.acos((-3.0 - math.sqrt(13.0)) / 8.0)
TYCKO5_ALPHA_BALANCED = 2 * PI / 3
RHOMBUS7_ALPHA_OPT = -math.acos(-0.5 * math.sqrt((4.0 + math.sqrt(13.0)) / 2.0))
SYM7_ALPHA_PSE = -math.acos((3.0 - math.sqrt(61.0)) / 16.0)
SYM7_ALPHA_ORE = math.acos((math.sqrt(61.0) - 3.0) / 16.0)
SYM9_ALPHA = -math.acos((4.0 - math.sqrt(10.0)) / 4.0)

# Third-order minima of the antisymmetric nine-pulse family have no closed
# form; the catalog refines them numerically (see _asbo9_refined_alpha) and
# these literature values seed the search.
ASBO9_ALPHA_B1_DEG = 308.0
ASBO9_ALPHA_OMEGA_DEG = 128.0


def _pi_seq(name: str, phases: Iterable[float], meta: dict[str, str]) -> PulseSequence:
    return PulseSequence.from_phases(name, phases, meta)


def _entry(
    name: str,
    phases: Sequence[float],
    provenance: str,
    orders: tuple[int, int],
    meta: dict[str, str] | None = None,
    thetas: Sequence[float] | None = None,
) -> CatalogEntry:
    meta = dict(meta or {})
    meta.setdefault("family", name)
    if thetas is None:
        seq = _pi_seq(name, phases, meta)
    else:
        seq = PulseSequence(name, tuple(Pulse(t, p) for t, p in zip(thetas, phases)), meta)
    return CatalogEntry(seq, provenance, orders)


def _asbo9_refined_alpha(target: str) -> float:
    # late import: the solver module builds sequences from this module
    from .solvers import optimize_asbo9

    return optimize_asbo9(target).parameters["alpha"]


def _make_scrofulous(sign: int, phi_target: float, name: str) -> tuple[float, ...]:
    s = sign * SCROFULOUS_STEP
    return (phi_target - s, phi_target - 2 * s, phi_target - s)


_FIXED_PARAM_DEFAULTS = {
    "scrofulous3-pse": (1,),
    "scrofulous3-pse-pi": (1,),
    "tycko5-balanced": (TYCKO5_ALPHA_BALANCED,),
}


def _builders() -> dict[str, Callable[..., CatalogEntry]]:
    def single_pi() -> CatalogEntry:
        return _entry("single-pi", (0.0,), "bare pi rotation about x", (2, 2))

    def scrofulous3(sign: int = 1) -> CatalogEntry:
        return _entry(
            "scrofulous3-pse",
            _make_scrofulous(sign, 0.0, "scrofulous3-pse"),
            "SCROFULOUS-type triangle, first-order pulse-strength tolerance",
            (4, 2),
            meta={"sign": str(sign)},
        )

    def scrofulous3_pi(sign: int = 1) -> CatalogEntry:
        return _entry(
            "scrofulous3-pse-pi",
            _make_scrofulous(sign, PI, "scrofulous3-pse-pi"),
            "SCROFULOUS-type triangle with net phase pi",
            (4, 2),
            meta={"sign": str(sign), "net_phase": "pi"},
        )

    def ore3() -> CatalogEntry:
        return _entry(
            "ore3",
            (PI / 3, 2 * PI / 3, PI / 3),
            "three-pulse first-order off-resonance tolerance",
            (2, 4),
        )

    def f1() -> CatalogEntry:
        return _entry(
            "f1",
            (3 * PSI, PSI, 0.0, -PSI, -3 * PSI),
            "Wimperis F1: antisymmetric five-pulse, second-order pulse-strength tolerance",
            (6, 2),
        )

    def bb1_pi_core() -> CatalogEntry:
        return _entry(
            "bb1-pi-core",
            (0.0, PSI, 3 * PSI, 3 * PSI, PSI),
            "BB1 reordering of F1 (pi pulses only)",
            (6, 2),
        )

    def bb1_symmetric() -> CatalogEntry:
        return _entry(
            "bb1-symmetric",
            (0.0, PSI, 3 * PSI, PSI, 0.0),
            "time-symmetric BB1 with split pi/2 bookends",
            (6, 2),
            thetas=(PI / 2, PI, 2 * PI, PI, PI / 2),
        )

    def sym5_pse() -> CatalogEntry:
        return _entry(
            "sym5-pse",
            sym5_phases(SYM5_ALPHA_PSE, branch=-1),
            "symmetric five-pulse, second-order pulse-strength tolerance",
            (6, 2),
            meta={"alpha_deg": f"{math.degrees(SYM5_ALPHA_PSE):.6f}"},
        )

    def ore5_antisym() -> CatalogEntry:
        a = math.acos(11.0 / 16.0)
        b = math.acos(0.25)
        return _entry(
            "ore5-antisym",
            (a, b, 0.0, -b, -a),
            "antisymmetric five-pulse, first-order off-resonance tolerance only",
            (2, 4),
        )

    def tycko5(alpha: float) -> CatalogEntry:
        return _entry(
            "tycko5",
            tycko5_phases(alpha),
            "five-pulse simultaneous first-order tolerance family",
            (4, 4),
            meta={"alpha_deg": f"{math.degrees(alpha):.6f}"},
        )

    def s1() -> CatalogEntry:
        phases = tuple(p + PI for p in tycko5_phases(-PI))
        return _entry(
            "s1",
            phases,
            "S1 inversion pulse (simultaneous family at alpha = -pi, offset by pi)",
            (4, 4),
        )

    def knill() -> CatalogEntry:
        return _entry(
            "knill",
            tycko5_phases(-5 * PI / 6),
            "Knill pulse (time-symmetric member of the simultaneous family)",
            (4, 4),
        )

    def tycko5_pse_opt() -> CatalogEntry:
        e = tycko5(TYCKO5_ALPHA_PSE)
        return _entry(
            "tycko5-pse-opt",
            tuple(p.phi for p in e.sequence.pulses),
            "simultaneous family tuned to remove second-order pulse-strength error",
            (6, 4),
            meta=dict(e.sequence.meta),
        )

    def tycko5_ore_opt() -> CatalogEntry:
        e = tycko5(TYCKO5_ALPHA_ORE)
        return _entry(
            "tycko5-ore-opt",
            tuple(p.phi for p in e.sequence.pulses),
            "simultaneous family tuned to remove second-order off-resonance error",
            (4, 6),
            meta=dict(e.sequence.meta),
        )

    def tycko5_balanced(alpha: float = TYCKO5_ALPHA_BALANCED) -> CatalogEntry:
        if not (
            math.isclose(alpha % (2 * PI), 2 * PI / 3, abs_tol=1e-9)
            or math.isclose(alpha % (2 * PI), 5 * PI / 3, abs_tol=1e-9)
        ):
            raise ValueError("balanced variants exist at alpha = 2*pi/3 or 5*pi/3 only")
        e = tycko5(alpha)
        return _entry(
            "tycko5-balanced",
            tuple(p.phi for p in e.sequence.pulses),
            "simultaneous family with equal fourth-order coefficients",
            (4, 4),
            meta=dict(e.sequence.meta),
        )

    def rhombus7(alpha: float, beta: float) -> CatalogEntry:
        return _entry(
            "rhombus7",
            rhombus7_phases(alpha, beta),
            "seven-pulse rhombus family with simultaneous first-order tolerance",
            (4, 4),
            meta={
                "alpha_deg": f"{math.degrees(alpha):.6f}",
                "beta_deg": f"{math.degrees(beta):.6f}",
            },
        )

    def rhombus7_opt() -> CatalogEntry:
        alpha = RHOMBUS7_ALPHA_OPT
        beta = alpha - 2 * PI / 3
        e = rhombus7(alpha, beta)
        return _entry(
            "rhombus7-opt",
            tuple(p.phi for p in e.sequence.pulses),
            "rhombus family minimum with simultaneous second-order suppression",
            (6, 5),
            meta=dict(e.sequence.meta),
        )

    def sym7_plus(alpha: float) -> CatalogEntry:
        return _entry(
            "sym7-plus",
            sym7_plus_phases(alpha),
            "symmetric seven-pulse family (plus branch)",
            (4, 4),
            meta={"alpha_deg": f"{math.degrees(alpha):.6f}"},
        )

    def sym7_minus(alpha: float) -> CatalogEntry:
        return _entry(
            "sym7-minus",
            sym7_minus_phases(alpha),
            "symmetric seven-pulse family (minus branch, parametric only)",
            (4, 4),
            meta={"alpha_deg": f"{math.degrees(alpha):.6f}"},
        )

    def sym7_pse_opt() -> CatalogEntry:
        e = sym7_plus(SYM7_ALPHA_PSE)
        return _entry(
            "sym7-pse-opt",
            tuple(p.phi for p in e.sequence.pulses),
            "symmetric seven-pulse, second-order pulse-strength error removed",
            (6, 4),
            meta=dict(e.sequence.meta),
        )

    def sym7_ore_opt() -> CatalogEntry:
        e = sym7_plus(SYM7_ALPHA_ORE)
        return _entry(
            "sym7-ore-opt",
            tuple(p.phi for p in e.sequence.pulses),
            "symmetric seven-pulse, second-order off-resonance error removed",
            (4, 6),
            meta=dict(e.sequence.meta),
        )

    def asbo9(alpha: float) -> CatalogEntry:
        return _entry(
            "asbo9",
            asbo9_phases(alpha),
            "ASBO-9 antisymmetric nine-pulse family",
            (6, 6),
            meta={"alpha_deg": f"{math.degrees(alpha):.6f}"},
        )

    def asbo9_7a() -> CatalogEntry:
        e = asbo9(PSI)
        return _entry(
            "asbo9-7a",
            tuple(p.phi for p in e.sequence.pulses),
            "ASBO-9(7A): balanced third-order errors, alpha = +psi",
            (6, 6),
            meta=dict(e.sequence.meta),
        )

    def asbo9_7b() -> CatalogEntry:
        e = asbo9(-PSI)
        return _entry(
            "asbo9-7b",
            tuple(p.phi for p in e.sequence.pulses),
            "ASBO-9(7B): balanced third-order errors, alpha = -psi",
            (6, 6),
            meta=dict(e.sequence.meta),
        )

    def asbo9_b1() -> CatalogEntry:
        alpha = _asbo9_refined_alpha("pse")
        e = asbo9(alpha)
        return _entry(
            "asbo9-b1",
            tuple(p.phi for p in e.sequence.pulses),
            "ASBO-9(B1): third-order pulse-strength error minimized",
            (6, 6),
            meta=dict(e.sequence.meta),
        )

    def asbo9_omega() -> CatalogEntry:
        alpha = _asbo9_refined_alpha("ore")
        e = asbo9(alpha)
        return _entry(
            "asbo9-omega",
            tuple(p.phi for p in e.sequence.pulses),
            "ASBO-9(Omega): third-order off-resonance error minimized",
            (6, 6),
            meta=dict(e.sequence.meta),
        )

    def sym9() -> CatalogEntry:
        return _entry(
            "sym9",
            sym9_phases(SYM9_ALPHA),
            "symmetric nine-pulse with first and second order suppression of both errors",
            (6, 6),
            meta={"alpha_deg": f"{math.degrees(SYM9_ALPHA):.6f}"},
        )

    def alway_jones9() -> CatalogEntry:
        return _entry(
            "alway-jones9",
            (0.0, PSI, 3 * PSI, 3 * PSI, PSI, PI - PSI, -PSI, PI + PSI, PSI),
            "Alway-Jones nine-pulse built by removing errors one at a time",
            (6, 4),
        )

    def corpse() -> CatalogEntry:
        # standard CORPSE constants for a target pi rotation; gated behind
        # certification rather than trusted
        return _entry(
            "corpse",
            (0.0, PI, 0.0),
            "CORPSE: first-order off-resonance tolerance with unequal angles",
            (2, 4),
            thetas=(PI / 3, 5 * PI / 3, 7 * PI / 3),
        )

    return {
        "single-pi": single_pi,
        "scrofulous3-pse": scrofulous3,
        "scrofulous3-pse-pi": scrofulous3_pi,
        "ore3": ore3,
        "f1": f1,
        "bb1-pi-core": bb1_pi_core,
        "bb1-symmetric": bb1_symmetric,
        "sym5-pse": sym5_pse,
        "ore5-antisym": ore5_antisym,
        "tycko5": tycko5,
        "s1": s1,
        "knill": knill,
        "tycko5-pse-opt": tycko5_pse_opt,
        "tycko5-ore-opt": tycko5_ore_opt,
        "tycko5-balanced": tycko5_balanced,
        "rhombus7": rhombus7,
        "rhombus7-opt": rhombus7_opt,
        "sym7-plus": sym7_plus,
        "sym7-minus": sym7_minus,
        "sym7-pse-opt": sym7_pse_opt,
        "sym7-ore-opt": sym7_ore_opt,
        "asbo9": asbo9,
        "asbo9-7a": asbo9_7a,
        "asbo9-7b": asbo9_7b,
        "asbo9-b1": asbo9_b1,
        "asbo9-omega": asbo9_omega,
        "sym9": sym9,
        "alway-jones9": alway_jones9,
        "corpse": corpse,
    }


_BUILDERS = _builders()

#: Names requiring parameters when built via make().
PARAMETRIC = ("tycko5", "rhombus7", "sym7-plus", "sym7-minus", "asbo9")

#: Fixed entries returned by catalog(), in display order.
CATALOG_ORDER = (
    "single-pi",
    "scrofulous3-pse",
    "scrofulous3-pse-pi",
    "ore3",
    "corpse",
    "f1",
    "bb1-pi-core",
    "bb1-symmetric",
    "sym5-pse",
    "ore5-antisym",
    "s1",
    "knill",
    "tycko5-pse-opt",
    "tycko5-ore-opt",
    "tycko5-balanced",
    "rhombus7-opt",
    "sym7-pse-opt",
    "sym7-ore-opt",
    "asbo9-7a",
    "asbo9-7b",
    "asbo9-b1",
    "asbo9-omega",
    "sym9",
    "alway-jones9",
)


def make(name: str, params: Sequence[float] | None = None) -> CatalogEntry:
    """Build a catalog entry by name.

    Parameterized families (see ``PARAMETRIC``) require their parameters:
    ``tycko5``, ``sym7-plus``, ``sym7-minus`` and ``asbo9`` take one angle,
    ``rhombus7`` takes two.  All angles in radians.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownSequenceError(name) from None
    if params is None:
        params = _FIXED_PARAM_DEFAULTS.get(name, ())
        if name in PARAMETRIC:
            raise ValueError(f"{name!r} requires parameters")
    try:
        return builder(*params)
    except TypeError:
        raise ValueError(f"wrong number of parameters for {name!r}: {list(params)}") from None


def catalog() -> list[CatalogEntry]:
    """All fixed (parameter-free) catalog entries."""
    return [make(name) for name in CATALOG_ORDER]


def catalog_names() -> tuple[str, ...]:
    return CATALOG_ORDER


def save_catalog(directory: str | Path) -> list[Path]:
    """Export every fixed entry as a sequence file; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for entry in catalog():
        path = directory / f"{entry.name}.json"
        save_sequence(entry.sequence, path)
        paths.append(path)
    return paths
