"""Command-line front end.

Subcommands: ``list`` (catalog overview), ``show`` (phases and toggling
data), ``scan`` (fidelity grid export, csv or gnuplot), ``certify``
(certification report), ``coeffs`` (leading-order report) and ``design``
(run a solver and write a sequence file).

Angles are degrees at this surface and radians inside.  Output is
deterministic: identical inputs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import __version__
from .exceptions import CpnotError, UnknownSequenceError, UnsupportedSequenceError
from .families import catalog, make
from .sequences import (
    PulseSequence,
    classify_symmetry,
    load_sequence,
    net_phase,
    save_sequence,
    toggling_phases_ore,
    toggling_phases_pse,
)
from .series import certify, fidelity_grid, infidelity_series
from .solvers import PROBLEMS, solve_problem

_GRID_COUNT_MAX = 4001


def _resolve_sequence(selector: str) -> PulseSequence:
    """A selector is a catalog name or a path to a sequence file."""
    try:
        return make(selector).sequence
    except UnknownSequenceError:
        pass
    path = Path(selector)
    if path.exists():
        return load_sequence(path)
    raise CpnotError(
        f"{selector!r} is neither a catalog name nor an existing sequence file"
    )


def _cmd_list(_args: argparse.Namespace) -> int:
    rows = [("name", "pulses", "eps order", "f order")]
    for entry in catalog():
        oe, of = entry.claimed_orders
        rows.append((entry.name, str(len(entry.sequence)), f">={oe}", f">={of}"))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0


def _fmt_angles(values, deg: bool) -> str:
    if deg:
        return " ".join(f"{math.degrees(v) % 360.0:.1f}" for v in values)
    return " ".join(f"{v:.6f}" for v in values)


def _cmd_show(args: argparse.Namespace) -> int:
    seq = _resolve_sequence(args.sequence)
    deg = True  # degrees are the default surface; --deg kept for explicitness
    print(f"name: {seq.name}")
    if not seq.all_pi:
        thetas = _fmt_angles([p.theta for p in seq.pulses], deg)
        print(f"angles: {thetas}")
    print(f"phases: {_fmt_angles([p.phi for p in seq.pulses], deg)}")
    sym = classify_symmetry(seq)
    print(f"symmetry: {sym.kind}")
    try:
        phi = net_phase(seq)
        print(f"net phase: {math.degrees(phi):.1f}" if deg else f"net phase: {phi:.6f}")
        print(f"toggling (pulse-strength): {_fmt_angles(toggling_phases_pse(seq), deg)}")
        print(f"toggling (off-resonance):  {_fmt_angles(toggling_phases_ore(seq), deg)}")
    except UnsupportedSequenceError:
        print("net phase: undefined (non-pi pulses or even length)")
    return 0


_GNUPLOT_TEMPLATE = """\
# contour plot of a composite-pulse fidelity grid
set datafile separator ','
set xlabel 'epsilon'
set ylabel 'f'
set view map
unset surface
set contour base
set cntrparam levels discrete {levels}
set dgrid3d {nf},{ne}
splot '{csv}' using 1:2:3 with lines notitle
pause -1
"""


def _cmd_scan(args: argparse.Namespace) -> int:
    seq = _resolve_sequence(args.sequence)
    for name in ("ne", "nf"):
        count = getattr(args, name)
        if not 2 <= count <= _GRID_COUNT_MAX:
            raise CpnotError(f"--{name} must be in [2, {_GRID_COUNT_MAX}]")
    for name in ("emin", "emax", "fmin", "fmax"):
        if not math.isfinite(getattr(args, name)):
            raise CpnotError(f"--{name} must be finite")
    grid = fidelity_grid(
        seq,
        eps_range=(args.emin, args.emax),
        f_range=(args.fmin, args.fmax),
        counts=(args.ne, args.nf),
    )
    out = Path(args.out)
    csv_path = out if out.suffix == ".csv" or args.format == "csv" else out.with_suffix(".csv")
    csv_path.write_text(grid.to_csv_text())
    written = [csv_path]
    if args.format == "gnuplot":
        levels = [0.9, 0.99, 0.999]
        levels += [1.0 - 10.0**-k for k in range(4, args.kmax + 1)]
        script = _GNUPLOT_TEMPLATE.format(
            levels=",".join(f"{lv:.6f}" for lv in levels),
            ne=args.ne,
            nf=args.nf,
            csv=csv_path.name,
        )
        gp_path = csv_path.with_suffix(".gp")
        gp_path.write_text(script)
        written.append(gp_path)
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    seq = _resolve_sequence(args.sequence)
    report = certify(seq)
    print(report.to_text())
    return 0


def _cmd_coeffs(args: argparse.Namespace) -> int:
    seq = _resolve_sequence(args.sequence)
    rep = infidelity_series(seq, args.axis)
    bound = ">= " if rep.is_lower_bound else ""
    print(f"axis: {rep.axis}")
    print(f"leading order: {bound}{rep.leading_order}")
    if not rep.is_lower_bound:
        print(f"coefficient: {rep.coefficient:.9g}")
    print(f"fit residual: {rep.fit_residual:.3e}")
    print(f"points used: {rep.points_used}")
    return 0


def _cmd_design(args: argparse.Namespace) -> int:
    solution = solve_problem(args.problem, args.target)
    name = args.problem if args.target is None else f"{args.problem}-{args.target}"
    seq = solution.as_sequence(name)
    print(f"phases (deg): {_fmt_angles(solution.phases, deg=True)}")
    for key, value in solution.residuals.items():
        print(f"residual {key}: {value:.3e}")
    if solution.objective is not None:
        print(f"objective: {solution.objective:.6g}")
    out = Path(args.out) if args.out else Path(f"{name}.json")
    save_sequence(seq, out)
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpnot",
        description="Composite-pulse NOT gates: catalog, fidelity scans, certification, design.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="catalog names, pulse counts, claimed orders").set_defaults(
        fn=_cmd_list
    )

    p_show = sub.add_parser("show", help="phases, symmetry class, net phase, toggling phases")
    p_show.add_argument("sequence", help="catalog name or sequence file")
    p_show.add_argument("--deg", action="store_true", help="degrees (the default)")
    p_show.set_defaults(fn=_cmd_show)

    p_scan = sub.add_parser("scan", help="fidelity grid over an (epsilon, f) rectangle")
    p_scan.add_argument("sequence", help="catalog name or sequence file")
    p_scan.add_argument("--emin", type=float, default=-1.0)
    p_scan.add_argument("--emax", type=float, default=1.0)
    p_scan.add_argument("--fmin", type=float, default=-1.0)
    p_scan.add_argument("--fmax", type=float, default=1.0)
    p_scan.add_argument("--ne", type=int, default=201)
    p_scan.add_argument("--nf", type=int, default=201)
    p_scan.add_argument("--out", required=True, help="output path (csv)")
    p_scan.add_argument("--format", choices=("csv", "gnuplot"), default="csv")
    p_scan.add_argument(
        "--kmax",
        type=int,
        default=3,
        choices=range(3, 7),
        help="deepest contour 1 - 10^-k in the gnuplot script",
    )
    p_scan.set_defaults(fn=_cmd_scan)

    p_cert = sub.add_parser("certify", help="symmetry, polygon and leading-order report")
    p_cert.add_argument("sequence", help="catalog name or sequence file")
    p_cert.set_defaults(fn=_cmd_certify)

    p_coeffs = sub.add_parser("coeffs", help="leading infidelity order and coefficient")
    p_coeffs.add_argument("sequence", help="catalog name or sequence file")
    p_coeffs.add_argument("--axis", choices=("epsilon", "f"), required=True)
    p_coeffs.set_defaults(fn=_cmd_coeffs)

    p_design = sub.add_parser("design", help="run a design solver and write a sequence file")
    p_design.add_argument("problem", choices=sorted(PROBLEMS))
    p_design.add_argument("--target", default=None, help="solver-specific target (e.g. pse, ore)")
    p_design.add_argument("--out", default=None, help="sequence file to write")
    p_design.set_defaults(fn=_cmd_design)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CpnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
