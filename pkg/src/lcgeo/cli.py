"""Command line interface.

Exit codes: 0 when every examined element is regular or removable, 2 when a
not-removable singularity was detected, 1 on errors.
"""

from __future__ import annotations

import argparse
import sys

from . import bridge, construct
from .construct import (
    ConstructionError,
    constraint_projector,
    default_assignment,
    evaluate,
    induced_path,
    load_construction,
    run_table,
    spatial_map_for,
    trace,
)
from .desing import PerturbationSpec, ResolveStatus, resolve_at, resolve_extended
from .lcf import d_pow
from .projgeo import point

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_REMOVABLE = 2


def _fmt_vec(vec) -> str:
    parts = []
    for c in vec:
        c = complex(c)
        parts.append(f"{c.real:.6g}" if abs(c.imag) < 1e-9 else f"{c.real:.6g}{c.imag:+.6g}j")
    return "(" + ", ".join(parts) + ")"


def cmd_eval(args) -> int:
    c = load_construction(args.file)
    assignment = default_assignment(c)
    d = d_pow(1)
    for spec in args.perturb or ():
        try:
            eid, rest = spec.split("=", 1)
            dx, dy = (float(v) for v in rest.split(","))
        except ValueError:
            print(f"bad --perturb {spec!r}; expected id=dx,dy", file=sys.stderr)
            return EXIT_ERROR
        if eid not in assignment:
            print(f"unknown free element {eid!r}", file=sys.stderr)
            return EXIT_ERROR
        base = assignment[eid]
        assignment[eid] = point(base.x + dx * d, base.y + dy * d, base.z)
    res = evaluate(c, assignment)
    width = max(len(e.id) for e in c.elements)
    for e in c.elements:
        entry = res[e.id]
        psh_s = _fmt_vec(entry.psh.vec) if entry.psh else "degenerate"
        print(f"{e.id.ljust(width)}  std={_fmt_vec(entry.standard)}  psh={psh_s}")
    return EXIT_OK


def cmd_trace(args) -> int:
    c = load_construction(args.file)
    rows = trace(c, args.target, args.samples)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("t,status,x,y,z\n")
            for t, status, value in rows:
                cells = [f"{t:.12g}", status]
                if value is None:
                    cells += ["", "", ""]
                else:
                    for comp in value:
                        comp = complex(comp)
                        cells.append(
                            f"{comp.real:.12g}"
                            if abs(comp.imag) < 1e-12
                            else f"{comp.real:.12g}{comp.imag:+.12g}j"
                        )
                fh.write(",".join(cells) + "\n")
    statuses = {status for _, status, _ in rows}
    singular = [(t, s) for t, s, _ in rows if s != "regular"]
    print(f"{len(rows)} samples, {len(singular)} singular: {singular}")
    if not args.csv:
        for t, status, value in rows:
            print(f"t={t:.6g}  {status}  {_fmt_vec(value) if value else '-'}")
    return EXIT_NOT_REMOVABLE if "not-removable" in statuses else EXIT_OK


def cmd_resolve(args) -> int:
    c = load_construction(args.file)
    path = induced_path(c, args.target)
    outcome = resolve_at(path, args.t0)
    _print_outcome(args.target, outcome)
    return EXIT_OK if outcome.ok else EXIT_NOT_REMOVABLE


def cmd_check_extended(args) -> int:
    c = load_construction(args.file)
    smap, v0 = spatial_map_for(c, args.target)
    spec = PerturbationSpec(count=args.n, seed=args.seed, projector=constraint_projector(c))
    outcome = resolve_extended(smap, v0, spec)
    _print_outcome(args.target, outcome)
    return EXIT_OK if outcome.ok else EXIT_NOT_REMOVABLE


def _print_outcome(target: str, outcome) -> None:
    line = f"{target}: {outcome.status.value}"
    if outcome.value is not None:
        line += f"  value={_fmt_vec(outcome.value.vec)}  order={outcome.order}"
    if outcome.status is ResolveStatus.NOT_REMOVABLE:
        line += "  evidence=" + "; ".join(_fmt_vec(v) for v in outcome.evidence)
    if outcome.n is not None:
        line += f"  n={outcome.n} seed={outcome.seed}"
    print(line)


def cmd_table(args) -> int:
    print(run_table(args.scenario))
    return EXIT_OK


def cmd_serve(args) -> int:
    bridge.serve(host=args.host, port=args.port, transport=args.transport)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcgeo", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="evaluate a construction document")
    sp.add_argument("file")
    sp.add_argument("--perturb", action="append", metavar="id=dx,dy",
                    help="add (dx*d, dy*d) to a free element before evaluating")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("trace", help="sample the motion paths and resolve singular samples")
    sp.add_argument("file")
    sp.add_argument("--target", required=True)
    sp.add_argument("--samples", type=int, default=101)
    sp.add_argument("--csv", help="write t,status,x,y,z rows to this file")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("resolve", help="resolve one element at a path parameter")
    sp.add_argument("file")
    sp.add_argument("--target", required=True)
    sp.add_argument("--t0", type=float, required=True)
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("check-extended", help="spatial stability check of one element")
    sp.add_argument("file")
    sp.add_argument("--target", required=True)
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_check_extended)

    sp = sub.add_parser("table", help="print a built-in comparison table")
    sp.add_argument("scenario", choices=construct.SCENARIOS)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("serve", help="run the live session bridge")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8765)
    sp.add_argument("--transport", choices=("ws", "tcp"), default="ws")
    sp.set_defaults(func=cmd_serve)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConstructionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
