"""The `betti` command line: parse diagrams, run computations, print reports.

Exit codes: 0 for success or a positive membership verdict, 2 for an
obstructed or non-member diagram, 1 for usage and parse errors.  stdout is
the only data channel; diagnostics go to stderr.
"""

import argparse
import json
import sys

from .diagram import DegreeWindow, DiagramError, parse_diagram
from .fan import NotInCone, decompose, enumerate_chains, format_chain, in_lattice, parse_chain
from .lattice import (
    determinant,
    generator_bound,
    phi_matrix,
    semigroup_generators,
    universal_denominator,
)
from .obstructions import OBSTRUCTED, battery, buchsbaum_rim_table
from .pure import normalized_pure, pure_diagram


def _int_list(text):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="betti",
        description="Exact computations in the cone and semigroup of graded Betti diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pure", help="print the pure diagram of a degree sequence")
    p.add_argument("degrees", type=_int_list, metavar="d0,d1,...")
    p.add_argument("--normalized", action="store_true", help="beta_0 = 1 normalization")

    p = sub.add_parser("decompose", help="greedy pure decomposition of a diagram")
    p.add_argument("file", nargs="?", help="diagram file (default: stdin)")

    p = sub.add_parser("member", help="cone and lattice membership of a diagram")
    p.add_argument("file", nargs="?", help="diagram file (default: stdin)")

    p = sub.add_parser("chains", help="list the chains of a degree window")
    p.add_argument("--dlow", type=_int_list, required=True)
    p.add_argument("--dhigh", type=_int_list, required=True)

    p = sub.add_parser("gens", help="minimal semigroup generators of a simplex")
    p.add_argument("--dlow", type=_int_list, required=True)
    p.add_argument("--dhigh", type=_int_list, required=True)
    p.add_argument("--chain", help='chain as "(0)>(0,3)>..." (default: first maximal chain)')
    p.add_argument("--witness", action="store_true", help="print the Hilbert-basis witness")

    p = sub.add_parser("check", help="run the obstruction battery on a diagram")
    p.add_argument("file", nargs="?", help="diagram file (default: stdin)")
    p.add_argument("--no-split-search", action="store_true")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("br", help="Betti table of a Buchsbaum-Rim complex")
    p.add_argument("--target", type=int, required=True, metavar="a")
    p.add_argument("--degrees", type=_int_list, required=True, metavar="j1,j2,...")

    p = sub.add_parser("hilbert", help="Hilbert numerator and function of a diagram")
    p.add_argument("file", nargs="?", help="diagram file (default: stdin)")
    p.add_argument("--vars", type=int, default=3, help="number of ring variables")
    p.add_argument("--tmax", type=int, default=None, help="last degree to print")

    return parser


def _read_diagram(args, stdin):
    if args.file:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = stdin if isinstance(stdin, str) else (stdin.read() if stdin else "")
    return parse_diagram(text)


def _format_terms(terms):
    return [f"{c} * pi{tuple(d)}" for c, d in terms]


def _pick_chain(args, window):
    if args.chain:
        chain = parse_chain(args.chain)
    else:
        chains = [c for c in enumerate_chains(window)]
        top = max(len(c) for c in chains)
        chain = next(c for c in chains if len(c) == top)
    return chain


def run(argv, stdin=None):
    """Execute one command; returns (exit code, stdout text, stderr text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return 1, "", "usage error\n"
    out = []
    try:
        if args.command == "pure":
            if args.normalized:
                out.append(normalized_pure(args.degrees).diagram().format())
            else:
                out.append(pure_diagram(args.degrees).diagram.format())

        elif args.command == "decompose":
            D = _read_diagram(args, stdin)
            try:
                terms = decompose(D)
            except NotInCone as exc:
                return 2, "", f"not in the cone: {exc}\n"
            out.extend(line + "\n" for line in _format_terms(terms))

        elif args.command == "member":
            D = _read_diagram(args, stdin)
            try:
                terms = decompose(D)
            except NotInCone as exc:
                out.append("IN_CONE false\nIN_LATTICE false\n")
                return 2, "".join(out), f"not in the cone: {exc}\n"
            out.append("IN_CONE true\n")
            out.append(f"IN_LATTICE {'true' if D.is_integral() else 'false'}\n")
            out.extend(line + "\n" for line in _format_terms(terms))
            return (0 if D.is_integral() else 2), "".join(out), ""

        elif args.command == "chains":
            window = DegreeWindow(args.dlow, args.dhigh)
            for chain in enumerate_chains(window):
                out.append(format_chain(chain) + "\n")

        elif args.command == "gens":
            window = DegreeWindow(args.dlow, args.dhigh)
            chain = _pick_chain(args, window)
            m = universal_denominator(chain, window)
            det = abs(determinant(phi_matrix(chain, window)))
            bound = generator_bound(chain, window)
            gens = semigroup_generators(chain, window)
            out.append(f"m={m} det={det} bound={bound} count={len(gens)}\n")
            for diagram, witness in gens:
                if args.witness:
                    out.append(f"# a = {tuple(witness)}\n")
                out.append(diagram.format())
                out.append("\n")

        elif args.command == "check":
            D = _read_diagram(args, stdin)
            report = battery(D, split_search_enabled=not args.no_split_search)
            if args.as_json:
                payload = {
                    "verdict": report.verdict,
                    "findings": [
                        {
                            "kind": f.kind,
                            "side": f.applied_to,
                            "lhs": str(f.lhs),
                            "rhs": str(f.rhs),
                            "note": f.note,
                        }
                        for f in report.findings
                    ],
                    "notes": list(report.notes),
                }
                out.append(json.dumps(payload, sort_keys=True) + "\n")
            else:
                out.append(report.verdict + "\n")
                for f in report.findings:
                    out.append(f"{f.kind} {f.applied_to} {f.lhs} {f.rhs}\n")
            return (2 if report.verdict == OBSTRUCTED else 0), "".join(out), ""

        elif args.command == "br":
            out.append(buchsbaum_rim_table(args.target, args.degrees).format())

        elif args.command == "hilbert":
            D = _read_diagram(args, stdin)
            poly = D.hilbert_numerator()
            terms = " + ".join(f"{c}*t^{j}" for j, c in sorted(poly.items()))
            out.append(f"numerator {terms or '0'}\n")
            out.append(f"codimension {D.codimension()}\n")
            tmax = args.tmax if args.tmax is not None else max(j for _, j in D.entries)
            h = D.hilbert_function(args.vars, tmax)
            out.append("h " + " ".join(str(h[t]) for t in range(tmax + 1)) + "\n")

    except (DiagramError, OSError, ValueError) as exc:
        return 1, "".join(out), f"error: {exc}\n"
    return 0, "".join(out), ""


def main(argv=None):
    code, stdout, stderr = run(
        list(sys.argv[1:] if argv is None else argv),
        stdin=sys.stdin if not sys.stdin.isatty() else "",
    )
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
