"""Command-line interface.

Subcommands: analyze, synth, classify, betti, zdiagram, mrtable,
verify-paper.  Exit codes: 0 ok, 1 verification failure, 2 input error,
3 envelope error.  All rationals print exactly; JSON output is
byte-deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .apolarity import (
    Socle,
    gorenstein_check,
    hilbert_function,
    synth_power_sum,
)
from .charge import TwistComplex, charge, cone_charge
from .errors import (
    DegenerateInputError,
    EnvelopeError,
    ParseError,
    SocleKitError,
)
from .exceptional import mr_grid, mr_grid_text
from .resolution import hf_from_betti, koszul_betti
from .strata import (
    catalog_supported,
    classify,
    parity_point,
    zdiagram,
    zdiagram_json,
    zdiagram_svg,
)
from . import verify as verification

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_ENVELOPE = 3


def _json_dumps(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True)


def _read_input(args) -> str:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return fh.read()
    if args.input is None:
        raise ParseError("no input given: pass a polynomial or --file")
    return args.input


def _load_socle(args) -> Socle:
    return Socle.parse(_read_input(args), n=args.n)


def analysis_report(g: Socle) -> dict:
    """The full invariant report of one socle, JSON-ready."""
    diag = gorenstein_check(g)
    table = koszul_betti(g)
    warnings: list[str] = []
    stratum = None
    if catalog_supported(g.n, g.d):
        entry = classify(g)
        stratum = entry.label if entry else "unclassified"
    else:
        warnings.append(f"no stratum catalog for (n={g.n}, d={g.d})")
    if hf_from_betti(table) != diag.hilbert_function:
        raise AssertionError("internal inconsistency between table and ranks")
    s = parity_point(g.d)
    e = (g.d + 1) // 2
    source = charge(TwistComplex.line_bundle(g.n, e), s)
    report = {
        "socle": g.text(),
        "n": g.n,
        "d": g.d,
        "hilbert_function": list(diag.hilbert_function),
        "gorenstein": {
            "socle_dimension_ok": diag.socle_dimension_ok,
            "palindromic": diag.palindromic,
            "catalecticant_transpose_ok": diag.catalecticant_transpose_ok,
        },
        "betti": {
            "entries": [list(t) for t in table.entries],
            "grid_rows": table.grid(),
        },
        "stratum": stratum,
        "charge": {
            "evaluation_point": str(s),
            "source_twist": e,
            "source": [str(source.x), str(source.y)],
        },
        "warnings": warnings,
    }
    if g.d % 2 == 0 and g.n >= 1:
        cone = cone_charge(table, g.d // 2, 0)
        report["charge"]["cone"] = [str(cone.x), str(cone.y)]
    return report


def _format_report_text(report: dict) -> str:
    lines = [
        f"socle: {report['socle']}",
        f"n = {report['n']}, d = {report['d']}",
        f"hilbert function: {report['hilbert_function']}",
        f"stratum: {report['stratum']}",
        "betti table (rows j - i):",
    ]
    for row in report["betti"]["grid_rows"]:
        lines.append("  " + " ".join(str(v).rjust(3) for v in row))
    c = report["charge"]
    lines.append(
        f"charge at {c['evaluation_point']} of O({c['source_twist']}): "
        f"({c['source'][0]}, {c['source'][1]})"
    )
    if "cone" in c:
        lines.append(f"cone charge: ({c['cone'][0]}, {c['cone'][1]})")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    g = _load_socle(args)
    report = analysis_report(g)
    if args.format == "json":
        print(_json_dumps(report))
    else:
        print(_format_report_text(report))
    return EXIT_OK


def cmd_synth(args) -> int:
    spec = json.loads(_read_input(args))
    try:
        points = spec["points"]
        weights = [Fraction(str(w)) for w in spec.get("weights", [1] * len(points))]
        degree = int(spec["degree"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad synthesis spec: {exc}") from exc
    vectors = [[Fraction(str(c)) for c in p] for p in points]
    g = synth_power_sum(vectors, weights, degree)
    print(g.text())
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_socle(args)
    if not catalog_supported(g.n, g.d):
        raise EnvelopeError(f"no stratum catalog for (n={g.n}, d={g.d})")
    entry = classify(g)
    if args.format == "json":
        payload = {"socle": g.text(), "stratum": entry.label if entry else "unclassified"}
        if entry:
            payload.update(
                {
                    "hilbert_function": list(entry.hilbert_function),
                    "kernel_object": entry.kernel_object,
                    "dimension": entry.dimension,
                }
            )
        print(_json_dumps(payload))
    else:
        if entry is None:
            print("unclassified")
        else:
            print(
                f"{entry.label}  (kernel {entry.kernel_object}, "
                f"dimension {entry.dimension})"
            )
    return EXIT_OK


def cmd_betti(args) -> int:
    g = _load_socle(args)
    table = koszul_betti(g)
    if args.format == "json":
        print(
            _json_dumps(
                {"n": table.n, "d": table.d, "entries": [list(t) for t in table.entries]}
            )
        )
    else:
        print(table.to_text())
    return EXIT_OK


def cmd_zdiagram(args) -> int:
    nodes = zdiagram(args.n, args.d)
    if args.format == "svg":
        print(zdiagram_svg(nodes))
    elif args.format == "json":
        print(_json_dumps(zdiagram_json(nodes)))
    else:
        for node in nodes:
            reason = f"  [{node.reason}]" if node.reason else ""
            print(
                f"{node.name:10s} ({node.point.x}, {node.point.y})  "
                f"{node.status}/{node.kind}{reason}"
            )
    return EXIT_OK


def cmd_mrtable(args) -> int:
    grid = mr_grid(refined=not args.naive)
    if args.format == "json":
        payload = {
            "kind": "naive" if args.naive else "refined",
            "rows": [
                {
                    "rank": r,
                    "values": {str(c): (None if v is None else str(v)) for c, v in row.items()},
                }
                for r, row in sorted(grid.items())
            ],
        }
        print(_json_dumps(payload))
    else:
        print(mr_grid_text(grid))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = verification.run_all(seed=args.seed)
    if args.format == "json":
        payload = [
            {
                "id": r.ident,
                "name": r.name,
                "expected": r.expected,
                "actual": r.actual,
                "pass": r.passed,
            }
            for r in results
        ]
        print(_json_dumps(payload))
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{mark}  {r.ident:4s} {r.name}")
            if not r.passed:
                print(f"      expected: {r.expected}")
                print(f"      actual:   {r.actual}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soclekit",
        description="Exact invariants and stability strata of degree-d socles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_socle_input(p):
        p.add_argument("input", nargs="?", help="polynomial text (or use --file)")
        p.add_argument("--file", help="read the input from a file")
        p.add_argument("--n", type=int, default=None, help="ambient dimension override")

    p = sub.add_parser("analyze", help="full invariant report for one socle")
    add_socle_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synth", help="power-sum socle from a points+weights JSON spec")
    p.add_argument("input", nargs="?", help='e.g. \'{"points": [[1,0],[0,1]], "degree": 3}\'')
    p.add_argument("--file", help="read the spec from a file")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("classify", help="stratum label of a socle")
    add_socle_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("betti", help="betti table of a socle")
    add_socle_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("zdiagram", help="charge diagram nodes for (n, d)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p.set_defaults(func=cmd_zdiagram)

    p = sub.add_parser("mrtable", help="semistable maxima by rank and slope data")
    p.add_argument("--naive", action="store_true", help="discriminant-only bound")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_mrtable)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DegenerateInputError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnvelopeError as exc:
        print(f"envelope error: {exc}", file=sys.stderr)
        return EXIT_ENVELOPE
    except SocleKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
