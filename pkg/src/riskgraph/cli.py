"""Command-line entry point.

Exit codes: 0 success, 1 validation failure (including failed verify
checks), 2 I/O failure.
"""

import argparse
import logging
import sys

from . import clustering, connectivity, report, verify
from .errors import IoError, RiskGraphError, ValidationError
from .fileio import graph_from_json, load_json, threats_from_json
from .risk import ThreatProfile, assess

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="riskgraph", description="Risk classification and robustness analysis of network graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, threats_required=True, k_required=False):
        p.add_argument("--graph", required=True, metavar="PATH", help="graph JSON file")
        p.add_argument("--threats", required=threats_required, metavar="PATH", help="threats JSON file")
        p.add_argument("-k", type=_positive_int, required=k_required, metavar="K", help="number of risk classes")
        p.add_argument("--format", choices=("json", "dot", "text"), default="text")

    common(sub.add_parser("risk", help="print the per-vertex risk table"))
    common(sub.add_parser("classify", help="farthest-first classification with optimality audit"),
           k_required=True)
    p = sub.add_parser("connectivity", help="global and per-pair connectivity")
    common(p, threats_required=False)
    p.add_argument("--pairs", action="append", default=[], metavar="LABEL,LABEL",
                   help="vertex pair for local connectivity (repeatable)")
    p.add_argument("--witness", action="store_true", help="include disjoint-path witnesses")
    p = sub.add_parser("verify", help="compare against exact and exhaustive oracles")
    common(p)
    p.add_argument("--pairs", action="append", default=[], metavar="LABEL,LABEL")
    p.add_argument("--seed", type=int, default=None, help="also run seeded random self-tests")
    common(sub.add_parser("export-dot", help="DOT graph colored by risk class"), k_required=True)
    return parser


def _pairs(g, specs):
    out = []
    for spec in specs:
        parts = spec.split(",")
        if len(parts) != 2:
            raise ValidationError(f"--pairs expects LABEL,LABEL, got {spec!r}")
        out.append((g.vertex_id(parts[0]), g.vertex_id(parts[1])))
    return out


def _run(args) -> tuple[str, bool]:
    gfile = load_json(args.graph)
    g = graph_from_json(gfile.data, args.graph)
    digests = {"graph_sha256": gfile.sha256}
    if args.threats:
        tfile = load_json(args.threats)
        profile = threats_from_json(tfile.data, g, args.threats)
        digests["threats_sha256"] = tfile.sha256
    else:
        profile = ThreatProfile(g.n)
    a = assess(g, profile)
    params = {"k": args.k, "format": args.format}
    rep = {}

    if args.command in ("classify", "export-dot"):
        c = clustering.farthest_first(a, args.k)
        if args.command == "export-dot" or args.format == "dot":
            return report.export_dot(g, a, c), True
        rep["risk"] = report.risk_section(g, a)
        rep["clustering"] = report.clustering_section(g, c, clustering.audit(a, args.k))
    elif args.format == "dot":
        raise ValidationError("--format dot is only available for classify and export-dot")
    elif args.command == "risk":
        rep["risk"] = report.risk_section(g, a)
    elif args.command == "connectivity":
        pairs = _pairs(g, args.pairs)
        params.update(pairs=args.pairs, witness=args.witness)
        cr = connectivity.connectivity_report(g, pairs, witnesses=args.witness)
        rep["connectivity"] = report.connectivity_section(g, cr)
    elif args.command == "verify":
        pairs = _pairs(g, args.pairs)
        params.update(pairs=args.pairs, seed=args.seed)
        checks = verify.verify_instance(g, a, [args.k] if args.k else None, pairs)
        if args.seed is not None:
            checks += verify.self_test(args.seed)
        rep["checks"] = checks
        rep["passed"] = all(c["passed"] is not False for c in checks)

    rep["provenance"] = report.provenance(args.command, params, digests)
    ok = rep.get("passed", True)
    if args.format == "json":
        return report.serialize_report(rep), ok
    return report.render_text(rep), ok


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text, ok = _run(args)
    except SystemExit as exc:  # --help
        return exc.code or 0
    except IoError as exc:
        print(f"riskgraph: error: {exc.kind}: {exc}", file=stderr)
        return EXIT_IO
    except RiskGraphError as exc:
        print(f"riskgraph: error: {exc.kind}: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(text)
    return EXIT_OK if ok else EXIT_INVALID


def main():
    logging.basicConfig(format="riskgraph: warning: %(message)s", level=logging.WARNING)
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
