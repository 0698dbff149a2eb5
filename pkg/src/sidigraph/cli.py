"""Command-line front end.

Exit codes: 0 success, 1 a check, property or method failed, 2 usage, parse
or I/O error.  JSON output uses sorted keys so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis
from .charpoly import DEFAULT_ENUMERATION_CAP, EnumerationCapError, charpoly_enumerate, charpoly_trace, linear_type_census
from .corpus import FAMILIES, PROPERTIES, PROPERTY_GROUPS, CorpusConfig, run_corpus
from .graph import (
    GraphError,
    NepsBasis,
    SignedDigraph,
    neps,
    parse_sidigraph,
    serialize_sidigraph,
    strong_components,
    to_json,
)
from .reproduce import SECTIONS, format_table, run_section
from .rootfinding import RootFindingError
from .spectra import (
    CLUSTER_TOL,
    EnergyReport,
    ImaginaryAxisError,
    QuadratureError,
    coulson_energy,
    coulson_log_energy,
    roots,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

METHODS = ("algebraic", "coulson", "coulson-log")


class UsageError(Exception):
    pass


def _read_graph(path: str) -> SignedDigraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_sidigraph(text)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _spectrum(graph: SignedDigraph, args):
    from .charpoly import charpoly

    return roots(charpoly(graph), args.tol)


def _energy_reports(graph: SignedDigraph, methods, args) -> tuple[dict, bool]:
    """Energy by each requested method; failures are recorded, not raised."""
    out = {}
    failed = False
    spec = _spectrum(graph, args)
    for method in methods:
        try:
            if method == "algebraic":
                report = EnergyReport(spec.energy(), "algebraic", {"root_residual_max": spec.residual})
            elif method == "coulson":
                report = coulson_energy(graph)
            else:
                report = coulson_log_energy(graph)
            out[method] = report.to_json()
        except ImaginaryAxisError as exc:
            out[method] = {"skipped": str(exc)}
        except (QuadratureError, RootFindingError) as exc:
            out[method] = {"error": str(exc)}
            failed = True
    return out, failed


def _methods(value: str) -> list[str]:
    names = [m.strip() for m in value.split(",") if m.strip()]
    for m in names:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}; expected some of {','.join(METHODS)}")
    return names


def _charpoly(graph: SignedDigraph, args):
    if args.cap is not None and graph.n <= args.cap:
        enumerated = charpoly_enumerate(graph, args.cap)
        traced = charpoly_trace(graph)
        if enumerated != traced:
            raise analysis.TheoremViolation("enumeration and trace characteristic polynomials differ")
        return traced
    return charpoly_trace(graph)


# ----------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    graph = _read_graph(args.graph)
    p = _charpoly(graph, args)
    spec = _spectrum(graph, args)
    energies, failed = _energy_reports(graph, _methods(args.methods), args)
    balance = analysis.is_cycle_balanced(graph)
    cls = analysis.zero_energy_class(graph)
    a, attained = analysis.arc_bound_check(graph)
    walks = {str(m): analysis.closed_walk_balance(graph, m) for m in range(1, min(graph.n, 6) + 1)} if graph.num_arcs else {}
    report = {
        "graph": to_json(graph),
        "charpoly": {"coefficients": p.to_json(), "text": str(p)},
        "spectrum": spec.to_json(),
        "energy": energies,
        "balance": balance.to_json(),
        "zero_energy_class": cls.to_json(),
        "bounds": {"mcclelland": analysis.mcclelland_bound(graph), "arcs": a, "arc_bound_attained": attained},
        "closed_walk_balance": walks,
        "strong_components": len(strong_components(graph)),
    }
    if graph.n <= (args.cap or DEFAULT_ENUMERATION_CAP):
        report["linear_type_census"] = linear_type_census(graph, args.cap).to_dict()
    lines = [
        f"vertices {graph.n}, arcs {graph.num_arcs}",
        f"charpoly {p}",
        *(f"energy[{m}] {r.get('energy', r.get('error', r.get('skipped')))}" for m, r in energies.items()),
        f"cycle balanced {balance.balanced}" + ("" if balance.balanced else f" (negative cycle {list(balance.cycle)})"),
        f"zero-energy class {cls.tag.value}",
        f"McClelland bound {report['bounds']['mcclelland']:.12g}",
        f"arc bound {a} (attained: {attained})",
    ]
    _emit(args, report, "\n".join(lines))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_energy(args) -> int:
    graph = _read_graph(args.graph)
    energies, failed = _energy_reports(graph, _methods(args.methods), args)
    text = "\n".join(f"{m} {r.get('energy', r.get('error', r.get('skipped')))}" for m, r in energies.items())
    _emit(args, {"energy": energies}, text)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_charpoly(args) -> int:
    graph = _read_graph(args.graph)
    if args.method == "enumerate":
        p = charpoly_enumerate(graph, args.cap)
    elif args.method == "trace":
        p = charpoly_trace(graph)
    else:
        p = _charpoly(graph, args)
    payload = {"coefficients": p.to_json(), "text": str(p)}
    if args.census:
        payload["linear_type_census"] = linear_type_census(graph, args.cap).to_dict()
    _emit(args, payload, str(p))
    return EXIT_OK


def cmd_balance(args) -> int:
    graph = _read_graph(args.graph)
    witness = analysis.is_cycle_balanced(graph)
    if witness.balanced:
        text = "balanced; potential " + " ".join(f"{s:+d}" for s in witness.potential)
    else:
        text = "unbalanced; negative cycle " + " -> ".join(map(str, witness.cycle))
    _emit(args, witness.to_json(), text)
    return EXIT_OK


def _parse_basis(value: str, m: int) -> NepsBasis:
    if value == "cartesian":
        return NepsBasis.cartesian(m)
    if value == "kronecker":
        return NepsBasis.kronecker(m)
    tuples = []
    for word in value.split(","):
        word = word.strip()
        if not word or any(ch not in "01" for ch in word):
            raise UsageError(f"bad basis tuple {word!r}; use binary words like 10,01")
        tuples.append(tuple(int(ch) for ch in word))
    return NepsBasis(m, tuple(tuples))


def cmd_neps(args) -> int:
    factors = [_read_graph(path) for path in args.graphs]
    basis = _parse_basis(args.basis, len(factors))
    product = neps(factors, basis)
    payload = {"basis": [list(b) for b in basis], "graph": to_json(product)}
    status = EXIT_OK
    if args.check_balance:
        try:
            payload["balanced"] = analysis.neps_balance_check(factors, basis)
        except analysis.TheoremViolation as exc:
            payload["violation"] = str(exc)
            status = EXIT_FAIL
    _emit(args, payload, serialize_sidigraph(product))
    return status


def cmd_pair(args) -> int:
    base = _read_graph(args.base) if args.base else None
    first, second, report = analysis.equienergetic_pair(args.n, args.kind, base=base, m=args.m)
    payload = {"first": to_json(first), "second": to_json(second), "report": report.to_json()}
    text = "\n".join(
        [
            f"{args.kind}: order {report.order}, energies {report.energies[0]:.12g} / {report.energies[1]:.12g}",
            *(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in report.checks.items()),
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK if report.verified else EXIT_FAIL


def cmd_reproduce(args) -> int:
    results = run_section(args.section)
    passed = all(c.passed for _, checks in results for c in checks)
    payload = {
        "sections": {key: [c.to_json() for c in checks] for key, checks in results},
        "passed": passed,
    }
    _emit(args, payload, format_table(results))
    return EXIT_OK if passed else EXIT_FAIL


def cmd_corpus(args) -> int:
    config = CorpusConfig(
        seed=args.seed,
        count=args.count,
        n_min=args.n_min,
        n_max=args.n_max,
        arc_density=args.arc_density,
        negative_fraction=args.negative_fraction,
        family=args.family,
    )
    props = [p for item in args.properties for p in item.split(",") if p]
    summary = run_corpus(config, props, search=args.search, dump_dir=args.dump_dir)
    lines = [f"{name}: {c['checked']} checked, {c['violations']} violations" for name, c in summary["properties"].items()]
    lines.append(f"total violations {summary['total_violations']}")
    if "search" in summary:
        lines.append(f"search {summary['search']['mode']}: {len(summary['search']['hits'])} hits")
    _emit(args, summary, "\n".join(lines))
    return EXIT_FAIL if summary["total_violations"] else EXIT_OK


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    common.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="enumeration cap on vertex count")
    common.add_argument("--tol", type=float, default=CLUSTER_TOL, help="root clustering tolerance")

    parser = argparse.ArgumentParser(prog="sidigraph", description="Spectra and energy of signed digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for one graph file")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--methods", default=",".join(METHODS))
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("energy", parents=[common], help="energy by one or more methods")
    p.add_argument("graph")
    p.add_argument("--methods", default="algebraic")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("charpoly", parents=[common], help="exact characteristic polynomial")
    p.add_argument("graph")
    p.add_argument("--method", choices=("auto", "enumerate", "trace"), default="auto")
    p.add_argument("--census", action="store_true", help="include the linear subdigraph type census")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("balance", parents=[common], help="cycle balance with witness")
    p.add_argument("graph")
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("neps", parents=[common], help="NEPS product of graph files")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--basis", default="cartesian", help="cartesian, kronecker, or binary words such as 10,01,11")
    p.add_argument("--check-balance", action="store_true")
    p.set_defaults(func=cmd_neps)

    p = sub.add_parser("pair", parents=[common], help="equienergetic pair generator")
    p.add_argument("n", type=int)
    p.add_argument("kind", choices=analysis.KINDS)
    p.add_argument("--m", type=int, default=None, help="skew star order for kron-skew")
    p.add_argument("--base", default=None, help="base graph file for kron-skew")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("reproduce", parents=[common], help="golden-value suite")
    p.add_argument("section", choices=[*SECTIONS, "all"])
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("corpus", parents=[common], help="seeded random corpus property runner")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--arc-density", type=float, default=0.4)
    p.add_argument("--negative-fraction", type=float, default=0.5)
    p.add_argument("--family", choices=FAMILIES, default="random")
    p.add_argument(
        "--properties",
        action="append",
        default=None,
        help=f"comma-separated; groups {sorted(PROPERTY_GROUPS)}, names {sorted(PROPERTIES)}",
    )
    p.add_argument("--search", choices=("energy-equals-n",), default=None)
    p.add_argument("--dump-dir", default=None, help="write each violating graph here")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "properties", "unset") is None:
        args.properties = ["bounds"]
    try:
        return args.func(args)
    except (GraphError, UsageError, EnumerationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except analysis.TheoremViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
