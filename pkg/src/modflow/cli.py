"""Command-line front end.

    modflow poly {flow,tension,chromatic,tutte,ehrhart} FILE [--method M] [--b B] [--verify]
    modflow check NAME FILE [--k K] [--l L]
    modflow geom {feasible-b,indegree-map,inside-out} FILE [--k K] [--l L] [--forest IDS]
    modflow corpus NAME [--max-vertices N] [--max-edges M] [--seed S]

Exit status: 0 all checks pass, 1 usage or parse error, 2 a check failed,
3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from itertools import product

from . import caps, checks, flows, geometry, tensions, tutte
from .checks import CheckResult, RunReport, format_vector, graph_summary
from .corpus import DEFAULT_SEED, exhaustive_graphs, random_graphs
from .errors import CapExceeded, GraphFormatError, InvalidInput
from .graph import format_graph, read_graph

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()]


def _forest_ids(text: str | None):
    return None if text is None else [int(x) for x in text.split(",") if x.strip()]


# -- poly -------------------------------------------------------------------------


def cmd_poly(args) -> RunReport:
    g = read_graph(args.file)
    report = RunReport(graph_summary(g), f"poly {args.which}")
    if args.b is not None and args.which != "ehrhart":
        raise InvalidInput("--b only applies to 'poly ehrhart'")
    method = args.method
    report.results["method"] = method or "deletion-contraction"
    if args.which == "flow":
        poly = flows.flow_polynomial(g, method or flows.DELETION_CONTRACTION)
        report.results["polynomial"] = poly.render("k")
        if args.verify:
            render = lambda p: p.render("k")
            report.checks += [
                CheckResult("flow enumerate", render(flows.flow_polynomial(g, flows.ENUMERATE)), render(poly)),
                CheckResult("flow deletion-contraction", render(flows.flow_polynomial(g)), render(poly)),
                CheckResult("flow ehrhart-fibers", render(geometry.flow_polynomial_from_fibers(g)), render(poly)),
                CheckResult(
                    "flow inside-out",
                    render(geometry.inside_out_flow_polynomial(g, forest=_forest_ids(args.forest))),
                    render(poly),
                ),
            ]
    elif args.which in ("tension", "chromatic"):
        m = method or tensions.DELETION_CONTRACTION
        if args.which == "tension":
            poly = tensions.tension_polynomial(g, m)
        else:
            poly = tensions.chromatic_polynomial(g, m)
        report.results["polynomial"] = poly.render("l")
        if args.verify:
            other = tensions.ENUMERATE if m == tensions.DELETION_CONTRACTION else tensions.DELETION_CONTRACTION
            alt = (tensions.tension_polynomial if args.which == "tension" else tensions.chromatic_polynomial)(g, other)
            report.checks.append(CheckResult(f"{args.which} {other}", alt.render("l"), poly.render("l")))
            if args.which == "chromatic":
                for l in range(1, 5):
                    report.checks.append(
                        CheckResult(f"chromatic colorings l={l}", tensions.count_proper_colorings(g, l), poly(l))
                    )
    elif args.which == "tutte":
        t = tutte.tutte_polynomial(g)
        report.results["polynomial"] = t.render()
        if args.verify:
            report.checks.append(CheckResult("tutte corank-nullity", tutte.tutte_corank_nullity(g).render(), t.render()))
    elif args.which == "ehrhart":
        if args.b is None:
            raise InvalidInput("'poly ehrhart' needs --b")
        b = tuple(_int_list(args.b))
        poly = geometry.ehrhart_polynomial(g, b)
        report.results["b"] = format_vector(b)
        report.results["polynomial"] = poly.render("k")
        if args.verify:
            for k in range(1, 4):
                lhs, rhs = geometry.ehrhart_macdonald_sides(g, b, k)
                report.checks.append(CheckResult(f"ehrhart-macdonald k={k}", lhs, rhs))
    return report


# -- check ------------------------------------------------------------------------


def cmd_check(args) -> RunReport:
    g = read_graph(args.file)
    report = RunReport(graph_summary(g), f"check {args.which}")
    report.checks = checks.run_check(args.which, g, k=args.k, l=args.l)
    return report


# -- geom -------------------------------------------------------------------------


def cmd_geom(args) -> RunReport:
    g = read_graph(args.file)
    report = RunReport(graph_summary(g), f"geom {args.which}")
    if args.which == "feasible-b":
        report.results["feasible_b"] = [format_vector(b) for b in geometry.feasible_b_set(g)]
    elif args.which == "indegree-map":
        report.results["indegree_map"] = [
            {"b": format_vector(b), "indegree": format_vector(i)} for b, i in geometry.indegree_map(g).items()
        ]
    elif args.which == "inside-out":
        forest = _forest_ids(args.forest)
        report.results["forest"] = ",".join(str(e) for e in tensions.cycle_basis(g, forest).forest)
        report.results["k"] = args.k
        report.results["flow_count"] = geometry.inside_out_flow_count(g, args.k, forest)
        if args.l is not None:
            report.results["l"] = args.l
            report.results["tension_count"] = geometry.inside_out_tension_count(g, args.l, forest)
    return report


# -- corpus -----------------------------------------------------------------------


def cmd_corpus(args) -> RunReport:
    graphs = list(exhaustive_graphs(args.max_vertices, args.max_edges))
    n_exhaustive = len(graphs)
    graphs += random_graphs(args.random, args.random_max_vertices, args.random_max_edges, args.seed)
    params = checks.PARAMETERS[args.which]
    ks = range(1, args.k + 1) if "k" in params else [1]
    ls = range(1, (args.l or 3) + 1) if "l" in params else [1]
    tally: dict[str, list[int]] = {}
    first_failure = None
    for g in graphs:
        for l, k in product(ls, ks):
            label = " ".join(f"{p}={dict(k=k, l=l)[p]}" for p in params)
            passed = total = 0
            for c in checks.run_check(args.which, g, k=k, l=l):
                total += 1
                passed += c.passed
                if not c.passed and first_failure is None:
                    first_failure = {"graph": format_graph(g).strip().replace("\n", "; "), **c.to_dict()}
            entry = tally.setdefault(f"{args.which} {label}", [0, 0])
            entry[0] += passed
            entry[1] += total
    report = RunReport(
        {
            "max_vertices": args.max_vertices,
            "max_edges": args.max_edges,
            "exhaustive": n_exhaustive,
            "random": args.random,
            "seed": args.seed,
        },
        f"corpus {args.which}",
    )
    report.results["graphs"] = len(graphs)
    report.results["first_counterexample"] = first_failure if first_failure else "none"
    report.checks = [CheckResult(name, p, t) for name, (p, t) in tally.items()]
    return report


# -- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modflow", description="Modular flow, tension and Tutte polynomials with reciprocity checks.")
    parser.add_argument("--json", action="store_true", help="emit one structured object instead of text")
    parser.add_argument("--cap-subsets", type=int, default=None, help="largest |E| for 2^|E| scans")
    parser.add_argument("--cap-scan", type=int, default=None, help="largest residue scan size")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="compute a graph polynomial")
    p.add_argument("which", choices=["flow", "tension", "chromatic", "tutte", "ehrhart"])
    p.add_argument("file")
    p.add_argument("--method", choices=["deletion-contraction", "enumerate"])
    p.add_argument("--forest", help="comma-separated forest edge ids (inside-out route)")
    p.add_argument("--b", help="feasible right-hand side, e.g. -1,1")
    p.add_argument("--verify", action="store_true", help="cross-check against the other methods")
    p.set_defaults(func=cmd_poly)

    c = sub.add_parser("check", help="verify one identity on one graph")
    c.add_argument("which", choices=sorted(checks.CHECKS))
    c.add_argument("file")
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--l", type=int, default=2)
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("geom", help="feasible right-hand sides and inside-out counts")
    g.add_argument("which", choices=["feasible-b", "indegree-map", "inside-out"])
    g.add_argument("file")
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--l", type=int, default=None)
    g.add_argument("--forest")
    g.set_defaults(func=cmd_geom)

    r = sub.add_parser("corpus", help="run an identity over generated graphs")
    r.add_argument("which", choices=sorted(checks.CHECKS))
    r.add_argument("--max-vertices", type=int, default=3)
    r.add_argument("--max-edges", type=int, default=4)
    r.add_argument("--seed", type=int, default=DEFAULT_SEED)
    r.add_argument("--random", type=int, default=50, help="number of seeded random graphs")
    r.add_argument("--random-max-vertices", type=int, default=5)
    r.add_argument("--random-max-edges", type=int, default=7)
    r.add_argument("--k", type=int, default=3, help="check k = 1..K")
    r.add_argument("--l", type=int, default=3, help="check l = 1..L")
    r.set_defaults(func=cmd_corpus)
    return parser


def _attach_values(argv: list[str]) -> list[str]:
    """Glue ``--b -1,1`` into ``--b=-1,1`` so argparse does not read the value as a flag."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--b", "--forest") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_values(argv))
    saved = (caps.MAX_SUBSET_EDGES, caps.MAX_RESIDUE_SCAN)
    if args.cap_subsets is not None:
        caps.MAX_SUBSET_EDGES = args.cap_subsets
    if args.cap_scan is not None:
        caps.MAX_RESIDUE_SCAN = args.cap_scan
    try:
        report = args.func(args)
    except GraphFormatError as exc:
        print(f"modflow: {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidInput, OSError) as exc:
        print(f"modflow: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"modflow: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    finally:
        caps.MAX_SUBSET_EDGES, caps.MAX_RESIDUE_SCAN = saved
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
