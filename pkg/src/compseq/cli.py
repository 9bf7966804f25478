"""Command-line interface.

Three subcommands: ``analyze`` reads one digraph (matrix or edge-list
text, auto-detected) and emits a JSON report of the chain, the verdict,
and any limits; ``verify`` runs a seeded differential campaign of random
instances through the analytic-vs-simulation harness; ``export`` renders
the class skeleton, the limit graph, or one m-step competition graph as
DOT.

Exit codes: analyze returns 0 when the sequence converges, 2 when it
diverges, 1 on any input error; verify returns 0 when every instance
passes, 2 when a counterexample is found; export returns 0 on success.
All output is byte-deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import oracle, theory
from .bmat import ParseError
from .graphs import (
    Digraph,
    NotLinearlyConnectedError,
    SelfLoopError,
    component_chain,
    format_edge_list,
    imprimitivity,
    parse_digraph,
    to_matrix,
)

__all__ = ["main", "cmd_analyze", "cmd_verify", "cmd_export"]


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _read_input(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _detect_format(text: str) -> str:
    first = text.splitlines()[0].split() if text.splitlines() else []
    return "matrix" if len(first) == 1 else "edge-list"


def _load_digraph(path: str) -> Digraph:
    return parse_digraph(_read_input(path))


def _chain_report(chain, imp) -> dict:
    components = []
    for p, comp in enumerate(chain.components, start=1):
        components.append(
            {
                "vertices": sorted(comp),
                "trivial": chain.trivial_flags[p - 1],
                "kappa": imp.kappa(p),
                "classes": [sorted(imp.class_set(p, j)) for j in range(1, imp.kappa(p) + 1)],
            }
        )
    return {"eta": chain.eta, "components": components}


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        text = _read_input(args.input)
    except OSError as e:
        return _fail(str(e))
    try:
        d = parse_digraph(text)
        chain = component_chain(d)
    except (ParseError, SelfLoopError, NotLinearlyConnectedError, ValueError) as e:
        return _fail(str(e))
    imp = imprimitivity(d, chain)
    verdict = theory.converges(d, chain=chain, imp=imp)

    report: dict = {
        "schema": 1,
        "input": {
            "path": args.input,
            "format": _detect_format(text),
            "n": d.n,
            "arcs": [list(a) for a in sorted(d.arcs)],
        },
        "chain": _chain_report(chain, imp),
        "verdict": {
            "converged": verdict.converged,
            "rule": verdict.rule,
            "witness": None
            if verdict.witness is None
            else {
                "j1": verdict.witness.j1,
                "j2": verdict.witness.j2,
                "excluded_residue": verdict.witness.excluded_residue,
            },
        },
        "skeleton": None,
        "limit": None,
        "jbd": None,
    }

    all_nontrivial = not any(chain.trivial_flags)
    if all_nontrivial:
        sk = theory.cs_graph(d, chain, imp)
        report["skeleton"] = {
            "class_counts": list(sk.class_counts),
            "edges": sorted([p, i, q, j] for (p, i), (q, j) in sk.edges),
        }
        limit = theory.limit_graph(d, chain, imp)
        report["limit"] = {
            "source": "analytic",
            "edges": [list(e) for e in sorted(limit.edges)],
        }
        jbd = theory.jbd_condition(d, chain, imp)
        report["jbd"] = {
            "source": "analytic",
            "holds": jbd.holds,
            "failing_level": jbd.failing_level,
            "detail": jbd.detail,
        }
    elif verdict.converged and args.simulate_fallback:
        try:
            sim = oracle.simulate_limit(to_matrix(d))
        except oracle.SizeCapError as e:
            return _fail(str(e))
        assert sim.limit is not None
        report["limit"] = {
            "source": "simulated",
            "edges": [list(e) for e in sorted(sim.limit.edges)],
        }
        report["jbd"] = {
            "source": "simulated",
            "holds": theory.union_of_cliques(sim.limit),
            "failing_level": None,
            "detail": None,
        }

    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if verdict.converged else 2


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"{flag} expects N or LO..HI, got {text!r}") from None
    if not (1 <= lo <= hi):
        raise ValueError(f"{flag} range must satisfy 1 <= lo <= hi, got {text!r}")
    return lo, hi


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        eta_lo, eta_hi = _parse_range(args.eta, "--eta")
        size_lo, size_hi = _parse_range(args.sizes, "--sizes")
    except ValueError as e:
        return _fail(str(e))
    if args.count < 0:
        return _fail(f"--count must be >= 0, got {args.count}")
    if not args.allow_trivial and size_hi < 2:
        return _fail(f"--sizes {args.sizes} cannot fit nontrivial components; pass --allow-trivial")
    master = random.Random(args.seed)
    for i in range(1, args.count + 1):
        spec = oracle.GeneratorSpec(
            eta=master.randint(eta_lo, eta_hi),
            sizes=(size_lo, size_hi),
            allow_trivial=args.allow_trivial,
            seed=master.getrandbits(32),
        )
        d = oracle.random_instance(spec)
        report = oracle.verify(d)
        if not report.passed:
            failing = next(c for c in report.checks if not c.passed)
            print(f"FAIL instance {i} of {args.count} (seed {args.seed}):")
            print(f"  check {failing.name!r}: {failing.detail}")
            assert report.counterexample is not None
            ce = report.counterexample
            print(f"  shrunken counterexample ({ce.n} vertices, {len(ce.arcs)} arcs):")
            for line in format_edge_list(ce).splitlines():
                print(f"    {line}")
            return 2
    trivial_note = "allow-trivial" if args.allow_trivial else "nontrivial-only"
    print(
        f"verified {args.count}/{args.count} instances "
        f"(seed {args.seed}, eta {args.eta}, sizes {args.sizes}, {trivial_note})"
    )
    return 0


def _dot_lines(name: str, nodes: list[str], edges: list[tuple[str, str]], ranks=None) -> str:
    lines = [f"graph {name} {{"]
    if ranks:
        lines.append("  rankdir=LR;")
        for group in ranks:
            inner = " ".join(f'"{v}";' for v in group)
            lines.append(f"  {{ rank=same; {inner} }}")
    else:
        for v in nodes:
            lines.append(f'  "{v}";')
    for a, b in edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args: argparse.Namespace) -> int:
    what = args.what[0]
    if what not in ("cs-graph", "limit", "competition"):
        return _fail(f"--what expects cs-graph, limit, or competition M, got {what!r}")
    if what == "competition":
        if len(args.what) != 2:
            return _fail("--what competition needs a step count M")
        try:
            m = int(args.what[1])
        except ValueError:
            return _fail(f"step count must be an integer, got {args.what[1]!r}")
        if m < 1:
            return _fail(f"step count must be >= 1, got {m}")
    elif len(args.what) != 1:
        return _fail(f"--what {what} takes no extra argument")

    try:
        text = _read_input(args.input)
        d = parse_digraph(text)
    except (OSError, ParseError) as e:
        return _fail(str(e))

    if what == "competition":
        from .graphs import m_step_competition

        g = m_step_competition(d, m)
        nodes = [str(v) for v in range(1, g.n + 1)]
        edges = [(str(u), str(v)) for u, v in sorted(g.edges)]
        print(_dot_lines("competition", nodes, edges), end="")
        return 0

    try:
        chain = component_chain(d)
        imp = imprimitivity(d, chain)
        sk = theory.cs_graph(d, chain, imp)
    except (SelfLoopError, NotLinearlyConnectedError, theory.TrivialComponentError) as e:
        return _fail(str(e))

    if what == "cs-graph":
        ranks = [
            [f"{p}_{j}" for j in range(1, sk.class_counts[p - 1] + 1)]
            for p in range(1, sk.eta + 1)
        ]
        edges = [
            (f"{p}_{i}", f"{q}_{j}")
            for (p, i), (q, j) in sorted(sk.edges)
        ]
        print(_dot_lines("skeleton", [], edges, ranks=ranks), end="")
        return 0

    limit = theory.limit_graph(d, chain, imp)
    nodes = [str(v) for v in range(1, limit.n + 1)]
    edges = [(str(u), str(v)) for u, v in sorted(limit.edges)]
    print(_dot_lines("limit", nodes, edges), end="")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="compseq",
        description="Convergence and limits of m-step competition graph sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser(
        "analyze", help="analyze one digraph and print a JSON report"
    )
    p_analyze.add_argument("input", help="matrix or edge-list file (auto-detected)")
    p_analyze.add_argument(
        "--simulate-fallback",
        action="store_true",
        help="when a convergent chain has trivial components, report the simulated limit",
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser(
        "verify", help="differential campaign: analytic answers vs simulation"
    )
    p_verify.add_argument("--count", type=int, default=100, help="number of instances")
    p_verify.add_argument("--seed", type=int, default=0, help="campaign seed")
    p_verify.add_argument("--eta", default="1..4", help="component count, N or LO..HI")
    p_verify.add_argument("--sizes", default="1..5", help="component size, N or LO..HI")
    p_verify.add_argument(
        "--allow-trivial",
        action="store_true",
        help="let components be single vertices (exercises trailing-tail verdicts)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser("export", help="render a derived graph as DOT")
    p_export.add_argument("input", help="matrix or edge-list file (auto-detected)")
    p_export.add_argument(
        "--what",
        nargs="+",
        required=True,
        metavar=("WHAT", "M"),
        help="cs-graph | limit | competition M",
    )
    p_export.set_defaults(func=cmd_export)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
