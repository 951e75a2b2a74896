"""Command-line interface.

Subcommands: recognize, classify, bp, bp-exact, mc, address, verify, gen,
check. Graphs are read from a path or "-" for standard input, in the
canonical edge-list format. Results go to stdout; diagnostics and --stats
timings go to stderr, so stdout is byte-deterministic for fixed inputs.

Exit codes: 0 success/pass, 1 verified-fail (an invalid partition or a
theorem-check mismatch), 2 usage or input errors.

Machine mode (--format machine) prints exactly one JSON object per
invocation, keys sorted; gen always emits the canonical graph format,
which every other subcommand accepts unchanged.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .addressing import (
    addressing_to_partition,
    format_addressing,
    graham_pollak_addressing,
    parse_addressing,
    partition_to_addressing,
)
from .errors import ContractViolation, FormatError, LimitExceeded, NotSplitError
from .generate import GenSpec, generate
from .graph import Graph, format_graph, parse_graph
from .partition import (
    BicliquePartition,
    bp_split,
    format_partition,
    parse_partition,
    verify_partition,
)
from .solver import DEFAULT_EDGE_LIMIT, bp_exact, check_theorem
from .splits import classify, maximal_cliques, recognize_split

OK, FAIL, USAGE = 0, 1, 2


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (FormatError, ContractViolation, NotSplitError, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitbp",
        description="Biclique partition numbers of split graphs, "
        "squashed-cube addressings, and an exact solver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str, graph_arg: bool = True):
        p = sub.add_parser(name, help=help_)
        if graph_arg:
            p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument(
            "--format",
            choices=["text", "machine"],
            default="text",
            help="output style (machine = one JSON line)",
        )
        p.set_defaults(handler=handler)
        return p

    add("recognize", _cmd_recognize, "decide split-ness and print a partition")

    p = add("classify", _cmd_classify, "classify a given split partition")
    p.add_argument("--clique-side", required=True, help="comma-separated vertices")
    p.add_argument("--independent-side", required=True, help="comma-separated vertices")

    add("bp", _cmd_bp, "closed-form bp of a split graph with a witness")

    p = add("bp-exact", _cmd_bp_exact, "exact bp by branch-and-bound")
    _add_solver_flags(p)

    p = add("mc", _cmd_mc, "count maximal cliques")
    p.add_argument("--complement", action="store_true", help="count in the complement")

    p = add("address", _cmd_address, "emit a squashed-cube addressing", graph_arg=False)
    p.add_argument("input", nargs="?", help="graph file, or - for stdin")
    p.add_argument("--partition", help="induce from this partition file")
    p.add_argument("--gp", type=int, help="classical addressing of the N-clique")

    p = add("verify", _cmd_verify, "validate a partition or addressing against a graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--partition", help="partition file to check")
    group.add_argument("--addressing", help="addressing file to check")

    p = add("gen", _cmd_gen, "emit a generated graph", graph_arg=False)
    p.add_argument("--kind", required=True, choices=["split", "complete", "path", "cycle", "star"])
    p.add_argument("--n", type=int, default=0, help="vertex count (shape kinds)")
    p.add_argument("--k", type=int, default=0, help="clique side size (split)")
    p.add_argument("--s", type=int, default=0, help="independent side size (split)")
    p.add_argument("--p", type=float, default=0.5, help="cross-edge probability (split)")
    p.add_argument("--seed", type=int, default=0, help="generator seed (split)")
    p.add_argument("-o", "--output", help="write here instead of stdout")

    p = add("check", _cmd_check, "three-way theorem check on a split graph")
    _add_solver_flags(p)

    return parser


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=0, help="node limit (0 = none)")
    p.add_argument("--budget-ms", type=int, default=0, help="time limit in ms (0 = none)")
    p.add_argument("--edge-limit", type=int, default=DEFAULT_EDGE_LIMIT)
    p.add_argument("--kernel", choices=["auto", "compiled", "python"], default="auto")
    p.add_argument("--stats", action="store_true", help="print timing to stderr")


# -- helpers ------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _emit(args, machine_obj: dict, text_lines: list[str]) -> None:
    if args.format == "machine":
        print(json.dumps(machine_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _parse_vertices(text: str) -> set[int]:
    try:
        return {int(t) for t in text.replace(",", " ").split()}
    except ValueError:
        raise ContractViolation(f"expected comma-separated vertices, got {text!r}") from None


def _partition_obj(p: BicliquePartition) -> list[list[list[int]]]:
    return [[sorted(b.part_a), sorted(b.part_b)] for b in p]


def _partition_lines(p: BicliquePartition) -> list[str]:
    text = format_partition(p)
    return text.splitlines() if text else []


# -- subcommands --------------------------------------------------------------


def _cmd_recognize(args) -> int:
    g = _load_graph(args.input)
    part = recognize_split(g)
    if part is None:
        _emit(args, {"split": False}, ["not-split"])
        return OK
    obj = {
        "split": True,
        "class": part.split_class.value,
        "omega": part.omega,
        "alpha": part.alpha,
        "k": sorted(part.clique_side),
        "s": sorted(part.independent_side),
        "witness": part.witness,
    }
    lines = [
        "split",
        f"class: {part.split_class.value}",
        f"omega: {part.omega}",
        f"alpha: {part.alpha}",
        "K: " + " ".join(map(str, sorted(part.clique_side))),
        "S: " + " ".join(map(str, sorted(part.independent_side))),
    ]
    if part.witness is not None:
        lines.append(f"witness: {part.witness}")
    _emit(args, obj, lines)
    return OK


def _cmd_classify(args) -> int:
    g = _load_graph(args.input)
    part = classify(
        g, _parse_vertices(args.clique_side), _parse_vertices(args.independent_side)
    )
    obj = {
        "class": part.split_class.value,
        "omega": part.omega,
        "alpha": part.alpha,
        "witness": part.witness,
    }
    lines = [
        f"class: {part.split_class.value}",
        f"omega: {part.omega}",
        f"alpha: {part.alpha}",
    ]
    if part.witness is not None:
        lines.append(f"witness: {part.witness}")
    _emit(args, obj, lines)
    return OK


def _cmd_bp(args) -> int:
    g = _load_graph(args.input)
    result = bp_split(g)
    obj = {"bp": result.value, "partition": _partition_obj(result.witness)}
    lines = [f"bp = {result.value}"] + _partition_lines(result.witness)
    _emit(args, obj, lines)
    return OK


def _cmd_bp_exact(args) -> int:
    g = _load_graph(args.input)
    start = time.monotonic()
    result = bp_exact(
        g, args.budget_nodes, args.budget_ms, args.edge_limit, args.kernel
    )
    if args.stats:
        elapsed_ms = (time.monotonic() - start) * 1000
        print(
            f"stats: elapsed_ms={elapsed_ms:.1f} nodes={result.nodes_explored} "
            f"kernel={result.kernel}",
            file=sys.stderr,
        )
    obj = {
        "optimum": result.optimum,
        "proven_optimal": result.proven_optimal,
        "nodes": result.nodes_explored,
        "kernel": result.kernel,
        "partition": _partition_obj(result.witness),
    }
    lines = [
        f"optimum = {result.optimum}",
        f"proven: {'yes' if result.proven_optimal else 'no (budget exceeded)'}",
        f"nodes: {result.nodes_explored}",
    ] + _partition_lines(result.witness)
    _emit(args, obj, lines)
    return OK


def _cmd_mc(args) -> int:
    g = _load_graph(args.input)
    target = g.complement() if args.complement else g
    count = len(maximal_cliques(target))
    _emit(
        args,
        {"count": count, "complement": args.complement},
        [f"mc = {count}"],
    )
    return OK


def _cmd_address(args) -> int:
    if args.gp is not None:
        if args.input or args.partition:
            raise ContractViolation("--gp takes no graph or partition")
        addressing = graham_pollak_addressing(args.gp)
    elif args.input is None:
        raise ContractViolation("address needs a graph or --gp N")
    else:
        g = _load_graph(args.input)
        if args.partition:
            p = parse_partition(_read_text(args.partition))
        else:
            p = bp_split(g).witness
        addressing = partition_to_addressing(g, p)
    obj = {
        "length": addressing.length,
        "addresses": {str(v): str(addressing[v]) for v in addressing},
    }
    _emit(args, obj, format_addressing(addressing).splitlines())
    return OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.input)
    if args.partition:
        p = parse_partition(_read_text(args.partition))
    else:
        addressing = parse_addressing(_read_text(args.addressing))
        if sorted(addressing) != list(g.vertices()):
            raise FormatError("addressing must cover vertices 1..n exactly once")
        p = addressing_to_partition(addressing)
    check = verify_partition(g, p)
    obj = {
        "valid": check.ok,
        "reason": check.reason,
        "edge": list(check.edge) if check.edge else None,
        "index": check.index,
    }
    if check.ok:
        _emit(args, obj, ["VALID"])
        return OK
    _emit(args, obj, [f"INVALID: {check.describe()}"])
    return FAIL


def _cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        k_size=args.k,
        s_size=args.s,
        edge_prob=args.p,
        seed=args.seed,
    )
    text = format_graph(generate(spec).graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return OK


def _cmd_check(args) -> int:
    g = _load_graph(args.input)
    start = time.monotonic()
    report = check_theorem(
        g, args.budget_nodes, args.budget_ms, args.edge_limit, args.kernel
    )
    if args.stats:
        elapsed_ms = (time.monotonic() - start) * 1000
        print(f"stats: elapsed_ms={elapsed_ms:.1f}", file=sys.stderr)
    verdict = "PASS" if report.passed else "FAIL"
    obj = {
        "exact": report.exact,
        "closed_form": report.closed_form,
        "mc_minus_1": report.mc_minus_1,
        "pass": report.passed,
    }
    line = (
        f"exact={report.exact} closed-form={report.closed_form} "
        f"mc-1={report.mc_minus_1} {verdict}"
    )
    _emit(args, obj, [line])
    return OK if report.passed else FAIL


if __name__ == "__main__":
    sys.exit(main())
