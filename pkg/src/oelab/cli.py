"""Command line interface.

Commands print deterministic single-line JSON reports (schema "oelab/1") on
stdout; construct prints a family in the text format unless --output is
given.  Exit codes: 0 success, 1 a checked bound or identity came back
"violated", 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import sys

from fractions import Fraction

from . import constructions
from .bounds import BOUND_NAMES, check_bound, turan_bound, y_size_bound
from .decomposition import SOLVER_CAP, greedy_peeling
from .family import (
    SetFamily,
    build_odd_pair_graph,
    format_family,
    op_count,
    parse_family,
    read_family,
    write_family,
)
from .report import Report, csv_header, emit_report
from .search import min_op_exhaustive, min_op_with_canonical_pruning
from .spectral import concentration_check, fourier_spectrum

_SPECTRUM_AUTO_CAP = 16

_CONSTRUCT_KINDS = (
    "as_family",
    "as_extended",
    "oneill",
    "product",
    "eventown_blocks",
    "eventown_mixed",
    "full_even",
)

_SWEEPABLE = ("construct", "op", "graph-stats", "peel", "bound-check", "search-min", "spectral-check")


def _read_family_arg(path: str) -> SetFamily:
    if path == "-":
        return parse_family(sys.stdin.read())
    return read_family(path)


def _require(ns: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(ns, name, None) is None:
            raise ValueError(f"--{name.replace('_', '-')} is required here")


def _build_family(ns: argparse.Namespace) -> SetFamily:
    kind = ns.kind
    if kind == "as_family":
        _require(ns, "s")
        return constructions.build_as_family(ns.s)
    if kind == "as_extended":
        _require(ns, "n", "s")
        return constructions.build_as_extended(ns.n, ns.s)
    if kind == "oneill":
        _require(ns, "n", "s")
        return constructions.build_oneill_oddtown(ns.n, ns.s)
    if kind == "product":
        _require(ns, "base", "n")
        base = _read_family_arg(ns.base)
        return constructions.build_product_family(base, base.n, ns.n)
    if kind == "eventown_blocks":
        _require(ns, "n")
        return constructions.build_eventown_blocks(ns.n, ns.variant)
    if kind == "eventown_mixed":
        _require(ns, "n", "s")
        return constructions.build_eventown_mixed(ns.n, ns.s)
    if kind == "full_even":
        _require(ns, "n")
        return constructions.build_full_even_family(ns.n)
    raise ValueError(f"unknown construction kind {kind!r}")


def _construct_report(ns: argparse.Namespace) -> tuple[Report, int]:
    family = _build_family(ns)
    params: dict = {"kind": ns.kind, "n": family.n}
    if ns.s is not None:
        params["s"] = ns.s
    if ns.kind == "eventown_blocks":
        params["variant"] = ns.variant
    report = Report(
        kind="construction",
        parameters=params,
        values={"size": family.size, "op": op_count(family)},
        witness_path=ns.output,
    )
    return report, 0


def _cmd_construct(ns: argparse.Namespace) -> int:
    family = _build_family(ns)
    if ns.output:
        write_family(family, ns.output)
        report, code = _construct_report(ns)
        print(emit_report(report))
        return code
    sys.stdout.write(format_family(family))
    return 0


def _op_report(ns: argparse.Namespace) -> tuple[Report, int]:
    family = _read_family_arg(ns.family)
    report = Report(
        kind="op",
        parameters={"n": family.n, "size": family.size},
        values={"op": op_count(family)},
    )
    return report, 0


def _cmd_op(ns: argparse.Namespace) -> int:
    report, code = _op_report(ns)
    print(report.values["op"])
    print(emit_report(report))
    return code


def _graph_report(ns: argparse.Namespace) -> tuple[Report, int]:
    family = _read_family_arg(ns.family)
    graph = build_odd_pair_graph(family)
    values: dict = {
        "vertex_count": graph.vertex_count,
        "edge_count": graph.edge_count,
        "odd_vertex_count": graph.odd_vertex_count,
    }
    if graph.degrees:
        values["min_degree"] = min(graph.degrees)
        values["max_degree"] = max(graph.degrees)
        for d in sorted(set(graph.degrees)):
            values[f"deg_{d}"] = graph.degrees.count(d)
    report = Report(
        kind="graph",
        parameters={"n": family.n, "size": family.size,
                    "parity_profile": family.parity_profile},
        values=values,
    )
    return report, 0


def _cmd_graph_stats(ns: argparse.Namespace) -> int:
    report, code = _graph_report(ns)
    print(emit_report(report))
    return code


def _peel_report(ns: argparse.Namespace) -> tuple[Report, int]:
    family = _read_family_arg(ns.family)
    trace = greedy_peeling(
        family, ns.mode, "maximum" if ns.exact else "greedy", cap=ns.cap
    )
    params: dict = {
        "n": family.n, "size": family.size,
        "mode": trace.mode, "exactness": trace.exactness,
    }
    values: dict = {
        "layer_count": trace.layer_count,
        "lower_bound": trace.lower_bound,
        "op": op_count(family),
    }
    for i, layer in enumerate(trace.layers, start=1):
        params[f"layer_{i}"] = " ".join(map(str, layer))
        values[f"layer_size_{i}"] = len(layer)
        values[f"residual_{i}"] = trace.residual_sizes[i - 1]
    if trace.surplus is not None:
        values["surplus"] = trace.surplus
    if trace.alpha is not None:
        values["alpha"] = trace.alpha
        params["alpha_precondition"] = (
            "ok" if trace.alpha_precondition_ok else "failed: floor(n/2) <= 2 log2(s+1)"
        )
    return Report(kind="peeling", parameters=params, values=values), 0


def _cmd_peel(ns: argparse.Namespace) -> int:
    report, code = _peel_report(ns)
    print(emit_report(report))
    return code


def _bound_report(ns: argparse.Namespace) -> tuple[Report, int]:
    if ns.bound == "turan":
        _require(ns, "n", "r")
        report = Report(
            kind="bound",
            parameters={"bound": "turan", "n": ns.n, "r": ns.r},
            values={"bound_value": turan_bound(ns.n, ns.r)},
        )
        return report, 0
    if ns.bound == "y_size":
        _require(ns, "n", "s", "i")
        report = Report(
            kind="bound",
            parameters={"bound": "y_size", "n": ns.n, "s": ns.s, "i": ns.i},
            values={"bound_value": y_size_bound(ns.n, ns.s, ns.i)},
        )
        return report, 0
    family = _read_family_arg(ns.family)
    params: dict = {}
    if ns.eps is not None:
        params["eps"] = Fraction(ns.eps)
    result = check_bound(family, ns.bound, **params)
    report = result.to_report()
    return report, 1 if result.verdict == "violated" else 0


def _cmd_bound_check(ns: argparse.Namespace) -> int:
    report, code = _bound_report(ns)
    print(emit_report(report))
    return code


def _search_report(ns: argparse.Namespace) -> tuple[Report, int]:
    run = min_op_with_canonical_pruning if ns.canonical else min_op_exhaustive
    result = run(ns.n, ns.size, ns.mode, budget=ns.budget, threads=ns.threads)
    if ns.witness_out:
        write_family(result.witness, ns.witness_out)
    return result.to_report(witness_path=ns.witness_out), 0


def _cmd_search_min(ns: argparse.Namespace) -> int:
    report, code = _search_report(ns)
    print(emit_report(report))
    return code


def _spectral_report(ns: argparse.Namespace) -> tuple[Report, int]:
    family = _read_family_arg(ns.family)
    mode = "even_restricted" if ns.restricted else "general"
    if family.n <= _SPECTRUM_AUTO_CAP and not ns.no_spectrum:
        diag = fourier_spectrum(family, mode)
    else:
        diag = concentration_check(family, mode)
    report = diag.to_report()
    return report, 1 if report.verdict == "violated" else 0


def _cmd_spectral_check(ns: argparse.Namespace) -> int:
    report, code = _spectral_report(ns)
    print(emit_report(report))
    return code


_REPORT_BUILDERS = {
    "construct": _construct_report,
    "op": _op_report,
    "graph-stats": _graph_report,
    "peel": _peel_report,
    "bound-check": _bound_report,
    "search-min": _search_report,
    "spectral-check": _spectral_report,
}


def _parse_range(spec: str) -> tuple[str, list[int]]:
    try:
        param, _, span = spec.partition("=")
        lo_s, _, hi_s = span.partition("..")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ValueError(f"bad range {spec!r}, expected 'param=a..b'") from None
    if not param or hi < lo:
        raise ValueError(f"bad range {spec!r}, expected 'param=a..b' with a <= b")
    return param, list(range(lo, hi + 1))


def _cmd_sweep(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    param, values = _parse_range(ns.range)
    worst = 0
    header_done = False
    for value in values:
        argv = [ns.sweep_command, *ns.rest, f"--{param}", str(value)]
        sub_ns = parser.parse_args(argv)
        report, code = _REPORT_BUILDERS[ns.sweep_command](sub_ns)
        worst = max(worst, code)
        if not header_done:
            print(csv_header(report))
            header_done = True
        print(emit_report(report, "csv-row"))
    return worst


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oelab",
        description="Odd/even intersection structure of set families: "
        "constructions, odd-pair counts, bounds, search and spectral checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a reference family")
    c.add_argument("--kind", required=True, choices=_CONSTRUCT_KINDS)
    c.add_argument("--n", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--variant", default="A", choices=("A", "B"))
    c.add_argument("--base", help="family file for the product construction ('-' = stdin)")
    c.add_argument("--output", help="write the family here and print a report instead")

    for name, help_text in (
        ("op", "odd-pair count of a family"),
        ("graph-stats", "odd pair graph summary"),
    ):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("--family", default="-", help="family file, '-' = stdin")

    q = sub.add_parser("peel", help="independent-layer peeling trace and bound")
    q.add_argument("--family", default="-")
    q.add_argument("--mode", required=True, choices=("odd", "even"))
    q.add_argument("--exact", action="store_true",
                   help="largest layer at every step (exact solver) instead of greedy")
    q.add_argument("--cap", type=int, default=SOLVER_CAP)

    q = sub.add_parser("bound-check", help="evaluate a named bound")
    q.add_argument("--family", default="-")
    q.add_argument("--bound", required=True,
                   choices=tuple(BOUND_NAMES) + ("turan", "y_size"))
    q.add_argument("--eps", help="rational like 3/10 or 0.3 (density bound)")
    q.add_argument("--n", type=int, help="for family-free bounds")
    q.add_argument("--s", type=int, help="for family-free bounds")
    q.add_argument("--i", type=int, help="peel index (y_size bound)")
    q.add_argument("--r", type=int, help="clique order (turan bound)")

    q = sub.add_parser("search-min", help="exact minimum op over a parity class")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--size", type=int, required=True)
    q.add_argument("--mode", required=True, choices=("odd", "even"))
    q.add_argument("--canonical", action="store_true",
                   help="restrict the smallest member to {1..k} (same minimum)")
    q.add_argument("--budget", type=int, help="node budget (env OELAB_BUDGET, default 1e9)")
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--witness-out", help="write the witness family here")

    q = sub.add_parser("spectral-check", help="concentration and Plancherel checks")
    q.add_argument("--family", default="-")
    q.add_argument("--restricted", action="store_true",
                   help="restrict to even-weight characters (odd n, even family)")
    q.add_argument("--no-spectrum", action="store_true",
                   help="skip the full spectrum even when n is small")
    q.add_argument("--threads", type=int, default=1)

    q = sub.add_parser("sweep", help="run a subcommand over an integer range, CSV out")
    q.add_argument("--command", dest="sweep_command", required=True, choices=_SWEEPABLE)
    q.add_argument("--range", required=True, help="param=a..b (inclusive)")
    return parser


_COMMANDS = {
    "construct": _cmd_construct,
    "op": _cmd_op,
    "graph-stats": _cmd_graph_stats,
    "peel": _cmd_peel,
    "bound-check": _cmd_bound_check,
    "search-min": _cmd_search_min,
    "spectral-check": _cmd_spectral_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        if args and args[0] == "sweep":
            # Flags other than --command/--range pass through to the swept
            # subcommand, so only a partial parse applies here.
            ns, ns_rest = parser.parse_known_args(args)
            ns.rest = ns_rest
        else:
            ns = parser.parse_args(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if ns.command == "sweep":
            return _cmd_sweep(ns, parser)
        return _COMMANDS[ns.command](ns)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
