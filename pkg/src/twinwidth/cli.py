"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .contraction import replay_and_verify, greedy_sequence
from .exact import exact_tww
from .lower_bound import LbParameterError, LbParameters, build_lb_graph, build_lb_sequence
from .neighbourhoods import distinct_x_neighbourhoods, nu_upper_bound, shatter_function
from .trigraph import TrigraphError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _read(path: str) -> str:
    return Path(path).read_text()


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _load_graph(path: str):
    return io.parse_graph(_read(path))


def _x_set(args, g) -> list[int]:
    if args.x is not None and args.x_file is not None:
        raise _UsageError("give either --x or --x-file, not both")
    if args.x is not None:
        xs = io.parse_x_set(args.x)
    elif args.x_file is not None:
        xs = io.parse_x_set(_read(args.x_file))
    else:
        raise _UsageError("one of --x or --x-file is required")
    if len(set(xs)) != len(xs):
        raise _UsageError("X contains repeated ids")
    missing = [x for x in xs if x not in g]
    if missing:
        raise _UsageError(f"X ids not in graph: {missing}")
    return xs


def _emit(args, fields: dict, text: str) -> None:
    if args.json:
        print(json.dumps(fields, sort_keys=True))
    else:
        print(text)


def cmd_gen_lb(args) -> int:
    explicit = [args.A, args.B, args.C]
    if any(v is not None for v in explicit):
        if any(v is None for v in explicit):
            raise _UsageError("--A, --B and --C must be given together")
        params = LbParameters(args.A, args.B, args.C, args.k, d=args.d)
    else:
        if args.d is None:
            raise _UsageError("--d is required unless --A --B --C are given")
        params = LbParameters.from_d(args.d, args.k)
    lb = build_lb_graph(params)
    seq = build_lb_sequence(params, lb)
    _write(args.out, io.write_graph(lb.graph))
    _write(args.seq, io.write_sequence(seq))
    if args.index:
        _write(args.index, io.write_index(lb.index))
    fields = {
        "A": params.A, "B": params.B, "C": params.C, "k": params.k, "d": params.d,
        "M": params.M, "n": len(lb.graph), "m": len(lb.graph.black_edges()),
        "non_x_count": len(lb.index), "steps": len(seq),
        "exceeds_target_width": None if params.d is None else params.exceeds_width(params.d),
    }
    _emit(args, fields, " ".join(f"{k}={v}" for k, v in fields.items() if v is not None))
    return EXIT_OK


def cmd_verify_seq(args) -> int:
    g = _load_graph(args.graph)
    seq = io.parse_sequence(_read(args.seq))
    report = replay_and_verify(g, seq, args.budget)
    text = f"width={report.width} valid={str(report.valid).lower()}"
    if report.first_violation is not None:
        step, red = report.first_violation
        text += f" first_violation=step:{step},red_degree:{red}"
    if report.error is not None:
        text += f"\nerror: {report.error}"
    _emit(args, report.as_dict(), text)
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_exact_tww(args) -> int:
    g = _load_graph(args.graph)
    width, witness = exact_tww(g)
    if args.witness:
        _write(args.witness, io.write_sequence(witness))
    _emit(args, {"width": width, "steps": len(witness)}, f"width={width}")
    return EXIT_OK


def cmd_complexity(args) -> int:
    g = _load_graph(args.graph)
    xs = _x_set(args, g)
    profile = distinct_x_neighbourhoods(g, xs)
    traces = [list(t) for t in profile.sorted_traces()]
    fields = {"count": profile.count, "x_size": len(xs)}
    text = f"count={profile.count}"
    if args.traces:
        fields["traces"] = traces
        text += "\n" + "\n".join("{" + ",".join(map(str, t)) + "}" for t in traces)
    _emit(args, fields, text)
    return EXIT_OK


def cmd_shatter(args) -> int:
    g = _load_graph(args.graph)
    if not 0 <= args.n <= len(g):
        raise _UsageError(f"--n must lie in 0..{len(g)}")
    value = shatter_function(g, args.n)
    _emit(args, {"n": args.n, "shatter": value}, f"pi({args.n})={value}")
    return EXIT_OK


def cmd_bound_check(args) -> int:
    g = _load_graph(args.graph)
    xs = _x_set(args, g)
    if not xs:
        raise _UsageError("X must be non-empty")
    if args.d < 0:
        raise _UsageError("--d must be non-negative")
    count = distinct_x_neighbourhoods(g, xs).count
    bound = nu_upper_bound(args.d, len(xs))
    ok = count <= bound
    verdict = "PASS" if ok else "FAIL"
    _emit(
        args,
        {"count": count, "bound": bound, "d": args.d, "x_size": len(xs), "pass": ok},
        f"count={count} bound={bound} {verdict}",
    )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_greedy(args) -> int:
    g = _load_graph(args.graph)
    seq, width = greedy_sequence(g)
    if args.out:
        _write(args.out, io.write_sequence(seq))
    _emit(
        args,
        {"width": width, "sequence": [list(s) for s in seq]},
        f"width={width}\n" + io.write_sequence(seq).rstrip("\n"),
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twinwidth", description="Twin-width experimentation tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(func=func)
        return p

    p = add("gen-lb", cmd_gen_lb, "write the lower-bound construction and its sequence")
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--A", type=int)
    p.add_argument("--B", type=int)
    p.add_argument("--C", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--index")

    p = add("verify-seq", cmd_verify_seq, "replay a contraction sequence")
    p.add_argument("--graph", required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--budget", type=int)

    p = add("exact-tww", cmd_exact_tww, "exact twin-width (small graphs)")
    p.add_argument("--graph", required=True)
    p.add_argument("--witness")

    for name, func, help in (
        ("complexity", cmd_complexity, "count distinct X-neighbourhoods"),
        ("bound-check", cmd_bound_check, "compare the count with (d+2)2^(d+1)|X|"),
    ):
        p = add(name, func, help)
        p.add_argument("--graph", required=True)
        p.add_argument("--x")
        p.add_argument("--x-file")
        if name == "complexity":
            p.add_argument("--traces", action="store_true")
        else:
            p.add_argument("--d", type=int, required=True)

    p = add("shatter", cmd_shatter, "shatter function of the neighbourhood hypergraph")
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("greedy", cmd_greedy, "greedy contraction sequence")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    return parser


def run_command(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except LbParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, io.FormatError, TrigraphError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run_command())
