"""Command-line front end.

Subcommands: eval, graph, decompose, iso, verify, table, bench.
Exit codes: 0 success, 1 domain/usage error, 2 size-limit or budget
abort, 3 verification counterexample.  Machine-readable output goes to
stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import blocks, graphs, iso, stern
from .graphs import DEFAULT_LIMIT, SizeLimitError
from .iso import BudgetExceeded
from .words import minimal_expansion, render

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_LIMIT = 2
EXIT_COUNTEREXAMPLE = 3

_B_ALGOS = {
    "rec": stern.b_recursive,
    "mat": stern.b_matrix,
    "matblk": stern.b_matrix_blocks,
    "alg1": lambda n: stern.b_algorithm1(n)[0],
    "blockfold": stern.b_block_formula,
}


def nonneg_int(text: str) -> int:
    """Nonnegative arbitrary-precision integer, decimal or 0b-prefixed binary."""
    try:
        n = int(text[2:], 2) if text.startswith(("0b", "0B")) else int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_DOMAIN)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hbgraphs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a counting function")
    p.add_argument("--fn", choices=["b", "c", "v", "a"], required=True)
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--algo", choices=sorted(_B_ALGOS), default="rec",
                   help="algorithm for --fn b (ignored otherwise)")

    p = sub.add_parser("graph", help="export A(n)")
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--limit", type=nonneg_int, default=DEFAULT_LIMIT)

    p = sub.add_parser("decompose", help="block decomposition of the minimal expansion")
    p.add_argument("--n", type=nonneg_int, required=True)

    p = sub.add_parser("iso", help="test whether A(m) and A(n) are isomorphic")
    p.add_argument("--m", type=nonneg_int, required=True)
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--structural", action="store_true",
                   help="run the backtracking search and print the witness")

    p = sub.add_parser("verify", help="cross-check all algorithms up to a bound")
    p.add_argument("--max", type=nonneg_int, default=2048)
    p.add_argument("--workers", type=nonneg_int, default=1)

    p = sub.add_parser("table", help="CSV table of n,b,a,v")
    p.add_argument("--max", type=nonneg_int, required=True)
    p.add_argument("--format", choices=["csv"], default="csv")

    p = sub.add_parser("bench", help="time b algorithms on random n of a bit length")
    p.add_argument("--bits", type=nonneg_int, required=True)
    p.add_argument("--algo", choices=sorted(_B_ALGOS), action="append",
                   help="repeatable; default: all")
    p.add_argument("--reps", type=nonneg_int, default=10)

    return parser


def _cmd_eval(args, out) -> int:
    if args.fn == "b":
        value = _B_ALGOS[args.algo](args.n)
    elif args.fn == "c":
        value = stern.c(args.n)
    elif args.fn == "v":
        value = stern.v(args.n)
    else:
        value = stern.a(args.n)
    print(value, file=out)
    return EXIT_OK


def _cmd_graph(args, out) -> int:
    g = graphs.build_graph(args.n, args.limit)
    text = graphs.export_dot(g) if args.format == "dot" else graphs.export_json(g) + "\n"
    out.write(text)
    return EXIT_OK


def _cmd_decompose(args, out) -> int:
    dec = blocks.decompose(minimal_expansion(args.n))
    for block in dec.blocks:
        print(f"T{block.kind.value} t={block.t}", file=out)
    print(f"tail=1^{dec.trailing_ones}", file=out)
    return EXIT_OK


def _cmd_iso(args, out) -> int:
    if args.structural:
        g1, g2 = graphs.build_graph(args.m), graphs.build_graph(args.n)
        witness = iso.labeled_iso(g1, g2)
        print("isomorphic" if witness else "not isomorphic", file=out)
        if witness:
            for v, w in enumerate(witness.mapping):
                print(f"{render(g1.vertices[v])} -> {render(g2.vertices[w])}", file=out)
    else:
        print("isomorphic" if iso.iso_closed_form(args.m, args.n) else "not isomorphic",
              file=out)
    return EXIT_OK


def check_range(lo: int, hi: int) -> str | None:
    """First counterexample to algorithm agreement in [lo, hi], or None."""
    for n in range(lo, hi + 1):
        expected = stern.b_recursive(n)
        results = {name: fn(n) for name, fn in _B_ALGOS.items()}
        results["enumeration"] = len(graphs.enumerate_expansions(n))
        bad = sorted(name for name, got in results.items() if got != expected)
        if bad:
            return f"n={n} b disagreement: rec={expected} " + " ".join(
                f"{name}={results[name]}" for name in bad)
        if n <= 512:
            _, a_count, v_count = graphs.counts(graphs.build_graph(n))
            if v_count != stern.v(n) or a_count != stern.a(n):
                return (f"n={n} structural disagreement: graph (a={a_count}, v={v_count})"
                        f" vs recursion (a={stern.a(n)}, v={stern.v(n)})")
    return None


def _cmd_verify(args, out) -> int:
    if args.workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunk = max(1, (args.max + args.workers) // args.workers)
        spans = [(lo, min(lo + chunk - 1, args.max)) for lo in range(0, args.max + 1, chunk)]
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            failures = [r for r in pool.map(_check_span, spans) if r is not None]
    else:
        failure = check_range(0, args.max)
        failures = [failure] if failure else []
    if failures:
        print(failures[0], file=out)
        return EXIT_COUNTEREXAMPLE
    print(f"OK {args.max}", file=out)
    return EXIT_OK


def _check_span(span: tuple[int, int]) -> str | None:
    return check_range(*span)


def _cmd_table(args, out) -> int:
    print("n,b,a,v", file=out)
    for n in range(args.max + 1):
        print(f"{n},{stern.b_recursive(n)},{stern.a(n)},{stern.v(n)}", file=out)
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    rng = random.Random(0)
    names = args.algo or sorted(_B_ALGOS)
    inputs = [rng.getrandbits(args.bits) | (1 << max(args.bits - 1, 0))
              for _ in range(max(args.reps, 1))]
    for name in names:
        fn = _B_ALGOS[name]
        start = time.perf_counter()
        for n in inputs:
            fn(n)
        elapsed = time.perf_counter() - start
        print(f"{name}: {elapsed / len(inputs) * 1000:.3f} ms/eval "
              f"({args.bits} bits, {len(inputs)} reps)", file=out)
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "graph": _cmd_graph,
    "decompose": _cmd_decompose,
    "iso": _cmd_iso,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "bench": _cmd_bench,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except (SizeLimitError, BudgetExceeded) as exc:
        print(f"aborted: {exc}", file=err)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
