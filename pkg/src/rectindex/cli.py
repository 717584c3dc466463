"""``rect-index`` command line: query, verify and bench.

Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 mismatch.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import List, Optional

import numpy as np

from .grid import Grid2D, GridFormatError, read_grid
from .index2d import RectangleIndex
from .reference import naive_search_2d, random_text, sample_pattern
from .work import WorkCounter

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


class _InputError(Exception):
    pass


def _load(path: str) -> Grid2D:
    try:
        return read_grid(path)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except GridFormatError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _text_from_args(args, rng: np.random.Generator) -> Grid2D:
    if args.random is not None:
        h, w, sigma = args.random
        if h < 1 or w < 1 or not 1 <= sigma <= 256:
            raise _InputError("--random needs H >= 1, W >= 1 and 1 <= sigma <= 256")
        return random_text(h, w, sigma, rng)
    if args.text is None:
        raise _InputError("give a text file or --random H W sigma")
    return _load(args.text)


def _alphabet_size(text: Grid2D) -> int:
    return len(np.unique(text.cells))


def _show(grid: Grid2D) -> str:
    if grid.cells.max() <= 255:
        return "\n".join(r.decode("latin-1") for r in grid.rows_as_bytes())
    return "\n".join(" ".join(map(str, row)) for row in grid.cells.tolist())


def cmd_query(args) -> int:
    text = _load(args.text)
    patterns = [_load(p) for p in args.patterns]
    index = RectangleIndex().fit(text)
    for pattern in patterns:
        found = index.query(pattern)
        if args.format == "json":
            print(json.dumps([{"row": o.row, "col": o.col} for o in found]))
        else:
            for o in found:
                print(f"{o.row}\t{o.col}")
    return EXIT_OK


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    text = _text_from_args(args, rng)
    sigma = args.random[2] if args.random is not None else _alphabet_size(text)
    index = RectangleIndex().fit(text)
    failures = 0
    for n in range(args.patterns):
        pattern = sample_pattern(text, sigma, rng, planted=bool(n % 2 == 0))
        got = index.query(pattern)
        want = naive_search_2d(text, pattern)
        if got != want:
            failures += 1
            print(f"mismatch at sample {n} (seed {args.seed})", file=sys.stderr)
            print(f"text {text.height}x{text.width}:\n{_show(text)}", file=sys.stderr)
            print(f"pattern {pattern.height}x{pattern.width}:\n{_show(pattern)}", file=sys.stderr)
            print(f"index: {[tuple(o) for o in got]}", file=sys.stderr)
            print(f"naive: {[tuple(o) for o in want]}", file=sys.stderr)
    passed = args.patterns - failures
    print(f"{passed}/{args.patterns} ok")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def default_widths(n: int, width: int) -> List[int]:
    lg = int(math.floor(math.log2(n))) if n > 1 else 1
    wanted = {1, 2, lg, lg + 1, int(math.isqrt(n))}
    return sorted(w for w in wanted if 1 <= w <= width)


def cmd_bench(args) -> int:
    rng = np.random.default_rng(args.seed)
    text = _text_from_args(args, rng)
    n = text.size
    start = time.perf_counter()
    index = RectangleIndex().fit(text)
    build = time.perf_counter() - start
    stats = index.space_stats()
    print("metric\tvalue")
    print(f"height\t{text.height}")
    print(f"width\t{text.width}")
    print(f"build_seconds\t{build:.4f}")
    print(f"build_per_n_log2sq_n\t{build / (n * max(1.0, math.log2(n)) ** 2):.3e}")
    for key, val in stats.items():
        print(f"space_{key}\t{val}")
    print(f"space_per_n_log2_n\t{stats['total'] / (n * max(1.0, math.log2(n))):.3f}")
    print("range_structure\twavelet_matrix_eps1")
    widths = args.widths or default_widths(n, text.width)
    print()
    print("width\theight\tpatterns\tmean_query_us\tmean_occurrences\tmean_work")
    sigma = _alphabet_size(text)
    for w in widths:
        if not 1 <= w <= text.width:
            print(f"skipping width {w}: outside 1..{text.width}", file=sys.stderr)
            continue
        h = min(text.height, max(w, 1))
        elapsed = 0.0
        occ = 0
        work = 0
        for _ in range(args.patterns):
            pattern = sample_pattern(text, sigma, rng, planted=True, shape=(h, w))
            counter = WorkCounter()
            t0 = time.perf_counter()
            occ += len(index.query(pattern, counter))
            elapsed += time.perf_counter() - t0
            work += counter.total
        k = max(1, args.patterns)
        print(f"{w}\t{h}\t{args.patterns}\t{1e6 * elapsed / k:.1f}\t{occ / k:.2f}\t{work / k:.1f}")
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rect-index", description="Exact rectangular pattern search in a 2D text.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("query", help="report every occurrence of each pattern")
    q.add_argument("text")
    q.add_argument("patterns", nargs="+")
    q.add_argument("--format", choices=("tsv", "json"), default="tsv")
    q.set_defaults(func=cmd_query)

    for name, func, helptext in (
        ("verify", cmd_verify, "compare the index against a brute-force scan"),
        ("bench", cmd_bench, "report build time, query time and space counters"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("text", nargs="?")
        p.add_argument("--random", nargs=3, type=int, metavar=("H", "W", "SIGMA"))
        p.add_argument("--patterns", type=int, default=100 if name == "verify" else 20)
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)
    sub.choices["bench"].add_argument("--widths", type=int, nargs="*", default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    if isinstance(getattr(args, "patterns", None), int) and args.patterns < 0:
        print("rect-index: error: --patterns must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"rect-index: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
