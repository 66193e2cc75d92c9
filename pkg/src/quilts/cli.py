"""Command line driver: enumerate, crosscheck, and report subcommands.

Artifacts land in an output directory (flag --out, else QUILT_OUT_DIR,
else ./quilt-out).  Enumeration writes one summary and one record file
per completed order, then rebuilds the merged manifest and grid; files
are staged with a .part suffix and renamed on completion, so interrupted
work is visibly incomplete and a rerun resumes at the first missing
order.  Crosscheck recounts a side window by exact cover and exits
nonzero when any cell disagrees with the enumeration grid.  Report
derives tables and named sequences from completed summaries and refuses
quantities the enumerated bounds cannot settle.

All outputs are ASCII and newline-terminated, and their content does not
depend on the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import ena, exactcover, pipeline, sequences
from .dissection import transformed, write_records
from .linsys import WIDTH_ARBITRARY, WIDTH_AUTO, WIDTH_FIXED

ORDER_FILE = "order-%04d.json"
RECORD_FILE = "records-%04d.jsonl"
MANIFEST = "manifest.csv"
GRID = "grid.csv"


@dataclass
class RunConfig:
    """Validated bundle of command line settings."""

    command: str
    order: int = 0
    size: int = 0
    max_order: int = 0
    jobs: int = 1
    out: Path = Path("quilt-out")
    form: str = "ascii"
    sequence: Tuple[str, ...] = ()
    verify_ena: bool = False
    bigint: str = WIDTH_AUTO
    seed: int = 0  # reserved for test shuffling; no algorithm reads it

    def __post_init__(self):
        for name in ("order", "size", "max_order"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be positive")
        if self.jobs < 1:
            raise ValueError("worker count must be >= 1")
        if self.command == "enumerate" and self.order < 1:
            raise ValueError("enumerate needs a positive --order")
        if self.command == "crosscheck" and self.size < 1:
            raise ValueError("crosscheck needs a positive --size")


def _out_dir(cfg: RunConfig, create: bool = True) -> Path:
    out = Path(cfg.out)
    if create:
        out.mkdir(parents=True, exist_ok=True)
    return out


def _write_text(path: Path, text: str) -> None:
    if text and not text.endswith("\n"):
        text += "\n"
    tmp = path.with_suffix(path.suffix + ".part")
    tmp.write_text(text, encoding="ascii")
    tmp.replace(path)


def _order_summary(res: pipeline.OrderResult, elapsed: float) -> dict:
    return {
        "order": res.order,
        "graphs_considered": res.graphs_considered,
        "graphs_filtered": res.graphs_filtered,
        "graphs_solved": res.graphs_solved,
        "structures": res.structures,
        "solutions": res.solutions,
        "rejects": res.rejects,
        "dissections": len(res.dissections),
        "per_side": {str(n): c for n, c in sorted(res.per_side.items())},
        "with_symmetry": res.with_symmetry,
        "size_multiset_count": res.size_multiset_count,
        "collisions": res.collisions,
        "elapsed": round(elapsed, 3),
    }


@dataclass
class LoadedOrder:
    """Order summary re-read from disk, shaped for the table builder."""

    order: int
    per_side: Dict[int, int]
    with_symmetry: int
    size_multiset_count: int
    tallies: dict


def load_summaries(out: Path) -> List[LoadedOrder]:
    loaded = []
    for path in sorted(out.glob("order-*.json")):
        obj = json.loads(path.read_text(encoding="ascii"))
        loaded.append(LoadedOrder(
            order=obj["order"],
            per_side={int(n): c for n, c in obj["per_side"].items()},
            with_symmetry=obj["with_symmetry"],
            size_multiset_count=obj["size_multiset_count"],
            tallies=obj))
    return loaded


def _rebuild_manifest(out: Path) -> None:
    rows = ["order,considered,solved,solutions,dissections"]
    grid_rows = ["n,order,count"]
    cells = {}
    for summary in load_summaries(out):
        t = summary.tallies
        rows.append("%d,%d,%d,%d,%d" % (
            t["order"], t["graphs_considered"], t["graphs_solved"],
            t["solutions"], t["dissections"]))
        for n, c in summary.per_side.items():
            cells[(n, summary.order)] = c
    for (n, order) in sorted(cells):
        grid_rows.append("%d,%d,%d" % (n, order, cells[(n, order)]))
    _write_text(out / MANIFEST, "\n".join(rows))
    _write_text(out / GRID, "\n".join(grid_rows))


def _verify_orbit(res: pipeline.OrderResult) -> List[str]:
    """Run the network check on every realized dissection (all symmetry
    images of the kept representatives cover every realizer output)."""
    failures = []
    for d in res.dissections:
        for name in ("e", "r", "r2", "r3", "h", "v", "d", "a"):
            ok, why = ena.verify(transformed(d, name))
            if not ok:
                failures.append("order %d side %d image %s: %s"
                                % (res.order, d.side, name, why))
    return failures


def run_enumerate(cfg: RunConfig) -> int:
    out = _out_dir(cfg)
    ena_failures: List[str] = []
    for order in range(2, cfg.order + 1):
        tag = out / (ORDER_FILE % order)
        if tag.exists():
            print("order %d: already complete, skipping" % order)
            continue
        t0 = time.time()
        res = pipeline.run_order(order, jobs=cfg.jobs, width_mode=cfg.bigint)
        if cfg.verify_ena:
            ena_failures.extend(_verify_orbit(res))
        records = out / (RECORD_FILE % order)
        tmp = records.with_suffix(".jsonl.part")
        write_records(tmp, res.dissections)
        tmp.replace(records)
        summary = _order_summary(res, time.time() - t0)
        _write_text(tag, json.dumps(summary, sort_keys=True))
        print("order %d: considered=%d solved=%d solutions=%d dissections=%d"
              " (%.1fs)" % (order, res.graphs_considered, res.graphs_solved,
                            res.solutions, len(res.dissections),
                            time.time() - t0))
    _rebuild_manifest(out)
    if ena_failures:
        _write_text(out / "ena-failures.txt", "\n".join(ena_failures))
        print("network verification failed on %d dissections"
              % len(ena_failures), file=sys.stderr)
        return 1
    if cfg.verify_ena:
        _write_text(out / "ena-failures.txt", "")
    return 0


def run_crosscheck(cfg: RunConfig) -> int:
    out = _out_dir(cfg)
    cap = cfg.max_order or None
    table = exactcover.crosscheck_table(cfg.size, cap)
    rows = ["n,order,count"]
    for (n, order) in sorted(table.grid):
        rows.append("%d,%d,%d" % (n, order, table.grid[(n, order)]))
    _write_text(out / "cover-grid.csv", "\n".join(rows))
    if cap is None:
        totals = ["n,total"]
        for n in range(1, cfg.size + 1):
            totals.append("%d,%d" % (
                n, sum(c for (m, _), c in table.grid.items() if m == n)))
        _write_text(out / "cover-totals.csv", "\n".join(totals))

    summaries = load_summaries(out)
    if not summaries:
        print("no completed enumeration summaries in %s; run enumerate"
              " first" % out, file=sys.stderr)
        return 2
    graph_table = sequences.build_table(summaries)
    enumerated = graph_table.order_max()
    order_window = min(cap, enumerated) if cap else enumerated
    diffs = []
    for n in range(1, cfg.size + 1):
        for order in range(1, order_window + 1):
            a = graph_table.grid.get((n, order), 0)
            b = table.grid.get((n, order), 0)
            if a != b:
                diffs.append("n=%d order=%d graph=%d cover=%d"
                             % (n, order, a, b))
    header = ("window: n <= %d, order <= %d" % (cfg.size, order_window))
    if diffs:
        _write_text(out / "crosscheck-diff.txt",
                    header + "\n" + "\n".join(diffs))
        print("crosscheck FAILED: %d cells differ" % len(diffs),
              file=sys.stderr)
        return 1
    _write_text(out / "crosscheck-diff.txt", header + "\nidentical")
    print("crosscheck passed over %s" % header)
    return 0


def _primes_upto(limit: int) -> List[int]:
    out = []
    for m in range(2, limit + 1):
        if all(m % p for p in out):
            out.append(m)
    return out


def _sequence_values(table: sequences.CountTable, name: str,
                     cfg: RunConfig) -> Tuple[List[int], int]:
    """Values and first index for one supported sequence id."""
    order_limit = cfg.max_order or table.order_max()
    if name in ("A221841", "A221842", "A232484"):
        per_order = sequences.order_sequences(table, order_limit)
        return per_order[name], 1
    if name == "A089047":
        return [sequences.g_of_N(table, o)
                for o in range(1, order_limit + 1)], 1
    if name == "A089046":
        return [sequences.least_edge_at_least(table, o)
                for o in range(1, order_limit + 1)], 1
    if name == "A005670":
        size_limit = cfg.size or sequences.g_of_N(table, table.order_max())
        return [sequences.f_of_n(table, n)
                for n in range(1, size_limit + 1)], 1
    if name == "A018835":
        size_limit = cfg.size or sequences.g_of_N(table, table.order_max())
        return [sequences.smaller_squares_min(table, n)
                for n in range(2, size_limit + 1)], 2
    if name == "A211302":
        size_limit = cfg.size or sequences.g_of_N(table, table.order_max())
        return [sequences.f_of_n(table, p)
                for p in _primes_upto(size_limit)], 1
    raise ValueError(f"unsupported sequence id {name!r}")


def _emit_sequence(out: Path, name: str, values: List[int], start: int,
                   form: str) -> Path:
    if form == "bfile":
        body = "".join("%d %d\n" % (i, v)
                       for i, v in enumerate(values, start=start))
        path = out / ("b%s.txt" % name.lstrip("A"))
    elif form == "csv":
        body = "".join("%s,%d,%d\n" % (name, i, v)
                       for i, v in enumerate(values, start=start))
        path = out / (name + ".csv")
    else:
        body = "".join("%d\n" % v for v in values)
        path = out / (name + ".txt")
    _write_text(path, body)
    return path


def _grid_table(table: sequences.CountTable) -> str:
    orders = sorted(table.enumerated_orders)
    sides = table.sides_seen()
    head = ["n\\N"] + [str(o) for o in orders]
    lines = ["\t".join(head)]
    for n in sides:
        row = [str(n)] + [str(table.grid.get((n, o), 0)) for o in orders]
        lines.append("\t".join(row))
    return "\n".join(lines)


def _g_table(table: sequences.CountTable) -> str:
    lines = ["order\tgreatest_side\tdissections_at_max"]
    for order in range(1, table.order_max() + 1):
        g = sequences.g_of_N(table, order)
        lines.append("%d\t%d\t%d" % (order, g, table.grid.get((g, order), 0)))
    return "\n".join(lines)


def _f_table(table: sequences.CountTable) -> str:
    lines = ["n\tleast_order"]
    top = sequences.g_of_N(table, table.order_max())
    for n in range(1, top + 1):
        lines.append("%d\t%d" % (n, sequences.f_of_n(table, n)))
    return "\n".join(lines)


def run_report(cfg: RunConfig) -> int:
    out = _out_dir(cfg, create=False)
    if not out.is_dir() or not list(out.glob("order-*.json")):
        print("no completed enumeration summaries in %s" % out,
              file=sys.stderr)
        return 2
    table = sequences.build_table(load_summaries(out))
    try:
        if cfg.sequence:
            for name in cfg.sequence:
                values, start = _sequence_values(table, name, cfg)
                path = _emit_sequence(out, name, values, start, cfg.form)
                print("wrote %s (%d terms)" % (path, len(values)))
        else:
            _rebuild_manifest(out)
            _write_text(out / "table-grid.txt", _grid_table(table))
            _write_text(out / "table-orders.txt",
                        (out / MANIFEST).read_text(encoding="ascii"))
            _write_text(out / "table-greatest-side.txt", _g_table(table))
            _write_text(out / "table-least-order.txt", _f_table(table))
            print("wrote tables for orders 1..%d" % table.order_max())
    except sequences.NotDetermined as stop:
        print("refusing: %s" % stop, file=sys.stderr)
        return 2
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quilts",
        description="Exhaustive search for prime dissections of squares")
    default_out = os.environ.get("QUILT_OUT_DIR", "quilt-out")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=default_out,
                       help="output directory (default: QUILT_OUT_DIR or"
                            " ./quilt-out)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes")
        p.add_argument("--seed", type=int, default=0,
                       help="reserved; no algorithm consumes randomness")

    p = sub.add_parser("enumerate",
                       help="run the structure enumeration up to an order")
    common(p)
    p.add_argument("--order", type=int, required=True,
                   help="largest order to enumerate")
    p.add_argument("--verify-ena", action="store_true",
                   help="run the network check on every dissection")
    p.add_argument("--bigint", choices=(WIDTH_AUTO, WIDTH_FIXED,
                                        WIDTH_ARBITRARY),
                   default=WIDTH_AUTO, help="integer width policy for the"
                                            " linear solver")

    p = sub.add_parser("crosscheck",
                       help="recount a side window by exact cover and diff")
    common(p)
    p.add_argument("--size", type=int, required=True,
                   help="largest side to recount")
    p.add_argument("--max-order", type=int, default=0,
                   help="order cap for the recount (0 = uncapped)")

    p = sub.add_parser("report",
                       help="derive tables and sequences from summaries")
    common(p)
    p.add_argument("--format", choices=("bfile", "csv", "ascii"),
                   default="ascii", dest="form")
    p.add_argument("--sequence", action="append", default=[],
                   metavar="ID", help="sequence id to emit (repeatable)")
    p.add_argument("--max-order", type=int, default=0,
                   help="limit for order-indexed output")
    p.add_argument("--size", type=int, default=0,
                   help="limit for side-indexed output")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    args.pop("func", None)
    try:
        cfg = RunConfig(command=command,
                        **{k: (tuple(v) if k == "sequence" else v)
                           for k, v in args.items()
                           if k in RunConfig.__dataclass_fields__})
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    cfg.out = Path(cfg.out)
    if command == "enumerate":
        return run_enumerate(cfg)
    if command == "crosscheck":
        return run_crosscheck(cfg)
    return run_report(cfg)


if __name__ == "__main__":
    sys.exit(main())
