"""Command-line interface. Every graph read or written is graph6.

Exit status: 0 when every answer was decided, 2 when some search was
truncated (undecided), 1 on errors.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from contextlib import contextmanager
from typing import IO, Iterator

from vminor.cutrank import cross_twin_blocks
from vminor.graph import Graph, GraphError, build_graph
from vminor.graph6 import Graph6Error, parse_graph6, read_graph6_stream, write_graph6
from vminor.harness import (
    degree_dichotomy,
    enumerate_graphs,
    epsilon_scan,
    filter_h_free,
    group_by_order,
)
from vminor.localcomp import DEFAULT_ORBIT_CAP, lc_orbit, local_complement
from vminor.pairs import max_balanced_homogeneous_pair
from vminor.vertexminor import STRATEGIES, Undecided, is_vertex_minor

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2

log = logging.getLogger("vminor")


class _Status:
    def __init__(self):
        self.code = EXIT_OK

    def undecided(self):
        if self.code == EXIT_OK:
            self.code = EXIT_UNDECIDED

    def error(self):
        self.code = EXIT_ERROR


@contextmanager
def _open_in(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin
    else:
        with open(path) as fh:
            yield fh


@contextmanager
def _open_out(path: str | None, default: IO[str]) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield default
    else:
        with open(path, "w") as fh:
            yield fh


def _graphs(path: str, status: _Status) -> Iterator[Graph]:
    errors: list = []
    with _open_in(path) as fh:
        for g in read_graph6_stream(fh, errors):
            yield g
    if errors:
        status.error()


def _single_graph(path: str) -> Graph:
    with _open_in(path) as fh:
        for line in fh:
            if line.strip():
                return parse_graph6(line.strip())
    raise GraphError(f"{path}: no graph found")


def edge_list_text(g: Graph) -> str:
    """``n: x-y x-y ...`` form used by ``g6 decode``."""
    return f"{g.n}:" + "".join(f" {x}-{y}" for x, y in g.edges())


_EDGE_LIST_RE = re.compile(r"\s*(\d+)\s*:((?:\s*\d+-\d+)*)\s*")


def parse_edge_list(line: str) -> Graph:
    m = _EDGE_LIST_RE.fullmatch(line)
    if not m:
        raise GraphError(f"cannot parse edge list {line.strip()!r}; expected 'n: x-y x-y ...'")
    edges = [tuple(map(int, tok.split("-"))) for tok in m.group(2).split()]
    return build_graph(int(m.group(1)), edges)


def _parse_vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in re.split(r"[,\s]+", text) if tok]


def _parse_range(text: str) -> range:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


# -- subcommands ------------------------------------------------------------

def cmd_g6(args, status: _Status) -> None:
    with _open_in(args.input) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                if args.direction == "encode":
                    print(write_graph6(parse_edge_list(line)))
                else:
                    print(edge_list_text(parse_graph6(line.strip())))
            except (GraphError, Graph6Error) as exc:
                log.error("line %d: %s", lineno, exc)
                status.error()


def cmd_lc(args, status: _Status) -> None:
    for g in _graphs(args.input, status):
        print(write_graph6(local_complement(g, args.at)))


def cmd_orbit(args, status: _Status) -> None:
    for g in _graphs(args.input, status):
        orb = lc_orbit(g, cap=args.cap)
        for member in orb:
            print(write_graph6(member))
        if orb.truncated:
            log.warning("orbit of %s truncated at %d graphs", write_graph6(g), len(orb))
            status.undecided()


def cmd_vm(args, status: _Status) -> None:
    h = _single_graph(args.minor)
    first = True
    for g in _graphs(args.host, status):
        if not first:
            print()
        first = False
        try:
            w = is_vertex_minor(h, g, strategy=args.strategy, cap=args.cap)
        except Undecided as exc:
            print(str(exc))
            status.undecided()
            continue
        if w is None:
            print("absent")
        else:
            print("present")
            sys.stdout.write(w.to_text())


def cmd_cutrank(args, status: _Status) -> None:
    xs = _parse_vertex_list(args.set)
    for g in _graphs(args.input, status):
        prof = cross_twin_blocks(g, xs)
        print(f"rank {prof.rank}")
        print("X " + " | ".join(" ".join(map(str, b)) for b in prof.blocks_X))
        print("coX " + " | ".join(" ".join(map(str, b)) for b in prof.blocks_coX))


def cmd_pair(args, status: _Status) -> None:
    for g in _graphs(args.input, status):
        p, optimal = max_balanced_homogeneous_pair(g, mode=args.mode)
        print(
            f"{p.kind} t={p.t} A={','.join(map(str, p.A))} B={','.join(map(str, p.B))} "
            f"optimal={'yes' if optimal else 'no'}"
        )


def cmd_dichotomy(args, status: _Status) -> None:
    for g in _graphs(args.input, status):
        f = degree_dichotomy(g, args.delta)
        if f.branch == "sparse":
            print(f"sparse edges={f.edge_count} bound={f.edge_bound} threshold={f.threshold}")
        else:
            print(
                f"dense vertex={f.vertex} degree={f.degree} threshold={f.threshold} "
                f"neighborhood={write_graph6(f.neighborhood)} "
                f"complement={write_graph6(f.neighborhood_complement)}"
            )


def cmd_enum(args, status: _Status) -> None:
    for g in enumerate_graphs(args.n):
        print(write_graph6(g))


def cmd_filter(args, status: _Status) -> None:
    h = _single_graph(args.minor)
    res = filter_h_free(_graphs(args.input, status), h, strategy=args.strategy, cap=args.cap)
    for g in res.kept:
        print(write_graph6(g))
    if res.undecided:
        status.undecided()
        with _open_out(args.undecided, sys.stderr) as err:
            for i, g, why in res.undecided:
                err.write(f"{write_graph6(g)}\t# graph {i + 1}: {why}\n")


def cmd_scan(args, status: _Status) -> None:
    h = _single_graph(args.minor)
    ns = args.n
    if args.input is not None:
        families = group_by_order(_graphs(args.input, status), ns)
    else:
        families = {n: list(enumerate_graphs(n)) for n in ns}
    report = epsilon_scan(families, h, strategy=args.strategy, cap=args.cap)
    with _open_out(args.csv, sys.stdout) as out:
        out.write(report.to_csv())
    with _open_out(args.report, sys.stderr) as out:
        out.write(report.to_text())
    if any(r.truncated_count for r in report.rows):
        status.undecided()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vminor", description="Vertex-minor and homogeneous-pair toolkit.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", default="-", help="graph6 file (default: stdin)")
        return p

    p = sub.add_parser("g6", help="convert between edge lists ('n: x-y ...') and graph6")
    p.add_argument("direction", choices=("encode", "decode"))
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_g6)

    p = with_input(sub.add_parser("lc", help="local complementation at one vertex"))
    p.add_argument("--at", type=int, required=True, metavar="V")
    p.set_defaults(func=cmd_lc)

    p = with_input(sub.add_parser("orbit", help="labeled LC orbit"))
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP, metavar="N")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("vm", help="vertex-minor test with witness")
    p.add_argument("--minor", required=True, metavar="FILE")
    p.add_argument("--host", required=True, metavar="FILE")
    p.add_argument("--strategy", choices=STRATEGIES, default="orbit")
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
    p.set_defaults(func=cmd_vm)

    p = with_input(sub.add_parser("cutrank", help="cut-rank and twin blocks of a vertex set"))
    p.add_argument("--set", required=True, metavar="LIST", help="comma separated vertices")
    p.set_defaults(func=cmd_cutrank)

    p = with_input(sub.add_parser("pair", help="largest balanced complete/anticomplete pair"))
    p.add_argument("--mode", choices=("exact", "heuristic"), default="exact")
    p.set_defaults(func=cmd_pair)

    p = with_input(sub.add_parser("dichotomy", help="sparse/dense degree split"))
    p.add_argument("--delta", required=True, metavar="Q", help="rational in (0,1), e.g. 1/4 or 0.25")
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("enum", help="all graphs on n <= 8 vertices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enum)

    p = with_input(sub.add_parser("filter", help="keep graphs with no vertex-minor isomorphic to the minor"))
    p.add_argument("--minor", required=True, metavar="FILE")
    p.add_argument("--strategy", choices=STRATEGIES, default="orbit")
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
    p.add_argument("--undecided", metavar="FILE", help="where truncated graphs go (default: stderr)")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("scan", help="empirical epsilon scan over minor-free families")
    p.add_argument("--minor", required=True, metavar="FILE")
    p.add_argument("--n", required=True, type=_parse_range, metavar="A..B")
    p.add_argument("--input", metavar="FILE", help="graph6 family (default: built-in enumeration)")
    p.add_argument("--strategy", choices=STRATEGIES, default="orbit")
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
    p.add_argument("--csv", metavar="FILE", help="CSV output (default: stdout)")
    p.add_argument("--report", metavar="FILE", help="text report (default: stderr)")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    status = _Status()
    try:
        args.func(args, status)
    except (GraphError, Graph6Error, ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_ERROR
    return status.code


if __name__ == "__main__":
    sys.exit(main())
