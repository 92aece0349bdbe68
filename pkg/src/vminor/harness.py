"""Batch experiments: graph enumeration, forbidden vertex-minor filtering,
empirical epsilon scans and the sparse/dense degree split.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from vminor.canon import canonical_labeling
from vminor.graph import Graph, GraphError, bits, complement, induced_subgraph, is_isomorphic
from vminor.graph6 import write_graph6
from vminor.localcomp import DEFAULT_ORBIT_CAP
from vminor.pairs import alpha, max_balanced_homogeneous_pair, omega
from vminor.vertexminor import Undecided, is_vertex_minor

log = logging.getLogger(__name__)

MAX_ENUM_N = 8
CSV_COLUMNS = (
    "n",
    "family_size",
    "min_t",
    "min_ratio",
    "min_maxalphaomega",
    "implied_exponent",
    "truncated_count",
)
EPSILON_COMBINATION = "min(2*c*delta, delta)"


# -- enumeration ------------------------------------------------------------

def _wl_certificate(g: Graph) -> tuple:
    colours = [0] * g.n
    history = []
    ncol = 1
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in bits(g.rows[v])))) for v in range(g.n)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        history.append(tuple(sorted(sigs)))
        colours = [table[s] for s in sigs]
        if len(table) == ncol:
            return tuple(history)
        ncol = len(table)


def _extend(p: Graph, nbrs: int) -> Graph:
    n = p.n
    rows = [r | (nbrs >> v & 1) << n for v, r in enumerate(p.rows)]
    rows.append(nbrs)
    return Graph._trusted(tuple(rows))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs on ``n`` vertices, sorted by canonical string."""
    if n == 0:
        return (Graph._trusted(()),)
    buckets: dict[tuple, list[Graph]] = {}
    for p in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            g = _extend(p, nbrs)
            key = (g.num_edges, _wl_certificate(g))
            reps = buckets.setdefault(key, [])
            if not any(is_isomorphic(g, r) is not None for r in reps):
                reps.append(g)
    coded = []
    for reps in buckets.values():
        for g in reps:
            code, order = canonical_labeling(g)
            coded.append((code, induced_subgraph(g, range(n))[0] if not order else _relabel(g, order)))
    coded.sort(key=lambda cg: cg[0])
    return tuple(g for _, g in coded)


def _relabel(g: Graph, order: tuple[int, ...]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in bits(g.rows[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(tuple(rows))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class on ``n`` vertices.

    Representatives are relabeled to their canonical string (the least
    upper-triangle adjacency string over all labelings) and emitted in
    increasing order of it.
    """
    if not 0 <= n <= MAX_ENUM_N:
        raise GraphError(
            f"built-in enumeration covers 0 <= n <= {MAX_ENUM_N}; "
            "feed larger families as graph6 input from an external generator"
        )
    yield from _classes(n)


# -- filtering --------------------------------------------------------------

@dataclass
class FilterResult:
    kept: list[Graph] = field(default_factory=list)
    undecided: list[tuple[int, Graph, str]] = field(default_factory=list)


def filter_h_free(
    graphs: Iterable[Graph],
    h: Graph,
    strategy: str = "orbit",
    cap: int = DEFAULT_ORBIT_CAP,
) -> FilterResult:
    """Keep the graphs that have no vertex-minor isomorphic to ``h``.

    Graphs whose search runs out of states are reported in ``undecided``
    (input position, graph, reason) rather than kept or dropped.
    """
    res = FilterResult()
    for i, g in enumerate(graphs):
        try:
            w = is_vertex_minor(h, g, strategy=strategy, cap=cap)
        except Undecided as exc:
            res.undecided.append((i, g, str(exc)))
            continue
        if w is None:
            res.kept.append(g)
    return res


# -- epsilon scan -----------------------------------------------------------

@dataclass
class ScanRow:
    n: int
    family_size: int = 0
    min_t: int | None = None
    min_maxalphaomega: int | None = None
    truncated_count: int = 0
    argmin_t: Graph | None = None

    @property
    def vacuous(self) -> bool:
        return self.family_size == 0

    @property
    def min_ratio(self) -> Fraction | None:
        if self.min_t is None or self.n == 0:
            return None
        return Fraction(self.min_t, self.n)

    @property
    def implied_exponent(self) -> float | None:
        if self.min_maxalphaomega is None or self.n < 2:
            return None
        return math.log(self.min_maxalphaomega) / math.log(self.n)


@dataclass
class EpsilonReport:
    minor: Graph
    rows: list[ScanRow]
    strategy: str = "orbit"

    def overall(self) -> ScanRow | None:
        """Row with the smallest ``min_ratio`` (earliest n on ties)."""
        live = [r for r in self.rows if r.min_ratio is not None]
        return min(live, key=lambda r: (r.min_ratio, r.n)) if live else None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([
                r.n,
                r.family_size,
                _fmt(r.min_t),
                _fmt(r.min_ratio),
                _fmt(r.min_maxalphaomega),
                _fmt(r.implied_exponent),
                r.truncated_count,
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            "[epsilon-scan]",
            f"minor = {write_graph6(self.minor)}",
            f"strategy = {self.strategy}",
            f"epsilon_combination = {EPSILON_COMBINATION}",
            "epsilon_combination_note = symbolic only; c and delta have no numeric value",
        ]
        for r in self.rows:
            lines.append("")
            lines.append(f"[n={r.n}]")
            lines.append(f"family_size = {r.family_size}")
            if r.vacuous:
                lines.append("vacuous = true")
            else:
                lines.append(f"min_t = {r.min_t}")
                lines.append(f"min_ratio = {r.min_ratio}")
                lines.append(f"min_maxalphaomega = {r.min_maxalphaomega}")
                lines.append(f"implied_exponent = {_fmt(r.implied_exponent)}")
                lines.append(f"argmin_t = {write_graph6(r.argmin_t)}")
            lines.append(f"truncated_count = {r.truncated_count}")
        best = self.overall()
        lines.append("")
        lines.append("[overall]")
        if best is None:
            lines.append("vacuous = true")
        else:
            lines.append(f"min_ratio = {best.min_ratio}")
            lines.append(f"n = {best.n}")
            lines.append(f"min_t = {best.min_t}")
            lines.append(f"graph = {write_graph6(best.argmin_t)}")
        lines.append(f"truncated_count = {sum(r.truncated_count for r in self.rows)}")
        return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return f"{float(x):.6f}"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def epsilon_scan(
    graphs_by_n: dict[int, Iterable[Graph]],
    h: Graph,
    strategy: str = "orbit",
    cap: int = DEFAULT_ORBIT_CAP,
) -> EpsilonReport:
    """Per vertex count, the smallest balanced homogeneous pair and ``max(alpha, omega)``
    over the ``h``-vertex-minor-free members of each family."""
    rows = []
    for n in sorted(graphs_by_n):
        row = ScanRow(n)
        graphs = list(graphs_by_n[n])
        if any(g.n != n for g in graphs):
            raise GraphError(f"family for n={n} contains graphs of another order")
        res = filter_h_free(graphs, h, strategy=strategy, cap=cap)
        row.truncated_count = len(res.undecided)
        row.family_size = len(res.kept)
        for g in res.kept:
            pair, _ = max_balanced_homogeneous_pair(g)
            if row.min_t is None or pair.t < row.min_t:
                row.min_t = pair.t
                row.argmin_t = g
            mao = max(alpha(g), omega(g))
            if row.min_maxalphaomega is None or mao < row.min_maxalphaomega:
                row.min_maxalphaomega = mao
        rows.append(row)
    return EpsilonReport(h, rows, strategy)


def group_by_order(graphs: Iterable[Graph], ns: Iterable[int]) -> dict[int, list[Graph]]:
    """Bucket graphs by vertex count, keeping only (and always listing) the orders in ``ns``."""
    out: dict[int, list[Graph]] = {n: [] for n in ns}
    for g in graphs:
        if g.n in out:
            out[g.n].append(g)
    return out


# -- degree dichotomy -------------------------------------------------------

def as_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float (via its shortest repr)."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class DichotomyFinding:
    branch: str
    n: int
    delta: Fraction
    threshold: Fraction          # 2 * delta * n
    edge_count: int
    edge_bound: Fraction         # delta * n**2
    vertex: int | None = None
    degree: int | None = None
    neighborhood: Graph | None = None
    neighborhood_labels: tuple[int, ...] = ()
    neighborhood_complement: Graph | None = None


def degree_dichotomy(g: Graph, delta) -> DichotomyFinding:
    """Split on whether every degree is at most ``2*delta*n``.

    Sparse: no vertex exceeds the threshold, and then ``|E| <= delta*n^2``.
    Dense: the least vertex above it, with the subgraph induced on its
    neighbours and that subgraph's complement.
    """
    d = as_fraction(delta)
    if not 0 < d < 1:
        raise ValueError(f"delta must lie strictly between 0 and 1, got {delta}")
    n = g.n
    thr = 2 * d * n
    bound = d * n * n
    m = g.num_edges
    for v in range(n):
        deg = g.degree(v)
        if deg > thr:
            nb, labels = induced_subgraph(g, bits(g.rows[v]))
            return DichotomyFinding(
                "dense", n, d, thr, m, bound,
                vertex=v, degree=deg, neighborhood=nb,
                neighborhood_labels=labels, neighborhood_complement=complement(nb),
            )
    if m > bound:
        raise AssertionError("handshake bound violated; degree data is inconsistent")
    return DichotomyFinding("sparse", n, d, thr, m, bound)
