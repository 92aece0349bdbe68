"""Immutable simple graphs stored as tuples of adjacency bitmasks.

Row ``v`` of a graph is an int whose bit ``u`` is set iff ``u`` and ``v`` are
adjacent. Every operation here is a pure function returning a new graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad endpoints, duplicates)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or len(rows) != n:
            raise GraphError(f"need exactly {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if r >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(r):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.rows = tuple(rows)
        self._hash = None

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(rows)
        g.rows = rows
        g._hash = None
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        es = " ".join(f"{x}-{y}" for x, y in self.edges())
        return f"Graph(n={self.n}, edges=[{es}])"

    def __len__(self) -> int:
        return self.n

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in bits(self.rows[x] >> (x + 1) << (x + 1))]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


def build_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from an explicit edge list.

    Raises :class:`GraphError` on a loop, an endpoint outside ``0..n-1``,
    or an edge given twice (in either orientation).
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rows = [0] * n
    for e in edges:
        x, y = _endpoints(e)
        if x == y:
            raise GraphError(f"loop at vertex {x}")
        if not (0 <= x < n and 0 <= y < n):
            raise GraphError(f"edge {x}-{y} has an endpoint outside 0..{n - 1}")
        if rows[x] >> y & 1:
            raise GraphError(f"duplicate edge {x}-{y}")
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    return Graph._trusted(tuple(rows))


def _endpoints(e) -> tuple[int, int]:
    ends = sorted(e)
    if len(ends) == 1:
        # {v, v} collapses to a singleton set
        return ends[0], ends[0]
    if len(ends) != 2:
        raise GraphError(f"edge {e!r} does not have two endpoints")
    return ends[0], ends[1]


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph._trusted((0,) * n)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph._trusted(tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def _check_subset(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    if vs and (vs[0] < 0 or vs[-1] >= g.n):
        raise GraphError(f"vertex set {vs} not contained in 0..{g.n - 1}")
    return vs


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(G[S], labels)`` where ``labels[i]`` is the original id of new vertex ``i``.

    The relabeling is order preserving.
    """
    vs = _check_subset(g, vertices)
    return _induced(g.rows, vs), tuple(vs)


def _induced(rows: Sequence[int], vs: Sequence[int]) -> Graph:
    new_rows = []
    for v in vs:
        r = rows[v]
        nr = 0
        for i, u in enumerate(vs):
            if r >> u & 1:
                nr |= 1 << i
        new_rows.append(nr)
    return Graph._trusted(tuple(new_rows))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    gone = set(_check_subset(g, vertices))
    return induced_subgraph(g, [v for v in range(g.n) if v not in gone])


def subdivide(h: Graph, counts: Sequence[int] | dict | int) -> Graph:
    """Replace every edge of ``h`` by a path with ``counts[e]`` internal vertices.

    ``counts`` is aligned with ``h.edges()`` (lexicographic edge order), or is a
    dict keyed by ``(x, y)`` with ``x < y``, or a single int used for all edges.
    Original vertices keep their labels; fresh vertices are numbered from
    ``h.n`` upward, edge by edge in lexicographic edge order, along the path
    from the smaller endpoint.
    """
    edges = h.edges()
    if isinstance(counts, int):
        per_edge = [counts] * len(edges)
    elif isinstance(counts, dict):
        per_edge = [counts.get(e, 0) for e in edges]
    else:
        per_edge = list(counts)
        if len(per_edge) != len(edges):
            raise GraphError(f"expected {len(edges)} subdivision counts, got {len(per_edge)}")
    if any(c < 0 for c in per_edge):
        raise GraphError("subdivision counts must be non-negative")
    n = h.n + sum(per_edge)
    new_edges = []
    fresh = h.n
    for (x, y), c in zip(edges, per_edge):
        chain = [x, *range(fresh, fresh + c), y]
        fresh += c
        new_edges.extend(zip(chain, chain[1:]))
    return build_graph(n, new_edges)


def _refine(ga: Graph, gb: Graph) -> tuple[list[int], list[int]] | None:
    """Joint colour refinement of two equal-size graphs.

    Returns per-vertex colours comparable across both graphs, or ``None`` if the
    colour histograms already differ (graphs certainly non-isomorphic).
    """
    ca = [0] * ga.n
    cb = [0] * gb.n
    ncolors = 1
    while True:
        sa = [(ca[v], tuple(sorted(ca[u] for u in bits(ga.rows[v])))) for v in range(ga.n)]
        sb = [(cb[v], tuple(sorted(cb[u] for u in bits(gb.rows[v])))) for v in range(gb.n)]
        if sorted(sa) != sorted(sb):
            return None
        table = {s: i for i, s in enumerate(sorted(set(sa)))}
        ca = [table[s] for s in sa]
        cb = [table[s] for s in sb]
        if len(table) == ncolors:
            return ca, cb
        ncolors = len(table)


def induced_embedding(
    small: Graph,
    big_rows: Sequence[int],
    allowed: int,
    candidates: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    """Find the lexicographically least induced embedding of ``small``.

    ``big_rows`` are adjacency rows of the host, ``allowed`` is the mask of host
    vertices that may be used. ``candidates[i]``, if given, further restricts
    the image of ``small``'s vertex ``i``. Returns ``f`` with ``f[i]`` the host
    image of vertex ``i``, or ``None``.
    """
    k = small.n
    if k == 0:
        return ()
    srows = small.rows
    f = [0] * k
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        cand = allowed & ~used
        if candidates is not None:
            cand &= candidates[i]
        row_i = srows[i]
        for j in range(i):
            if row_i >> j & 1:
                cand &= big_rows[f[j]]
            else:
                cand &= ~big_rows[f[j]]
            if not cand:
                return False
        for g in bits(cand):
            f[i] = g
            used |= 1 << g
            if i + 1 == k or extend(i + 1):
                return True
            used &= ~(1 << g)
        return False

    return tuple(f) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Return the lexicographically least isomorphism ``V(g) -> V(h)``, or ``None``.

    The result ``f`` satisfies ``g.adjacent(x, y) == h.adjacent(f[x], f[y])``.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    colors = _refine(g, h)
    if colors is None:
        return None
    cg, ch = colors
    by_color: dict[int, int] = {}
    for v, c in enumerate(ch):
        by_color[c] = by_color.get(c, 0) | 1 << v
    cands = [by_color.get(c, 0) for c in cg]
    return induced_embedding(g, h.rows, h.vertex_mask, cands)


def find_induced_copy(h: Graph, g: Graph, allowed: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``h`` into ``g`` (restricted to ``allowed``)."""
    if allowed is None:
        allowed = g.vertex_mask
    if h.n > allowed.bit_count():
        return None
    return induced_embedding(h, g.rows, allowed)


def all_subsets(n: int, size: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(n), size)
