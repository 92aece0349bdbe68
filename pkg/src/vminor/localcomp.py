"""Local complementation, LC orbits and degree-2 smoothing."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from vminor.graph import Graph, GraphError, bits, delete_vertices

DEFAULT_ORBIT_CAP = 10**6


@dataclass(frozen=True)
class Step:
    """One move of a derivation: ``"lc"`` or ``"del"`` at an original vertex id."""

    op: str
    v: int

    def __post_init__(self):
        if self.op not in ("lc", "del"):
            raise ValueError(f"unknown step {self.op!r}")

    def __str__(self) -> str:
        return f"{self.op} {self.v}"


def LC(v: int) -> Step:
    return Step("lc", v)


def DEL(v: int) -> Step:
    return Step("del", v)


def lc_rows(rows: Sequence[int], v: int) -> tuple[int, ...]:
    """Local complementation at ``v`` on raw adjacency rows."""
    nv = rows[v]
    if nv & (nv - 1) == 0:
        # fewer than two neighbours: nothing to toggle
        return tuple(rows)
    out = list(rows)
    for u in bits(nv):
        out[u] = rows[u] ^ (nv & ~(1 << u))
    return tuple(out)


def local_complement(g: Graph, v: int) -> Graph:
    """Return ``G*v``: the subgraph induced on ``N(v)`` is replaced by its complement."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    return Graph._trusted(lc_rows(g.rows, v))


def apply_lc_sequence(g: Graph, seq: Iterable[int]) -> Graph:
    rows = g.rows
    for v in seq:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
        rows = lc_rows(rows, v)
    return Graph._trusted(rows)


@dataclass(frozen=True)
class LCOrbit:
    """Labeled graphs reachable by local complementation, in breadth-first order."""

    graphs: tuple[Graph, ...]
    truncated: bool

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __contains__(self, g: object) -> bool:
        return g in self.as_set()

    def as_set(self) -> frozenset[Graph]:
        return frozenset(self.graphs)


def iter_orbit(g: Graph, cap: int = DEFAULT_ORBIT_CAP) -> Iterator[tuple[tuple[int, ...], tuple[int, ...] | None, int]]:
    """Breadth-first walk of the LC orbit.

    Yields ``(rows, parent_rows, v)`` for every newly discovered state, where
    ``rows`` was obtained as ``parent * v`` (``parent_rows`` is ``None`` for
    the root). Raises :class:`OrbitTruncated` once more than ``cap`` states
    would be produced.
    """
    if cap < 1:
        raise ValueError("orbit cap must be at least 1")
    root = g.rows
    seen = {root}
    queue = deque([root])
    yield root, None, -1
    while queue:
        cur = queue.popleft()
        for v in range(g.n):
            nv = cur[v]
            if nv & (nv - 1) == 0:
                continue
            nxt = lc_rows(cur, v)
            if nxt in seen:
                continue
            if len(seen) >= cap:
                raise OrbitTruncated(len(seen))
            seen.add(nxt)
            queue.append(nxt)
            yield nxt, cur, v


class OrbitTruncated(Exception):
    def __init__(self, size: int):
        super().__init__(f"LC orbit exceeds cap of {size} states")
        self.size = size


def lc_orbit(g: Graph, cap: int = DEFAULT_ORBIT_CAP) -> LCOrbit:
    """Closure of ``{g}`` under local complementation, deduplicated on labeled adjacency.

    At most ``cap`` graphs are returned; ``truncated`` is set when the orbit
    is larger than that.
    """
    found: list[Graph] = []
    try:
        for rows, _, _ in iter_orbit(g, cap):
            found.append(Graph._trusted(rows))
    except OrbitTruncated:
        return LCOrbit(tuple(found), True)
    return LCOrbit(tuple(found), False)


class SmoothingError(ValueError):
    pass


def smooth_step(g: Graph, v: int) -> Graph:
    """Suppress the degree-2 vertex ``v``: local complement at ``v``, then delete it.

    The result has ``v`` removed (vertices above ``v`` shift down by one) and
    the two former neighbours of ``v`` joined by an edge.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    if g.degree(v) != 2:
        raise SmoothingError(f"vertex {v} has degree {g.degree(v)}, not 2")
    a, b = g.neighbors(v)
    if g.adjacent(a, b):
        raise SmoothingError(f"neighbours {a} and {b} of vertex {v} are adjacent")
    return delete_vertices(local_complement(g, v), [v])[0]


def _smoothable(g: Graph, v: int) -> bool:
    r = g.rows[v]
    if r.bit_count() != 2:
        return False
    a, b = bits(r)
    return not g.rows[a] >> b & 1


def smooth_maximally(g: Graph) -> tuple[Graph, list[Step]]:
    """Smooth degree-2 vertices (least applicable first) until none remain.

    The returned trace uses the vertex ids of the input graph; it lists each
    ``lc v`` immediately followed by ``del v``.
    """
    labels = list(range(g.n))
    trace: list[Step] = []
    while True:
        v = next((u for u in range(g.n) if _smoothable(g, u)), None)
        if v is None:
            return g, trace
        trace += [LC(labels[v]), DEL(labels[v])]
        g = smooth_step(g, v)
        del labels[v]
