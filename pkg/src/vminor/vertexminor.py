"""Vertex-minor containment with replayable witnesses.

``H`` is a vertex-minor of ``G`` when some sequence of local complementations
turns ``G`` into a graph with an induced subgraph isomorphic to ``H``. Two
search strategies are offered and cross-checked in the test suite:

``orbit``
    walk the labeled LC orbit of ``G`` breadth first and look for an induced
    copy of ``H`` in every member.
``interleaved``
    depth-first search over states reachable by ``lc v`` / ``del v`` moves,
    memoized on (labeled adjacency, surviving vertex set).

Both stop with :class:`Undecided` rather than a negative answer when their
state cap is hit.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterable

from vminor.graph import Graph, bits, induced_embedding
from vminor.localcomp import DEFAULT_ORBIT_CAP, DEL, LC, OrbitTruncated, Step, iter_orbit, lc_rows

log = logging.getLogger(__name__)

STRATEGIES = ("orbit", "interleaved")


class Undecided(Exception):
    """The search hit its state cap before deciding containment."""

    def __init__(self, strategy: str, cap: int):
        super().__init__(f"undecided: truncated ({strategy} search exceeded {cap} states)")
        self.strategy = strategy
        self.cap = cap


@dataclass(frozen=True)
class Witness:
    """A derivation of ``H`` from ``G``.

    ``trace`` is a sequence of steps on original vertex ids of ``G`` and
    ``embedding[h]`` is the surviving ``G`` vertex playing the role of ``h``.
    """

    trace: tuple[Step, ...]
    embedding: tuple[int, ...]

    def to_text(self) -> str:
        lines = [str(s) for s in self.trace]
        lines.append(" ".join(["embed", *(f"{h}->{g}" for h, g in enumerate(self.embedding))]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Witness":
        return parse_witness(text)


_STEP_RE = re.compile(r"(lc|del) (0|[1-9][0-9]*)")
_PAIR_RE = re.compile(r"(0|[1-9][0-9]*)->(0|[1-9][0-9]*)")


class WitnessFormatError(ValueError):
    pass


def parse_witness(text: str) -> Witness:
    """Parse the line format produced by :meth:`Witness.to_text`."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not (lines[-1] == "embed" or lines[-1].startswith("embed ")):
        raise WitnessFormatError("witness must end with an 'embed' line")
    trace = []
    for i, line in enumerate(lines[:-1], start=1):
        m = _STEP_RE.fullmatch(line)
        if not m:
            raise WitnessFormatError(f"line {i}: cannot parse step {line!r}")
        trace.append(Step(m.group(1), int(m.group(2))))
    embedding = []
    for j, tok in enumerate(lines[-1].split(" ")[1:]):
        m = _PAIR_RE.fullmatch(tok)
        if not m or int(m.group(1)) != j:
            raise WitnessFormatError(f"embed entry {tok!r} should read '{j}->g'")
        embedding.append(int(m.group(2)))
    return Witness(tuple(trace), tuple(embedding))


def _delete(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    keep = ~(1 << v)
    out = [r & keep for r in rows]
    out[v] = 0
    return tuple(out)


def replay(g: Graph, trace: Iterable[Step]) -> tuple[tuple[int, ...], int]:
    """Apply ``trace`` to ``g``; return (rows on original ids, mask of surviving vertices).

    Raises ``ValueError`` on a step that touches a missing or deleted vertex.
    """
    rows = g.rows
    alive = g.vertex_mask
    for i, s in enumerate(trace):
        if not 0 <= s.v < g.n:
            raise ValueError(f"step {i} ({s}): vertex out of range")
        if not alive >> s.v & 1:
            raise ValueError(f"step {i} ({s}): vertex {s.v} was already deleted")
        if s.op == "lc":
            rows = lc_rows(rows, s.v)
        else:
            rows = _delete(rows, s.v)
            alive &= ~(1 << s.v)
    return rows, alive


def witness_problem(h: Graph, g: Graph, w: Witness) -> str | None:
    """Return ``None`` if ``w`` certifies ``h`` as a vertex-minor of ``g``, else a diagnostic."""
    try:
        rows, alive = replay(g, w.trace)
    except ValueError as exc:
        return f"malformed trace: {exc}"
    emb = w.embedding
    if len(emb) != h.n:
        return f"embedding has {len(emb)} entries for {h.n} vertices"
    if len(set(emb)) != len(emb):
        return "embedding is not injective"
    for i, x in enumerate(emb):
        if not 0 <= x < g.n:
            return f"embedding sends {i} to {x}, outside the host"
        if not alive >> x & 1:
            return f"embedding sends {i} to deleted vertex {x}"
    for i in range(h.n):
        for j in range(i + 1, h.n):
            if h.adjacent(i, j) != bool(rows[emb[i]] >> emb[j] & 1):
                return f"pair {i}-{j} maps to {emb[i]}-{emb[j]} with different adjacency"
    return None


def verify_witness(h: Graph, g: Graph, w: Witness) -> bool:
    problem = witness_problem(h, g, w)
    if problem is not None:
        log.info("witness rejected: %s", problem)
    return problem is None


def _finish(g: Graph, lcs: list[int], image: tuple[int, ...]) -> Witness:
    keep = set(image)
    trace = [LC(v) for v in lcs] + [DEL(v) for v in range(g.n) if v not in keep]
    return Witness(tuple(trace), image)


def _by_orbit(h: Graph, g: Graph, cap: int) -> Witness | None:
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}
    full = g.vertex_mask
    try:
        for rows, prev, v in iter_orbit(g, cap):
            if prev is not None:
                parent[rows] = (prev, v)
            image = induced_embedding(h, rows, full)
            if image is None:
                continue
            lcs = []
            cur = rows
            while cur in parent:
                cur, u = parent[cur]
                lcs.append(u)
            lcs.reverse()
            return _finish(g, lcs, image)
    except OrbitTruncated:
        raise Undecided("orbit", cap) from None
    return None


def _by_interleaved(h: Graph, g: Graph, cap: int) -> Witness | None:
    k = h.n
    h_edges = h.num_edges
    h_degs = sorted(h.degrees())
    root = (g.rows, g.vertex_mask)
    parent: dict = {root: None}

    def goal(rows, alive):
        if alive.bit_count() != k:
            return None
        if sum(rows[v].bit_count() for v in bits(alive)) != 2 * h_edges:
            return None
        if sorted(rows[v].bit_count() for v in bits(alive)) != h_degs:
            return None
        return induced_embedding(h, rows, alive)

    def moves(rows, alive):
        if alive.bit_count() > k:
            for v in sorted(bits(alive), key=lambda u: (rows[u].bit_count(), u)):
                yield DEL(v), (_delete(rows, v), alive & ~(1 << v))
        for v in bits(alive):
            nv = rows[v]
            if nv & (nv - 1):
                yield LC(v), (lc_rows(rows, v), alive)

    stack = [(root, moves(*root))]
    found = goal(*root)
    end = root
    while found is None and stack:
        state, it = stack[-1]
        for step, nxt in it:
            if nxt in parent:
                continue
            if len(parent) >= cap:
                raise Undecided("interleaved", cap)
            parent[nxt] = (state, step)
            found = goal(*nxt)
            if found is not None:
                end = nxt
                break
            stack.append((nxt, moves(*nxt)))
            break
        else:
            stack.pop()
    if found is None:
        return None
    path: list[Step] = []
    cur = end
    while parent[cur] is not None:
        cur, step = parent[cur]
        path.append(step)
    path.reverse()
    # LC commutes with deleting any other vertex, so all deletions can go last.
    lcs = [s.v for s in path if s.op == "lc"]
    return _finish(g, lcs, found)


def is_vertex_minor(
    h: Graph,
    g: Graph,
    strategy: str = "orbit",
    cap: int = DEFAULT_ORBIT_CAP,
) -> Witness | None:
    """Decide whether ``h`` is a vertex-minor of ``g``.

    Returns a :class:`Witness` when it is and ``None`` when it is not.
    Raises :class:`Undecided` if ``cap`` states are exhausted first.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if h.n > g.n:
        return None
    if strategy == "orbit":
        return _by_orbit(h, g, cap)
    return _by_interleaved(h, g, cap)
