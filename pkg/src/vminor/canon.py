"""Canonical forms for small graphs.

The canonical string of a graph is the lexicographically least upper-triangle
adjacency bit string (graph6 column order ``x(0,1), x(0,2), x(1,2), ...``)
over all relabelings. It is found by a prefix-pruned search over partial
orderings: column ``j`` depends only on the first ``j+1`` placed vertices, so
a partial order whose prefix is already larger than the best can be dropped,
and two partial orders placing the same vertex set with the same column bits
for every unplaced vertex have identical continuations, so one is kept.
Vertices in one twin class are interchangeable, so only the least unplaced
member of each class is ever tried.
"""

from __future__ import annotations

from vminor.graph import Graph, bits


def twin_classes(g: Graph) -> list[int]:
    """Map each vertex to the least vertex of its twin class.

    Two vertices are twins if they have equal open or equal closed
    neighbourhoods; a vertex cannot have both kinds of twin, so the classes
    partition ``V(G)``.
    """
    rep = list(range(g.n))
    open_seen: dict[int, int] = {}
    closed_seen: dict[int, int] = {}
    for v, r in enumerate(g.rows):
        if r in open_seen:
            rep[v] = open_seen[r]
        else:
            open_seen[r] = v
        c = r | 1 << v
        if c in closed_seen:
            rep[v] = closed_seen[c]
        else:
            closed_seen[c] = v
    return rep


def canonical_labeling(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, order)``: the least adjacency bit string as an int and a labeling achieving it.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    """
    n = g.n
    if n <= 1:
        return 0, tuple(range(n))
    rows = g.rows
    rep = twin_classes(g)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(rep[v], []).append(v)

    reps = sorted(members)
    # each partial: (order, placed_mask, cols) where cols[v] holds the
    # adjacency bits of v to the already placed vertices, in placement order
    partials: list[tuple[tuple[int, ...], int, list[int]]] = [((), 0, [0] * n)]
    code = 0
    for j in range(n):
        best = -1
        chosen: list[tuple[tuple[int, ...], int, list[int]]] = []
        for order, placed, cols in partials:
            for c in reps:
                for v in members[c]:
                    if not placed >> v & 1:
                        break
                else:
                    continue
                col = cols[v]
                if best < 0 or col < best:
                    best = col
                    chosen = [(order, placed, cols, v)]
                elif col == best:
                    chosen.append((order, placed, cols, v))
        code = code << j | best
        if j == n - 1:
            return code, chosen[0][0] + (chosen[0][3],)
        partials = []
        futures = set()
        for order, placed, cols, v in chosen:
            r = rows[v]
            placed |= 1 << v
            cols = [c << 1 | (r >> u & 1) for u, c in enumerate(cols)]
            # identical placed sets and columns give identical continuations
            key = (placed, tuple(c for u, c in enumerate(cols) if not placed >> u & 1))
            if key not in futures:
                futures.add(key)
                partials.append((order + (v,), placed, cols))
    raise AssertionError("unreachable")


def canonical_code(g: Graph) -> int:
    return canonical_labeling(g)[0]


def canonical_form(g: Graph) -> Graph:
    """Relabel ``g`` so that its adjacency string is the canonical one."""
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in bits(g.rows[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(tuple(rows))


def brute_force_code(g: Graph) -> int:
    """Exhaustive minimum over all ``n!`` labelings; used only for cross-checks."""
    from itertools import permutations

    best = None
    for perm in permutations(range(g.n)):
        code = 0
        for y in range(1, g.n):
            for x in range(y):
                code = code << 1 | g.adjacent(perm[x], perm[y])
        if best is None or code < best:
            best = code
    return 0 if best is None else best
