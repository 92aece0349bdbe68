"""Complete/anticomplete pairs, the largest balanced such pair, and alpha/omega.

A pair ``(A, B)`` of disjoint vertex sets is *complete* when every cross pair
is an edge and *anticomplete* when none is; edges inside ``A`` or inside ``B``
never matter. Its balanced size is ``t = min(|A|, |B|)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from vminor.graph import Graph, GraphError, bits, complement, mask_of

ANTICOMPLETE = "anticomplete"
COMPLETE = "complete"
KINDS = (ANTICOMPLETE, COMPLETE)
MAX_EXACT_PAIR_N = 16
MAX_CLIQUE_N = 30


@dataclass(frozen=True)
class HomogeneousPair:
    A: tuple[int, ...]
    B: tuple[int, ...]
    kind: str
    t: int = field(init=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "A", tuple(sorted(self.A)))
        object.__setattr__(self, "B", tuple(sorted(self.B)))
        if set(self.A) & set(self.B):
            raise GraphError("A and B must be disjoint")
        object.__setattr__(self, "t", min(len(self.A), len(self.B)))

    def holds_in(self, g: Graph) -> bool:
        if self.kind == COMPLETE:
            return is_complete_pair(g, self.A, self.B)
        return is_anticomplete_pair(g, self.A, self.B)


def pair_sort_key(p: HomogeneousPair) -> tuple:
    return (KINDS.index(p.kind), p.A, p.B)


def _masks(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[int, int]:
    a, b = list(a), list(b)
    for v in a + b:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    am, bm = mask_of(a), mask_of(b)
    if am & bm:
        raise GraphError(f"sets overlap in {sorted(bits(am & bm))}")
    return am, bm


def is_complete_pair(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    am, bm = _masks(g, a, b)
    return all(g.rows[v] & bm == bm for v in bits(am))


def is_anticomplete_pair(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    am, bm = _masks(g, a, b)
    return all(not g.rows[v] & bm for v in bits(am))


def _first_anticomplete(rows: tuple[int, ...], t: int) -> tuple[tuple[int, ...], int] | None:
    """Lexicographically least ``t``-set ``A`` with at least ``t`` common non-neighbours outside ``A``.

    Returns ``(A, C)`` with ``C`` the mask of common non-neighbours.
    """
    n = len(rows)
    chosen: list[int] = []

    def dfs(start: int, avail: int) -> int | None:
        if len(chosen) == t:
            return avail
        need = t - len(chosen)
        for v in range(start, n - need + 1):
            nxt = avail & ~rows[v] & ~(1 << v)
            if nxt.bit_count() < t:
                continue
            chosen.append(v)
            res = dfs(v + 1, nxt)
            if res is not None:
                return res
            chosen.pop()
        return None

    c = dfs(0, (1 << n) - 1)
    return None if c is None else (tuple(chosen), c)


def _best_of_kind(rows: tuple[int, ...], kind: str) -> HomogeneousPair:
    n = len(rows)
    # largest t first; the first hit is optimal and lexicographically least
    for t in range(n // 2, 0, -1):
        hit = _first_anticomplete(rows, t)
        if hit is not None:
            a, c = hit
            b = list(bits(c))[:t]
            return HomogeneousPair(a, tuple(b), kind)
    return HomogeneousPair((), (), kind)


def max_balanced_homogeneous_pair(g: Graph, mode: str = "exact") -> tuple[HomogeneousPair, bool]:
    """Largest ``t = min(|A|, |B|)`` over complete and anticomplete pairs.

    Returns ``(pair, optimal)``. In ``exact`` mode (``n <= 16``) the pair is
    optimal with ``|A| = |B| = t``; ties prefer anticomplete, then the
    lexicographically least ``A``, then ``B``. ``heuristic`` mode runs a
    greedy search from structured seeds and always reports
    ``optimal = False``.
    """
    if mode == "heuristic":
        return heuristic_pair(g), False
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if g.n > MAX_EXACT_PAIR_N:
        raise GraphError(f"exact pair search is limited to n <= {MAX_EXACT_PAIR_N}; use mode='heuristic'")
    anti = _best_of_kind(g.rows, ANTICOMPLETE)
    comp = _best_of_kind(complement(g).rows, COMPLETE)
    return (anti if anti.t >= comp.t else comp), True


def brute_force_max_t(g: Graph, kind: str) -> int:
    """Maximum balanced size of a pair of the given kind, by trying every ``A``."""
    rows = g.rows if kind == ANTICOMPLETE else complement(g).rows
    n = g.n
    best = 0
    for am in range(1, 1 << n):
        c = (1 << n) - 1 & ~am
        for v in bits(am):
            c &= ~rows[v]
        best = max(best, min(am.bit_count(), c.bit_count()))
    return best


def _grow(rows: tuple[int, ...], seed: Iterable[int]) -> tuple[int, tuple[int, ...], int]:
    n = len(rows)
    a: list[int] = []
    c = (1 << n) - 1
    for v in seed:
        a.append(v)
        c &= ~rows[v] & ~(1 << v)
    best = (min(len(a), c.bit_count()), tuple(a), c)
    while c:
        # add the vertex that keeps the most common non-neighbours
        options = [(-(c & ~rows[u] & ~(1 << u)).bit_count(), u) for u in range(n) if u not in a]
        if not options:
            break
        _, u = min(options)
        a.append(u)
        c &= ~rows[u] & ~(1 << u)
        t = min(len(a), c.bit_count())
        if t > best[0]:
            best = (t, tuple(a), c)
    return best


def heuristic_pair(g: Graph, seeds_per_kind: int = 8) -> HomogeneousPair:
    """Greedy homogeneous pair grown from high-degree vertices and twin blocks of their closed neighbourhoods."""
    from vminor.cutrank import cross_twin_blocks

    best: HomogeneousPair | None = None
    for kind, h in ((ANTICOMPLETE, g), (COMPLETE, complement(g))):
        rows = h.rows
        order = sorted(range(h.n), key=lambda v: (-rows[v].bit_count(), v))[:seeds_per_kind]
        seeds: list[tuple[int, ...]] = [(v,) for v in order]
        for v in order:
            prof = cross_twin_blocks(h, rows[v] | 1 << v)
            seeds.extend(prof.blocks_X)
            seeds.extend(prof.blocks_coX)
        for seed in seeds:
            t, a, c = _grow(rows, seed)
            if t == 0:
                continue
            cand = HomogeneousPair(sorted(a)[:t], list(bits(c))[:t], kind)
            if best is None or (-cand.t, pair_sort_key(cand)) < (-best.t, pair_sort_key(best)):
                best = cand
    return best if best is not None else HomogeneousPair((), (), ANTICOMPLETE)


def max_clique_size(g: Graph) -> int:
    """Exact clique number by branch and bound with a greedy colouring bound."""
    if g.n > MAX_CLIQUE_N:
        raise GraphError(f"exact clique search is limited to n <= {MAX_CLIQUE_N}")
    rows = g.rows
    best = 0

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy colouring; returns (vertex, colour) in increasing colour order
        out = []
        colour = 0
        uncol = cand
        while uncol:
            colour += 1
            q = uncol
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~rows[v] & ~(1 << v)
                uncol &= ~(1 << v)
                out.append((v, colour))
        return out

    def expand(size: int, cand: int) -> None:
        nonlocal best
        for v, colour in reversed(colour_bound(cand)):
            if size + colour <= best:
                return
            nxt = cand & rows[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, g.vertex_mask)
    return best


def omega(g: Graph) -> int:
    return max_clique_size(g)


def alpha(g: Graph) -> int:
    return max_clique_size(complement(g))
