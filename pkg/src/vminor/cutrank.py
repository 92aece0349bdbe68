"""Cut-rank over GF(2) and twin blocks across a vertex cut.

The cut-rank of ``X`` is the GF(2) rank of the ``X`` by ``V - X`` adjacency
matrix. Rows are kept as int bitmasks and eliminated with XOR.

Note on :func:`best_balanced_lowrank_pair`: the search is exhaustive over
balanced sets only for ``n <= 20``. A failed search says nothing about
rank-width beyond "no balanced set of cut-rank <= k exists".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from vminor.graph import Graph, GraphError, bits, mask_of
from vminor.pairs import ANTICOMPLETE, COMPLETE, HomogeneousPair, pair_sort_key

MAX_EXACT_N = 20


def gf2_rank(rows: Iterable[int], limit: int | None = None) -> int:
    """Rank of a set of GF(2) row vectors packed as ints.

    Stops early and returns ``limit + 1`` once the rank exceeds ``limit``.
    """
    basis: dict[int, int] = {}  # leading bit -> row
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                if limit is not None and len(basis) > limit:
                    return len(basis)
                break
            r ^= b
    return len(basis)


def _as_mask(g: Graph, x) -> int:
    if isinstance(x, int):
        m = x
    else:
        x = list(x)
        if any(not 0 <= v < g.n for v in x):
            raise GraphError(f"vertex set {sorted(x)} not contained in 0..{g.n - 1}")
        m = mask_of(x)
    if m & ~g.vertex_mask or m < 0:
        raise GraphError(f"vertex set not contained in 0..{g.n - 1}")
    return m


def cut_rank(g: Graph, x) -> int:
    """GF(2) cut-rank of the vertex set ``x`` (an iterable of vertices or a bitmask)."""
    xm = _as_mask(g, x)
    co = g.vertex_mask & ~xm
    return gf2_rank(g.rows[v] & co for v in bits(xm))


@dataclass(frozen=True)
class CutProfile:
    """A cut ``(X, V - X)`` with its rank and cross-neighbourhood twin blocks.

    Blocks are sorted tuples of vertices, listed in order of their least member.
    """

    X: tuple[int, ...]
    rank: int
    blocks_X: tuple[tuple[int, ...], ...]
    blocks_coX: tuple[tuple[int, ...], ...]

    def block_pairs(self, g: Graph) -> list[HomogeneousPair]:
        """Every (block of X, block of V - X) pair, each complete or anticomplete."""
        out = []
        for a in self.blocks_X:
            for b in self.blocks_coX:
                kind = COMPLETE if g.adjacent(a[0], b[0]) else ANTICOMPLETE
                out.append(HomogeneousPair(a, b, kind))
        return out


def _blocks(g: Graph, side: int, other: int) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for v in bits(side):
        groups.setdefault(g.rows[v] & other, []).append(v)
    return tuple(sorted(tuple(vs) for vs in groups.values()))


def cross_twin_blocks(g: Graph, x) -> CutProfile:
    """Partition both sides of the cut by neighbourhood pattern on the other side."""
    xm = _as_mask(g, x)
    co = g.vertex_mask & ~xm
    return CutProfile(
        X=tuple(bits(xm)),
        rank=cut_rank(g, xm),
        blocks_X=_blocks(g, xm, co),
        blocks_coX=_blocks(g, co, xm),
    )


def best_balanced_lowrank_pair(g: Graph, k: int) -> tuple[HomogeneousPair, CutProfile] | None:
    """Best homogeneous block pair over balanced cuts of cut-rank at most ``k``.

    Cuts range over every ``X`` with ``|X| > n/3`` and ``n - |X| > n/3``,
    enumerated by size and then lexicographically. The returned pair has
    ``A`` a block of ``X`` and ``B`` a block of ``V - X`` and maximises
    ``min(|A|, |B|)``; ties go to the earliest ``X``, then anticomplete before
    complete, then the lexicographically least ``A`` and ``B``. Returns
    ``None`` when no balanced ``X`` has cut-rank ``<= k``.
    """
    n = g.n
    if n > MAX_EXACT_N:
        raise GraphError(
            f"exhaustive balanced-cut search is limited to n <= {MAX_EXACT_N}; "
            "pass a chosen X to cross_twin_blocks instead"
        )
    if k < 0:
        raise ValueError("k must be non-negative")
    full = g.vertex_mask
    rows = g.rows
    best = None
    for size in range(n + 1):
        if not (3 * size > n and 3 * (n - size) > n):
            continue
        for xs in combinations(range(n), size):
            xm = mask_of(xs)
            co = full & ~xm
            if gf2_rank((rows[v] & co for v in xs), limit=k) > k:
                continue
            prof = cross_twin_blocks(g, xm)
            p = min(prof.block_pairs(g), key=lambda q: (-q.t, pair_sort_key(q)))
            # an equal t on a later X never displaces the earlier one
            if best is None or p.t > best[0].t:
                best = (p, prof)
    return best
