"""Loopless finite digraphs on vertices ``0..n-1``.

Neighbourhoods are stored as integer bitmasks: bit ``u`` of ``in_masks[v]`` is
set iff ``u -> v`` is an arc.  This gives O(1) arc queries and lets the solvers
intersect whole neighbourhoods with candidate sets in a single operation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "Digraph",
    "Layering",
    "StrongComponents",
    "bfs_layers",
    "bits",
    "build_digraph",
    "connectivity",
    "induced",
    "mask_of",
    "neighbourhood",
    "reverse",
    "strong_components",
]


def bits(mask: int) -> list[int]:
    """Ascending list of the positions of set bits in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Digraph:
    n: int
    out_masks: tuple[int, ...]
    in_masks: tuple[int, ...]
    _arcs: tuple[tuple[int, int], ...] = field(repr=False, compare=False, default=())

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Arcs sorted lexicographically."""
        return self._arcs

    @property
    def arc_count(self) -> int:
        return len(self._arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.out_masks[u] | self.in_masks[u]) >> v & 1)

    def out_neighbours(self, v: int) -> list[int]:
        return bits(self.out_masks[v])

    def in_neighbours(self, v: int) -> list[int]:
        return bits(self.in_masks[v])

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self._arcs)})"


def _from_masks(n: int, out_masks: Sequence[int]) -> Digraph:
    in_masks = [0] * n
    arcs = []
    for u in range(n):
        for v in bits(out_masks[u]):
            in_masks[v] |= 1 << u
            arcs.append((u, v))
    return Digraph(n, tuple(out_masks), tuple(in_masks), tuple(arcs))


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Digraph on ``n`` vertices with the given arcs; duplicates are merged."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    out = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        out[u] |= 1 << v
    return _from_masks(n, out)


def _check_vertex(d: Digraph, v: int) -> None:
    if not 0 <= v < d.n:
        raise InputError(f"vertex {v} outside 0..{d.n - 1}")


def neighbourhood(d: Digraph, v: int, direction: str = "in", closed: bool = False) -> list[int]:
    _check_vertex(d, v)
    if direction == "in":
        m = d.in_masks[v]
    elif direction == "out":
        m = d.out_masks[v]
    else:
        raise InputError(f"direction must be 'in' or 'out', got {direction!r}")
    if closed:
        m |= 1 << v
    return bits(m)


def induced(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Induced subdigraph, renumbered densely in ascending id order.

    The second element maps new ids back to the ids of ``d``.
    """
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(d, v)
    pos = {v: i for i, v in enumerate(keep)}
    keep_mask = mask_of(keep)
    out = []
    for v in keep:
        m = 0
        for w in bits(d.out_masks[v] & keep_mask):
            m |= 1 << pos[w]
        out.append(m)
    return _from_masks(len(keep), out), tuple(keep)


def induced_mask(d: Digraph, keep_mask: int) -> tuple[Digraph, tuple[int, ...]]:
    return induced(d, bits(keep_mask))


def reverse(d: Digraph) -> Digraph:
    return _from_masks(d.n, d.in_masks)


def reach_mask(masks: Sequence[int], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` following ``masks``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_strong_mask(d: Digraph, within: int) -> bool:
    """Strong connectivity of ``d`` induced on the vertex mask ``within``."""
    if within == 0:
        return True
    start = (within & -within).bit_length() - 1
    return (
        reach_mask(d.out_masks, start, within) == within
        and reach_mask(d.in_masks, start, within) == within
    )


def is_connected_mask(d: Digraph, within: int) -> bool:
    if within == 0:
        return True
    und = [d.out_masks[v] | d.in_masks[v] for v in range(d.n)]
    start = (within & -within).bit_length() - 1
    return reach_mask(und, start, within) == within


def connectivity(d: Digraph) -> tuple[bool, bool]:
    """``(connected, strong)`` for the whole digraph."""
    if d.n < 1:
        raise InputError("connectivity needs at least one vertex")
    return is_connected_mask(d, d.all_mask), is_strong_mask(d, d.all_mask)


@dataclass(frozen=True)
class StrongComponents:
    components: tuple[tuple[int, ...], ...]
    """Strong components in a topological order of the condensation."""
    condensation: Digraph
    component_of: tuple[int, ...]

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(range(len(self.components)))


def strong_components(d: Digraph) -> StrongComponents:
    """Strong components ordered topologically; ties go to the smallest vertex id."""
    if d.n < 1:
        raise InputError("strong_components needs at least one vertex")
    remaining = d.all_mask
    comps: list[int] = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        c = reach_mask(d.out_masks, v, remaining) & reach_mask(d.in_masks, v, remaining)
        comps.append(c)
        remaining &= ~c
    owner = [0] * d.n
    for i, c in enumerate(comps):
        for v in bits(c):
            owner[v] = i
    succ = [0] * len(comps)
    indeg = [0] * len(comps)
    for i, c in enumerate(comps):
        out = 0
        for v in bits(c):
            out |= d.out_masks[v]
        for w in bits(out & ~c):
            succ[i] |= 1 << owner[w]
    for i in range(len(comps)):
        for j in bits(succ[i]):
            indeg[j] += 1
    key = [(c & -c).bit_length() - 1 for c in comps]
    heap = [(key[i], i) for i in range(len(comps)) if indeg[i] == 0]
    heapq.heapify(heap)
    topo = []
    while heap:
        _, i = heapq.heappop(heap)
        topo.append(i)
        for j in bits(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (key[j], j))
    rank = {old: new for new, old in enumerate(topo)}
    components = tuple(tuple(bits(comps[i])) for i in topo)
    cond_arcs = [(rank[i], rank[j]) for i in range(len(comps)) for j in bits(succ[i])]
    condensation = build_digraph(len(comps), cond_arcs)
    component_of = tuple(rank[owner[v]] for v in range(d.n))
    return StrongComponents(components, condensation, component_of)


@dataclass(frozen=True)
class Layering:
    source: int
    layers: tuple[tuple[int, ...], ...]
    unreachable: tuple[int, ...]

    @property
    def k(self) -> int:
        """Index of the last nonempty layer."""
        return len(self.layers) - 1

    def layer_of(self, v: int) -> int | None:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        return None


def bfs_layers(d: Digraph, s: int) -> Layering:
    """Vertices grouped by directed distance from ``s``."""
    _check_vertex(d, s)
    seen = 1 << s
    frontier = seen
    layers = []
    while frontier:
        layers.append(tuple(bits(frontier)))
        nxt = 0
        for v in bits(frontier):
            nxt |= d.out_masks[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return Layering(s, tuple(layers), tuple(bits(d.all_mask & ~seen)))
