"""Recognizers and decompositions for local tournaments.

Covers the tournament / local-tournament / locally semicomplete checks, twin
and quasi-twin detection, round labellings, round decompositions
``R[T_1, ..., T_r]`` and minimal separating sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .digraph import (
    Digraph,
    bits,
    build_digraph,
    induced_mask,
    is_connected_mask,
    is_strong_mask,
    mask_of,
    strong_components,
)
from .errors import InputError, StructuralAssertionError


def _und(d: Digraph, v: int) -> int:
    return d.out_masks[v] | d.in_masks[v]


def is_simple(d: Digraph) -> bool:
    return all(d.out_masks[v] & d.in_masks[v] == 0 for v in d.vertices)


def is_semicomplete_mask(d: Digraph, within: int) -> bool:
    """Every pair of vertices in ``within`` joined by at least one arc."""
    for v in bits(within):
        if within & ~(_und(d, v) | 1 << v):
            return False
    return True


def is_tournament_mask(d: Digraph, within: int) -> bool:
    if not is_semicomplete_mask(d, within):
        return False
    return all(d.out_masks[v] & d.in_masks[v] & within == 0 for v in bits(within))


def is_tournament(d: Digraph) -> bool:
    return is_tournament_mask(d, d.all_mask)


@dataclass(frozen=True)
class Classification:
    simple: bool
    tournament: bool
    local_tournament: bool
    locally_in_semicomplete: bool
    locally_out_semicomplete: bool


def classify(d: Digraph) -> Classification:
    simple = is_simple(d)
    in_semi = all(is_semicomplete_mask(d, d.in_masks[v]) for v in d.vertices)
    out_semi = all(is_semicomplete_mask(d, d.out_masks[v]) for v in d.vertices)
    local = simple and in_semi and out_semi
    return Classification(
        simple=simple,
        tournament=simple and is_semicomplete_mask(d, d.all_mask),
        local_tournament=local,
        locally_in_semicomplete=in_semi,
        locally_out_semicomplete=out_semi,
    )


@dataclass(frozen=True)
class TwinReport:
    open_twins: tuple[tuple[int, int], ...]
    closed_twins: tuple[tuple[int, int], ...]
    quasi_twins: tuple[tuple[int, int], ...]

    @property
    def twin_free(self) -> bool:
        return not self.open_twins and not self.closed_twins

    @property
    def quasi_twin_free(self) -> bool:
        return self.twin_free and not self.quasi_twins


def are_quasi_twins(d: Digraph, x: int, y: int) -> bool:
    nx, ny = d.in_masks[x], d.in_masks[y]
    return nx == ny | 1 << y or ny == nx | 1 << x


def twin_report(d: Digraph) -> TwinReport:
    open_t, closed_t, quasi = [], [], []
    for x, y in itertools.combinations(d.vertices, 2):
        nx, ny = d.in_masks[x], d.in_masks[y]
        if nx == ny:
            open_t.append((x, y))
        if nx | 1 << x == ny | 1 << y:
            closed_t.append((x, y))
        if are_quasi_twins(d, x, y):
            quasi.append((x, y))
    return TwinReport(tuple(open_t), tuple(closed_t), tuple(quasi))


def is_round_labelling(d: Digraph, order: Sequence[int]) -> bool:
    """Whether every in- and out-neighbourhood is a cyclic interval next to its vertex."""
    r = d.n
    if sorted(order) != list(range(r)):
        raise InputError(f"order {list(order)} is not a permutation of 0..{r - 1}")
    for i, v in enumerate(order):
        dout = d.out_degree(v)
        din = d.in_degree(v)
        want_out = mask_of(order[(i + j) % r] for j in range(1, dout + 1))
        want_in = mask_of(order[(i - j) % r] for j in range(1, din + 1))
        if want_out != d.out_masks[v] or want_in != d.in_masks[v]:
            return False
    return True


@dataclass(frozen=True)
class RoundDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    quotient: Digraph
    canonical: bool
    rotation_anchor: int | None = None

    @property
    def r(self) -> int:
        return len(self.blocks)

    def dominates(self, i: int, j: int) -> bool:
        """``T_i => T_j`` with 0-based block indices."""
        return self.quotient.has_arc(i, j)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for b in self.blocks for v in b))


def block_quotient(d: Digraph, parts: Sequence[int]) -> Digraph | None:
    """Quotient over vertex-mask parts, or None if some pair of parts is not all-or-none."""
    arcs = []
    for i, a in enumerate(parts):
        va = bits(a)
        for j, b in enumerate(parts):
            if i == j:
                continue
            hits = [(d.out_masks[v] & b) for v in va]
            if all(h == b for h in hits):
                arcs.append((i, j))
            elif any(hits):
                return None
    return build_digraph(len(parts), arcs)


def check_decomposition(d: Digraph, dec: RoundDecomposition, within: int | None = None) -> list[str]:
    """List of violated decomposition properties (empty when valid)."""
    problems = []
    within = d.all_mask if within is None else within
    masks = [mask_of(b) for b in dec.blocks]
    covered = 0
    for m in masks:
        if not m or m & covered:
            problems.append("blocks are not disjoint and nonempty")
        covered |= m
    if covered != within:
        problems.append("blocks do not cover the vertex set")
    if dec.r < 2:
        problems.append("fewer than two blocks")
    for i, m in enumerate(masks):
        if not (is_tournament_mask(d, m) and is_strong_mask(d, m)):
            problems.append(f"block {i} is not a strong tournament")
    q = block_quotient(d, masks)
    if q is None:
        problems.append("arcs between some pair of blocks are not all-or-none")
    elif q.arcs != dec.quotient.arcs:
        problems.append("quotient does not match the arcs between blocks")
    if not is_simple(dec.quotient):
        problems.append("quotient is not simple")
    if not is_round_labelling(dec.quotient, list(range(dec.r))):
        problems.append("quotient is not round in block order")
    if dec.canonical and any(i > j for i, j in dec.quotient.arcs):
        problems.append("canonical decomposition has a backward block arc")
    return problems


def _canonical(d: Digraph, within: int) -> RoundDecomposition:
    sub, idmap = induced_mask(d, within)
    sc = strong_components(sub)
    order = sc.condensation
    for i in range(order.n - 1):
        if not order.has_arc(i, i + 1):
            raise StructuralAssertionError(
                "condensation of a connected local tournament has no Hamiltonian path"
            )
    blocks = tuple(tuple(idmap[v] for v in comp) for comp in sc.components)
    masks = [mask_of(b) for b in blocks]
    q = block_quotient(d, masks)
    if q is None:
        raise StructuralAssertionError("strong components are not modules")
    dec = RoundDecomposition(blocks, q, canonical=True)
    problems = check_decomposition(d, dec, within)
    if problems:
        raise StructuralAssertionError("; ".join(problems))
    return dec


def _split_strong(d: Digraph, part: int) -> list[int]:
    sub, idmap = induced_mask(d, part)
    return [mask_of(idmap[v] for v in comp) for comp in strong_components(sub).components]


def _module_parts(d: Digraph) -> list[int]:
    """Coarsest partition into strong-tournament modules reachable by refinement.

    Vertices of one block share their set of non-neighbours, so blocks are
    unions inside those classes; strong components and outside profiles
    then refine until every part is a module.
    """
    full = d.all_mask
    classes: dict[int, int] = {}
    for v in d.vertices:
        classes.setdefault(full & ~(_und(d, v) | 1 << v), 0)
        classes[full & ~(_und(d, v) | 1 << v)] |= 1 << v
    parts = [p for c in classes.values() for p in _split_strong(d, c)]
    changed = True
    while changed:
        changed = False
        refined = []
        for p in parts:
            outside = full & ~p
            profiles: dict[tuple[int, int], int] = {}
            for v in bits(p):
                key = (d.out_masks[v] & outside, d.in_masks[v] & outside)
                profiles[key] = profiles.get(key, 0) | 1 << v
            if len(profiles) == 1:
                refined.append(p)
                continue
            changed = True
            for group in profiles.values():
                refined.extend(_split_strong(d, group))
        parts = refined
    parts.sort(key=lambda m: (m & -m).bit_length())
    return parts


def _forced_cycle(q: Digraph, start: int) -> list[int] | None:
    """Circular order where each block is followed by the source of its out-neighbourhood."""
    order = [start]
    seen = 1 << start
    v = start
    for _ in range(q.n - 1):
        nbrs = q.out_masks[v]
        heads = [w for w in bits(nbrs) if nbrs & ~(q.out_masks[w] | 1 << w) == 0]
        if len(heads) != 1 or seen >> heads[0] & 1:
            return None
        v = heads[0]
        order.append(v)
        seen |= 1 << v
    return order


def round_decomposition(d: Digraph) -> RoundDecomposition | None:
    """Round decomposition of a connected local tournament, or None if not roundable.

    Non-strong inputs get the canonical decomposition (blocks = strong
    components in topological order).  Strong inputs get the decomposition
    rotated so that the block holding vertex 0 comes first.
    """
    cls = classify(d)
    if not cls.local_tournament:
        raise InputError("round decomposition needs a local tournament")
    if d.n == 0 or not is_connected_mask(d, d.all_mask):
        raise InputError("round decomposition needs a connected digraph")
    if not is_strong_mask(d, d.all_mask):
        return _canonical(d, d.all_mask)
    if cls.tournament:
        raise InputError("strong tournaments have no unique round decomposition")
    parts = _module_parts(d)
    if len(parts) < 2:
        return None
    q = block_quotient(d, parts)
    if q is None or not is_simple(q):
        return None
    cycle = _forced_cycle(q, 0)
    if cycle is None:
        return None
    blocks = tuple(tuple(bits(parts[i])) for i in cycle)
    quotient = block_quotient(d, [parts[i] for i in cycle])
    dec = RoundDecomposition(blocks, quotient, canonical=False, rotation_anchor=blocks[0][0])
    if check_decomposition(d, dec):
        return None
    return dec


def canonical_decomposition(d: Digraph, within: int) -> RoundDecomposition:
    """Canonical decomposition of the non-strong connected local tournament ``d[within]``.

    Block ids stay those of ``d``.
    """
    if is_strong_mask(d, within) or not is_connected_mask(d, within):
        raise InputError("canonical decomposition needs a connected, non-strong subdigraph")
    return _canonical(d, within)


def is_separator(d: Digraph, X: int) -> bool:
    rest = d.all_mask & ~X
    return not is_strong_mask(d, rest)


def is_minimal_separator(d: Digraph, X: int) -> bool:
    if not is_separator(d, X):
        return False
    return all(not is_separator(d, X & ~(1 << x)) for x in bits(X))


def minimal_separators(d: Digraph, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Inclusion-minimal separating sets by size, then lexicographically."""
    top = d.n - 2 if max_size is None else min(max_size, d.n - 2)
    for size in range(1, top + 1):
        for X in itertools.combinations(d.vertices, size):
            if is_minimal_separator(d, mask_of(X)):
                yield X


def minimal_separator(d: Digraph) -> tuple[int, ...]:
    """Smallest set whose removal leaves a non-strong digraph (lexicographic tie-break)."""
    if d.n < 3:
        raise InputError("minimal separator needs at least three vertices")
    if not is_strong_mask(d, d.all_mask):
        raise InputError("minimal separator needs a strong digraph")
    for X in minimal_separators(d):
        return X
    raise InputError("no vertex set separates this digraph (every pair is joined both ways)")
