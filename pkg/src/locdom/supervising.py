"""Locating-dominating sets for twin-free digraphs with a supervising vertex.

Pipeline: BFS layers from a supervising vertex give a dominating set ``S``
with at least ``|S| - 1`` parts in its S-partition; ``S`` is grown while
that inequality survives, and the final answer is the smaller of two
completions (``X_1'`` from the singleton parts, ``X_2`` by dropping one
vertex per part).  Bounds: floor(2n/3) without quasi-twins, floor(3n/4)
for twin-free digraphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, bfs_layers, bits, mask_of, strong_components
from .errors import (
    DomainError,
    HypothesisError,
    InputError,
    InternalInconsistencyError,
    StructuralAssertionError,
)
from .ldcore import CertifiedSet, Kind, SPartition, certify, evaluate_set, part_count, s_partition
from .structure import are_quasi_twins, twin_report


def find_supervising_vertex(d: Digraph) -> int | None:
    """Smallest vertex of the unique source component, if that component reaches everything."""
    if d.n == 0:
        return None
    sc = strong_components(d)
    cond = sc.condensation
    sources = [i for i in range(cond.n) if cond.in_masks[i] == 0]
    if len(sources) != 1:
        return None
    s = sc.components[sources[0]][0]
    if bfs_layers(d, s).unreachable:
        return None
    return s


def _minimal_dominator(d: Digraph, pool: int, target: int) -> int:
    """Inclusion-minimal subset of ``pool`` dominating ``target`` (greedy, then pruned by id)."""
    chosen = 0
    for v in bits(pool):
        if d.out_masks[v] & target:
            chosen |= 1 << v
    for v in bits(chosen):
        trial = chosen & ~(1 << v)
        if all(d.in_masks[w] & trial for w in bits(target)):
            chosen = trial
    return chosen


def layered_dominating_set(d: Digraph, s: int) -> tuple[tuple[int, ...], dict[int, int]]:
    """Dominating set ``S`` with ``|P_S| >= |S| - 1`` and its witness map.

    Each vertex ``v`` chosen from a layer maps to a vertex of the next layer
    whose in-neighbours among the chosen vertices of ``v``'s layer are
    exactly ``{v}``.
    """
    layering = bfs_layers(d, s)
    if layering.unreachable:
        raise InputError(f"vertex {s} is not supervising: {list(layering.unreachable)} unreachable")
    layers = [mask_of(layer) for layer in layering.layers]
    k = layering.k
    witness: dict[int, int] = {}
    S = 0
    for i in range(k - 1, -1, -1):
        target = layers[i + 1] & ~S
        chosen = _minimal_dominator(d, layers[i], target)
        for v in bits(chosen):
            private = [w for w in bits(target) if d.in_masks[w] & chosen == 1 << v]
            if not private:
                raise InternalInconsistencyError(f"chosen vertex {v} has no private target")
            witness[v] = private[0]
        S |= chosen
    if k == 0 or d.in_masks[s] & S == 0:
        S |= 1 << s
    sigs = {d.in_masks[w] & S for w in witness.values()}
    if len(sigs) != len(witness) or any(S >> w & 1 for w in witness.values()):
        raise InternalInconsistencyError("witnesses do not have distinct signatures outside S")
    if any(d.in_masks[v] & S == 0 for v in bits(d.all_mask & ~S)):
        raise InternalInconsistencyError("layered set is not dominating")
    if part_count(d, S) < S.bit_count() - 1:
        raise InternalInconsistencyError("layered set has fewer than |S| - 1 parts")
    return tuple(bits(S)), witness


def _inequality(d: Digraph, S: int) -> bool:
    return part_count(d, S) >= S.bit_count() - 1


def maximal_augment(d: Digraph, S) -> tuple[int, ...]:
    """Grow ``S`` in ascending id order, restarting after each addition, while ``|P_S| >= |S| - 1``."""
    Sm = mask_of(S)
    if Sm == d.all_mask:
        # Nothing left to add; the inequality is not checked here.
        return tuple(bits(Sm))
    if not evaluate_set(d, bits(Sm)).dominating or not _inequality(d, Sm):
        raise InputError("augmentation needs a dominating set with |P_S| >= |S| - 1")
    grew = True
    while grew:
        grew = False
        for v in bits(d.all_mask & ~Sm):
            if _inequality(d, Sm | 1 << v):
                Sm |= 1 << v
                grew = True
                break
    return tuple(bits(Sm))


@dataclass(frozen=True)
class CompletionTrace:
    S: tuple[int, ...]
    partition: SPartition
    X1: tuple[int, ...] | None = None
    quasi_pairs: tuple[tuple[int, int], ...] = ()
    X1_prime: tuple[int, ...] | None = None
    X2: tuple[int, ...] | None = None
    chosen: str = "S"


def supervising_bound(n: int, quasi_twin_free: bool) -> int:
    if n == 1:
        # A lone vertex still needs itself.
        return 1
    return (2 * n) // 3 if quasi_twin_free else (3 * n) // 4


def complete_ld_set(d: Digraph, S) -> CertifiedSet:
    S = tuple(sorted(S))
    Sm = mask_of(S)
    partition = s_partition(d, S)
    bound = supervising_bound(d.n, twin_report(d).quasi_twin_free)
    if partition.n2 == 0:
        trace = CompletionTrace(S, partition)
        return certify(d, S, Kind.LD, bound, "supervising", trace)
    singles = [p[0] for p in partition.parts.values() if len(p) == 1]
    X1m = Sm | mask_of(singles)
    pairs = evaluate_set(d, bits(X1m)).unlocated_pairs
    used = 0
    for x, y in pairs:
        if not are_quasi_twins(d, x, y):
            raise StructuralAssertionError(f"unlocated pair ({x}, {y}) outside X_1 is not a quasi-twin pair")
        if used >> x & 1 or used >> y & 1:
            raise StructuralAssertionError(f"quasi-twin pair ({x}, {y}) overlaps another pair")
        used |= 1 << x | 1 << y
    X1p = X1m | mask_of(min(p) for p in pairs)
    dropped = mask_of(part[0] for part in partition.parts.values())
    X2m = d.all_mask & ~dropped
    if X1p.bit_count() <= X2m.bit_count():
        chosen, name = X1p, "X1'"
    else:
        chosen, name = X2m, "X2"
    trace = CompletionTrace(S, partition, tuple(bits(X1m)), tuple(pairs), tuple(bits(X1p)),
                            tuple(bits(X2m)), name)
    return certify(d, bits(chosen), Kind.LD, bound, "supervising", trace)


@dataclass(frozen=True)
class SupervisingTrace:
    source: int
    layered: tuple[int, ...]
    witness: dict[int, int]
    augmented: tuple[int, ...]
    completion: CompletionTrace


def solve_supervising(d: Digraph) -> CertifiedSet:
    s = find_supervising_vertex(d)
    if s is None:
        raise DomainError("digraph has no supervising vertex")
    tw = twin_report(d)
    if not tw.twin_free:
        pair = (tw.open_twins or tw.closed_twins)[0]
        raise HypothesisError(f"digraph has twins, e.g. {pair}")
    layered, witness = layered_dominating_set(d, s)
    augmented = maximal_augment(d, layered)
    result = complete_ld_set(d, augmented)
    trace = SupervisingTrace(s, layered, witness, augmented, result.trace)
    return CertifiedSet(result.vertices, result.kind, result.claimed_bound, result.verified,
                        result.trace_tag, trace)
