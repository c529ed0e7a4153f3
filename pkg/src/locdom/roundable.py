"""ceil(n/2) locating-dominating sets for connected roundable local tournaments.

The round decomposition ``T_1..T_r`` is cut into consecutive tournaments
``D_1..D_t``.  A set ``S`` is assembled backwards from ``D_t`` to ``D_1``,
each step adding a small locating (or locating-dominating) set of the current
segment, and finally at most one vertex ``z`` of ``T_1`` is added to fix
domination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, bits, induced, mask_of
from .errors import InputError, InternalInconsistencyError
from .ldcore import CertifiedSet, Kind, certify, evaluate_set, tournament_ld_set, tournament_locating_set
from .structure import RoundDecomposition, classify, is_connected_mask, round_decomposition

# Blocks are 0-based in RoundDecomposition; the segmentation indices below are
# 1-based block positions so that ``indices[k]`` is ``i_k``.


@dataclass(frozen=True)
class Segmentation:
    indices: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]
    suffix_sizes: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.segments)

    def block_range(self, k: int) -> range:
        """0-based block indices of segment ``k`` (1-based)."""
        return range(self.indices[k - 1], self.indices[k])


def segment(dec: RoundDecomposition) -> Segmentation:
    r = dec.r
    if r < 2:
        raise InputError("segmentation needs at least two blocks")
    for i in range(r - 1):
        if not dec.dominates(i, i + 1):
            raise InternalInconsistencyError(
                f"block {i + 1} does not dominate block {i + 2}; invalid decomposition"
            )
    indices = [0]
    while indices[-1] < r:
        start = indices[-1] + 1
        nxt = start
        for j in range(start + 1, r + 1):
            if dec.dominates(start - 1, j - 1):
                nxt = j
        indices.append(nxt)
    segments = []
    for k in range(1, len(indices)):
        segments.append(tuple(sorted(v for i in range(indices[k - 1], indices[k]) for v in dec.blocks[i])))
    suffix = []
    total = 0
    for seg in reversed(segments):
        total += len(seg)
        suffix.append(total)
    return Segmentation(tuple(indices), tuple(segments), tuple(reversed(suffix)))


@dataclass(frozen=True)
class StepRecord:
    k: int
    case: int
    added: tuple[int, ...]
    assumed_dominating: bool
    pivot: int | None = None
    # Case 2 with |D'_k| odd only: whether the added set dominated D_k anyway.
    pivot_set_dominates: bool | None = None


@dataclass(frozen=True)
class ConstructionTrace:
    steps: tuple[StepRecord, ...]
    """Records in construction order, i.e. k = t first."""
    S: tuple[int, ...]
    z: int | None = None
    S_plus: tuple[int, ...] | None = None

    def step(self, k: int) -> StepRecord:
        for rec in self.steps:
            if rec.k == k:
                return rec
        raise KeyError(k)


def _sub_set(d: Digraph, vertices, kind: Kind) -> tuple[int, ...]:
    sub, idmap = induced(d, vertices)
    if kind is Kind.LD:
        found = tournament_ld_set(sub)
    else:
        found = tournament_locating_set(sub)
    return tuple(idmap[v] for v in found.vertices)


def _dominates_within(d: Digraph, chosen: int, target: int) -> bool:
    for v in bits(target & ~chosen):
        if d.in_masks[v] & chosen == 0:
            return False
    return True


def construct_S(d: Digraph, dec: RoundDecomposition, seg: Segmentation | None = None) -> ConstructionTrace:
    seg = segment(dec) if seg is None else seg
    t = seg.t
    S = 0
    flags: dict[int, bool] = {}
    steps = []
    for k in range(t, 0, -1):
        Dk = seg.segments[k - 1]
        last_block = dec.blocks[seg.indices[k] - 1]
        if k == t or flags[k + 1]:
            case = 1
        elif len(last_block) == 1:
            case = 2
        else:
            case = 3
        pivot = None
        held = None
        if case == 1:
            if len(Dk) % 2 == 0:
                added = _sub_set(d, Dk, Kind.LD)
                flag = True
            else:
                added = _sub_set(d, Dk, Kind.LOCATING)
                flag = False
        elif case == 2:
            pivot = last_block[0]
            rest = tuple(v for v in Dk if v != pivot)
            if len(rest) % 2 == 0:
                added = _sub_set(d, rest, Kind.LD) + (pivot,)
                flag = True
            else:
                added = _sub_set(d, rest, Kind.LOCATING) + (pivot,)
                flag = False
                held = _dominates_within(d, mask_of(added), mask_of(Dk))
        else:
            added = _sub_set(d, Dk, Kind.LD)
            flag = True
        flags[k] = flag
        S |= mask_of(added)
        steps.append(StepRecord(k, case, tuple(sorted(added)), flag, pivot, held))
    return ConstructionTrace(tuple(steps), tuple(bits(S)))


def augment_S_plus(d: Digraph, dec: RoundDecomposition, trace: ConstructionTrace,
                   seg: Segmentation | None = None) -> CertifiedSet:
    seg = segment(dec) if seg is None else seg
    D1 = mask_of(seg.segments[0])
    S = mask_of(trace.S)
    chosen = S & D1
    missing = [v for v in bits(D1 & ~chosen) if d.in_masks[v] & chosen == 0]
    if len(missing) > 1:
        raise InternalInconsistencyError(
            f"{len(missing)} vertices of D_1 undominated by S; at most one expected"
        )
    z = None
    if missing:
        z = missing[0]
        if z not in dec.blocks[0]:
            raise InternalInconsistencyError(f"undominated vertex {z} of D_1 is not in T_1")
        S |= 1 << z
    full = ConstructionTrace(trace.steps, trace.S, z, tuple(bits(S)))
    if mask_of(dec.vertices) != d.all_mask:
        raise InputError("decomposition must cover every vertex of the digraph")
    return certify(d, bits(S), Kind.LD, (d.n + 1) // 2, "roundable", full)


def check_construction(d: Digraph, dec: RoundDecomposition, seg: Segmentation,
                       trace: ConstructionTrace) -> list[str]:
    """Violations of the per-step guarantees of the construction (empty when all hold)."""
    problems = []
    S = mask_of(trace.S)
    t = seg.t
    for rec in trace.steps:
        k = rec.k
        Dk = seg.segments[k - 1]
        sub, idmap = induced(d, Dk)
        pos = {v: i for i, v in enumerate(idmap)}
        added_local = [pos[v] for v in rec.added]
        if not evaluate_set(sub, added_local).locating:
            problems.append(f"step {k}: added set is not locating in D_{k}")
        expected = 1 if k == t or trace.step(k + 1).assumed_dominating else (
            2 if len(dec.blocks[seg.indices[k] - 1]) == 1 else 3)
        if rec.case != expected:
            problems.append(f"step {k}: case {rec.case}, expected {expected}")
        Dk_mask = mask_of(Dk)
        chosen = S & Dk_mask
        if rec.assumed_dominating and not _dominates_within(d, chosen, Dk_mask):
            problems.append(f"step {k}: assumed dominating but S does not dominate D_{k}")
        if not _dominates_within(d, chosen, Dk_mask):
            missing = [v for v in bits(Dk_mask & ~chosen) if d.in_masks[v] & chosen == 0]
            first_block = dec.blocks[seg.indices[k - 1]]
            if len(missing) != 1 or missing[0] not in first_block:
                problems.append(f"step {k}: undominated vertices {missing} of D_{k} violate the first-block rule")
        suffix = mask_of(v for j in range(k, t + 1) for v in seg.segments[j - 1])
        if (S & suffix).bit_count() > seg.suffix_sizes[k - 1] // 2:
            problems.append(f"step {k}: suffix holds {(S & suffix).bit_count()} > floor({seg.suffix_sizes[k - 1]}/2)")
    for i, block in enumerate(dec.blocks):
        sub, idmap = induced(d, block)
        pos = {v: j for j, v in enumerate(idmap)}
        inside = [pos[v] for v in block if S >> v & 1]
        if not evaluate_set(sub, inside).locating:
            problems.append(f"S restricted to block {i + 1} is not locating")
        if len(block) >= 2 and not inside:
            problems.append(f"block {i + 1} of size {len(block)} has no vertex of S")
    within = mask_of(dec.vertices)
    undominated = [v for v in bits(within & ~S) if d.in_masks[v] & S & within == 0]
    if len(undominated) > 1 or (undominated and undominated[0] not in dec.blocks[0]):
        problems.append(f"undominated vertices {undominated} (at most one, inside T_1, allowed)")
    if len(trace.S) > len(dec.vertices) // 2:
        problems.append(f"|S| = {len(trace.S)} exceeds floor(n/2)")
    return problems


def solve_roundable(d: Digraph, dec: RoundDecomposition | None = None) -> CertifiedSet:
    """Certified LD set of size <= ceil(n/2) for a connected roundable local tournament.

    The trace of the result exposes ``S`` before augmentation; for non-strong
    inputs it is a locating set of size <= floor(n/2).
    """
    if dec is None:
        cls = classify(d)
        if not cls.local_tournament or not is_connected_mask(d, d.all_mask):
            raise InputError("solve_roundable needs a connected local tournament")
        dec = round_decomposition(d)
        if dec is None:
            raise InputError("digraph is not roundable")
    seg = segment(dec)
    trace = construct_S(d, dec, seg)
    return augment_S_plus(d, dec, trace, seg)
