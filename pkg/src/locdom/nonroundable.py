"""Strong non-roundable local tournaments, and the top-level local tournament dispatcher.

A minimal separating set X splits the digraph into a tournament ``D[X]``
and a non-strong part ``Y`` whose canonical blocks ``T_1..T_r`` satisfy
``T_r => X => T_1``.  Four cases, on whether ``|T_r|`` and ``|X|`` are 1,
combine sets built on ``D[Y]``, ``D[Z]`` (``Z = Y - T_r``) and ``D[X]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, bits, induced, is_connected_mask, is_strong_mask, mask_of
from .errors import InputError, InternalInconsistencyError, StructuralAssertionError
from .ldcore import CertifiedSet, Kind, certify, tournament_ld_set, tournament_locating_set
from .roundable import construct_S, segment, solve_roundable
from .structure import (
    RoundDecomposition,
    block_quotient,
    canonical_decomposition,
    classify,
    is_minimal_separator,
    is_tournament_mask,
    minimal_separators,
    round_decomposition,
)


@dataclass(frozen=True)
class SeparatorDecomposition:
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    """Canonical blocks of ``D[Y]``, ids of the full digraph."""

    @property
    def case_id(self) -> int:
        tr_single = len(self.blocks[-1]) == 1
        x_single = len(self.X) == 1
        if tr_single:
            return 1 if x_single else 2
        return 3 if x_single else 4

    @property
    def n1(self) -> int:
        return len(self.Y)

    @property
    def n2(self) -> int:
        return len(self.Z)


def separator_problems(d: Digraph, X) -> list[str]:
    """Which of the separator properties fail for ``X`` (empty when all hold)."""
    Xm = mask_of(X)
    Ym = d.all_mask & ~Xm
    problems = []
    if not Xm or not Ym:
        return ["X and its complement must both be nonempty"]
    if not is_minimal_separator(d, Xm):
        problems.append("D - X is strong or X is not inclusion-minimal")
    cls_y = classify(induced(d, bits(Ym))[0])
    if not (cls_y.local_tournament and is_connected_mask(d, Ym)) or cls_y.tournament:
        problems.append("D - X is not a connected local tournament that is not a tournament")
    if not is_tournament_mask(d, Xm):
        problems.append("D[X] is not a tournament")
    if problems:
        return problems
    dec = canonical_decomposition(d, Ym)
    if dec.r < 3:
        problems.append(f"canonical decomposition of D - X has r = {dec.r} < 3")
    first, last = mask_of(dec.blocks[0]), mask_of(dec.blocks[-1])
    if any(d.out_masks[v] & Xm != Xm for v in bits(last)):
        problems.append("some arc from T_r to X is missing")
    if any(d.out_masks[x] & first != first for x in bits(Xm)):
        problems.append("some arc from X to T_1 is missing")
    return problems


def decompose_with_separator(d: Digraph, X) -> SeparatorDecomposition:
    """Build the decomposition for an explicit X (no roundability guard)."""
    problems = separator_problems(d, X)
    if problems:
        raise StructuralAssertionError("; ".join(problems))
    Xm = mask_of(X)
    Ym = d.all_mask & ~Xm
    dec = canonical_decomposition(d, Ym)
    Z = tuple(sorted(v for b in dec.blocks[:-1] for v in b))
    return SeparatorDecomposition(tuple(bits(Xm)), tuple(bits(Ym)), Z, dec.blocks)


def separator_decomposition(d: Digraph, max_size: int | None = None) -> SeparatorDecomposition:
    """First minimal separator (by size, then lexicographic) with every property."""
    cls = classify(d)
    if not cls.local_tournament or cls.tournament:
        raise InputError("separator decomposition needs a local tournament that is not a tournament")
    if not is_strong_mask(d, d.all_mask):
        raise InputError("separator decomposition needs a strong digraph")
    if round_decomposition(d) is not None:
        raise InputError("digraph is roundable; use the roundable construction")
    for X in minimal_separators(d, max_size):
        if not separator_problems(d, X):
            return decompose_with_separator(d, X)
    raise StructuralAssertionError("no minimal separator satisfies the decomposition properties")


def _local_decomposition(d: Digraph, vertices, blocks) -> tuple[Digraph, tuple[int, ...], RoundDecomposition]:
    sub, idmap = induced(d, vertices)
    pos = {v: i for i, v in enumerate(idmap)}
    local_blocks = [tuple(pos[v] for v in b) for b in blocks]
    q = block_quotient(sub, [mask_of(b) for b in local_blocks])
    if q is None:
        raise StructuralAssertionError("blocks are not modules of the subdigraph")
    return sub, idmap, RoundDecomposition(tuple(local_blocks), q, canonical=True)


def _construction_S(d: Digraph, vertices, blocks) -> tuple[int, ...]:
    sub, idmap, dec = _local_decomposition(d, vertices, blocks)
    if len(dec.blocks) < 2:
        raise StructuralAssertionError("recursion target has fewer than two blocks")
    trace = construct_S(sub, dec, segment(dec))
    return tuple(idmap[v] for v in trace.S)


def _on_X(d: Digraph, X, kind: Kind) -> tuple[int, ...]:
    sub, idmap = induced(d, X)
    found = tournament_ld_set(sub) if kind is Kind.LD else tournament_locating_set(sub)
    return tuple(idmap[v] for v in found.vertices)


@dataclass(frozen=True)
class CombineTrace:
    case_id: int
    X: tuple[int, ...]
    parts: dict


def combine_cases(d: Digraph, sdec: SeparatorDecomposition) -> CertifiedSet:
    case = sdec.case_id
    Tr = sdec.blocks[-1]
    parts: dict[str, tuple[int, ...]] = {}
    if case in (1, 2):
        if len(sdec.blocks) - 1 < 2 or is_strong_mask(d, mask_of(sdec.Z)):
            raise StructuralAssertionError("D[Z] must be non-strong with at least two blocks")
    if case == 1:
        sub, idmap = induced(d, sdec.Z)
        parts["T_r"] = Tr
        parts["ld(D[Z])"] = tuple(idmap[v] for v in solve_local_tournament(sub).vertices)
    elif case == 2:
        parts["T_r"] = Tr
        parts["S_2"] = _construction_S(d, sdec.Z, sdec.blocks[:-1])
        parts["locating(D[X])"] = _on_X(d, sdec.X, Kind.LOCATING)
    elif case == 3:
        parts["S_1"] = _construction_S(d, sdec.Y, sdec.blocks)
        parts["X"] = sdec.X
    else:
        parts["S_1"] = _construction_S(d, sdec.Y, sdec.blocks)
        parts["ld(D[X])"] = _on_X(d, sdec.X, Kind.LD)
    S = sorted({v for p in parts.values() for v in p})
    return certify(d, S, Kind.LD, (d.n + 1) // 2, f"nonroundable-case{case}",
                   CombineTrace(case, sdec.X, parts))


def solve_nonroundable(d: Digraph) -> CertifiedSet:
    return combine_cases(d, separator_decomposition(d))


def require_connected_local_tournament(d: Digraph) -> None:
    if d.n < 1:
        raise InputError("digraph has no vertices")
    if not classify(d).local_tournament:
        raise InputError("not a local tournament")
    if not is_connected_mask(d, d.all_mask):
        raise InputError("not connected (an edgeless local tournament needs n - 1 vertices)")


def solve_local_tournament(d: Digraph) -> CertifiedSet:
    """Certified LD set of size <= ceil(n/2) for any connected local tournament."""
    require_connected_local_tournament(d)
    if classify(d).tournament:
        found = tournament_ld_set(d)
        return CertifiedSet(found.vertices, found.kind, found.claimed_bound, found.verified,
                            "tournament")
    dec = round_decomposition(d)
    if dec is not None:
        return solve_roundable(d, dec)
    result = solve_nonroundable(d)
    if result.size > (d.n + 1) // 2:
        raise InternalInconsistencyError("non-roundable construction exceeded ceil(n/2)")
    return result
