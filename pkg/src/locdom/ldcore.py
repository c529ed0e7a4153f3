"""Locating / dominating predicates, S-partitions and the exhaustive oracle."""

from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Iterable

import numpy as np

from .digraph import Digraph, bits, mask_of
from .errors import InfeasibleSizeError, InputError, InternalInconsistencyError

DEFAULT_CUTOFF = 20
# Minimum locating sets of tournaments are logarithmic in n, so the
# increasing-cardinality search stays cheap well beyond DEFAULT_CUTOFF.
TOURNAMENT_CUTOFF = 40

_CHUNK_CELLS = 1 << 21


class Kind(str, enum.Enum):
    LOCATING = "locating"
    LD = "locating-dominating"
    DOMINATING = "dominating"

    @classmethod
    def parse(cls, value: "str | Kind") -> "Kind":
        if isinstance(value, Kind):
            return value
        aliases = {"ld": cls.LD, "locating-dominating": cls.LD,
                   "locating": cls.LOCATING, "l": cls.LOCATING,
                   "dominating": cls.DOMINATING}
        try:
            return aliases[value.lower()]
        except KeyError:
            raise InputError(f"unknown set kind {value!r}") from None


@dataclass(frozen=True)
class SetReport:
    undominated: tuple[int, ...]
    unlocated_pairs: tuple[tuple[int, int], ...]

    @property
    def dominating(self) -> bool:
        return not self.undominated

    @property
    def locating(self) -> bool:
        return not self.unlocated_pairs

    @property
    def ld(self) -> bool:
        return self.dominating and self.locating

    def satisfies(self, kind: Kind | str) -> bool:
        kind = Kind.parse(kind)
        if kind is Kind.LD:
            return self.ld
        if kind is Kind.LOCATING:
            return self.locating
        return self.dominating


def _signature_groups(d: Digraph, s_mask: int) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = defaultdict(list)
    for v in bits(d.all_mask & ~s_mask):
        groups[d.in_masks[v] & s_mask].append(v)
    return groups


def evaluate_set(d: Digraph, S: Iterable[int]) -> SetReport:
    s_mask = mask_of(S)
    if s_mask & ~d.all_mask:
        raise InputError("set contains vertices outside the digraph")
    groups = _signature_groups(d, s_mask)
    undominated = tuple(groups.get(0, ()))
    pairs = sorted(
        pair
        for members in groups.values()
        for pair in itertools.combinations(members, 2)
    )
    return SetReport(undominated, tuple(pairs))


@dataclass(frozen=True)
class SPartition:
    parts: dict[tuple[int, ...], tuple[int, ...]]
    """Signature (sorted in-neighbours inside S) -> vertices carrying it."""

    @property
    def n1(self) -> int:
        return sum(1 for p in self.parts.values() if len(p) == 1)

    @property
    def n2(self) -> int:
        return sum(1 for p in self.parts.values() if len(p) >= 2)

    @property
    def part_count(self) -> int:
        return len(self.parts)


def s_partition(d: Digraph, S: Iterable[int]) -> SPartition:
    s_mask = mask_of(S)
    groups = _signature_groups(d, s_mask)
    parts = {
        tuple(bits(sig)): tuple(members)
        for sig, members in sorted(groups.items(), key=lambda kv: kv[1][0])
    }
    return SPartition(parts)


def part_count(d: Digraph, s_mask: int) -> int:
    """Number of parts of the S-partition, without building it."""
    return len({d.in_masks[v] & s_mask for v in bits(d.all_mask & ~s_mask)})


@dataclass(frozen=True)
class CertifiedSet:
    vertices: tuple[int, ...]
    kind: Kind
    claimed_bound: int
    verified: bool
    trace_tag: str
    trace: Any = None

    @property
    def size(self) -> int:
        return len(self.vertices)


def certify(d: Digraph, S: Iterable[int], kind: Kind | str, bound: int, tag: str,
            trace: Any = None) -> CertifiedSet:
    """Re-check ``S`` from scratch and package it.

    Raises if ``S`` is not of the requested kind or exceeds ``bound``.
    """
    kind = Kind.parse(kind)
    vertices = tuple(sorted(set(S)))
    ok = evaluate_set(d, vertices).satisfies(kind)
    if not ok:
        raise InternalInconsistencyError(f"{tag}: {list(vertices)} is not a {kind.value} set")
    if len(vertices) > bound:
        raise InternalInconsistencyError(
            f"{tag}: size {len(vertices)} exceeds claimed bound {bound}"
        )
    return CertifiedSet(vertices, kind, bound, ok, tag, trace)


def _size_lower_bound(n: int, kind: Kind) -> int:
    # k chosen vertices give at most 2**k distinct signatures to the n-k others
    # (2**k - 1 once the empty signature is forbidden).
    if kind is Kind.DOMINATING:
        return 0 if n == 0 else 1
    k = 0
    spare = 0 if kind is Kind.LOCATING else 1
    while (1 << k) - spare < n - k:
        k += 1
    return k


def _combination_chunks(n: int, k: int):
    rows = max(1, _CHUNK_CELLS // max(1, n))
    it = itertools.combinations(range(n), k)
    while True:
        block = list(itertools.islice(it, rows))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), k)


def _first_valid(in_masks: np.ndarray, n: int, k: int, kind: Kind) -> tuple[int, ...] | None:
    ids = np.arange(n, dtype=np.int64)
    for combos in _combination_chunks(n, k):
        if k:
            s_mask = np.bitwise_or.reduce(np.left_shift(1, combos), axis=1)
        else:
            s_mask = np.zeros(len(combos), dtype=np.int64)
        member = (s_mask[:, None] >> ids[None, :]) & 1 == 1
        sig = in_masks[None, :] & s_mask[:, None]
        ok = np.ones(len(combos), dtype=bool)
        if kind is not Kind.LOCATING:
            ok &= np.all(member | (sig != 0), axis=1)
        if kind is not Kind.DOMINATING:
            tagged = np.where(member, -1 - ids[None, :], sig)
            tagged.sort(axis=1)
            ok &= np.all(np.diff(tagged, axis=1) != 0, axis=1)
        hit = np.flatnonzero(ok)
        if hit.size:
            return tuple(int(x) for x in combos[hit[0]])
    return None


def minimum_set(d: Digraph, kind: Kind | str, max_size: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically first minimum set of ``kind``, by increasing cardinality.

    Returns ``None`` if nothing of size ``<= max_size`` qualifies.
    """
    kind = Kind.parse(kind)
    n = d.n
    if n > 62:
        raise InfeasibleSizeError(f"exhaustive search limited to 62 vertices, got {n}")
    top = n if max_size is None else min(n, max_size)
    in_masks = np.array(d.in_masks, dtype=np.int64)
    for k in range(_size_lower_bound(n, kind), top + 1):
        found = _first_valid(in_masks, n, k, kind)
        if found is not None:
            return found
    return None


def exact_min_set(d: Digraph, kind: Kind | str = Kind.LD, cutoff: int = DEFAULT_CUTOFF) -> CertifiedSet:
    """Minimum set of the given kind by subset enumeration (oracle)."""
    kind = Kind.parse(kind)
    if d.n > cutoff:
        raise InfeasibleSizeError(f"order {d.n} exceeds exhaustive-search cutoff {cutoff}")
    found = minimum_set(d, kind)
    if found is None:  # only the empty digraph can get here
        raise InternalInconsistencyError("no set of the requested kind exists")
    return certify(d, found, kind, len(found), f"exact-{kind.value}")


def _require_tournament(t: Digraph) -> None:
    from .structure import is_tournament

    if not is_tournament(t):
        raise InputError("input is not a tournament")


def tournament_locating_set(t: Digraph, cutoff: int = TOURNAMENT_CUTOFF) -> CertifiedSet:
    """Minimum locating set of a tournament; at most floor(n/2) vertices."""
    _require_tournament(t)
    if t.n > cutoff:
        raise InfeasibleSizeError(f"tournament order {t.n} exceeds search cutoff {cutoff}")
    bound = t.n // 2
    found = minimum_set(t, Kind.LOCATING, bound)
    if found is None:
        raise InternalInconsistencyError(f"no locating set of size <= {bound} in tournament")
    return certify(t, found, Kind.LOCATING, bound, "tournament-locating")


def tournament_ld_set(t: Digraph, cutoff: int = TOURNAMENT_CUTOFF) -> CertifiedSet:
    """Minimum locating-dominating set of a tournament; at most ceil(n/2) vertices."""
    _require_tournament(t)
    if t.n < 1:
        raise InputError("tournament must have at least one vertex")
    if t.n > cutoff:
        raise InfeasibleSizeError(f"tournament order {t.n} exceeds search cutoff {cutoff}")
    bound = (t.n + 1) // 2
    found = minimum_set(t, Kind.LD, bound)
    if found is None:
        raise InternalInconsistencyError(f"no LD set of size <= {bound} in tournament")
    return certify(t, found, Kind.LD, bound, "tournament-ld")
