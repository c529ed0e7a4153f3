"""Seedable instance families.

Every generator is a pure function of its parameters and seed: the same call
returns the same labelled digraph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .digraph import Digraph, bits, build_digraph, connectivity, is_strong_mask
from .errors import GenerationError, InputError, InternalInconsistencyError
from .structure import classify, is_round_labelling, twin_report

RETRY_BUDGET = 10_000


def gen_bridged_triangles(k: int) -> Digraph:
    """Strong quasi-twin-free digraph on 3k+2 vertices with LD number 2k.

    Vertex 0 is the bottom vertex, 1 the top vertex, and triangle ``j``
    occupies ``2+3j .. 4+3j`` oriented as a directed 3-cycle.
    """
    if k < 1:
        raise InputError("bridged-triangles needs k >= 1")
    s, t = 0, 1
    arcs = [(s, t)]
    for j in range(k):
        a, b, c = 2 + 3 * j, 3 + 3 * j, 4 + 3 * j
        arcs += [(a, b), (b, c), (c, a)]
        for v in (a, b, c):
            arcs += [(v, s), (t, v)]
    d = build_digraph(3 * k + 2, arcs)
    tw = twin_report(d)
    if not (connectivity(d)[1] and tw.quasi_twin_free):
        raise InternalInconsistencyError("bridged-triangles instance lost its defining properties")
    return d


def gen_hub_triangles(k: int) -> Digraph:
    """Hub vertex 0 dominating ``k`` disjoint directed triangles on ``1..3k``."""
    if k < 1:
        raise InputError("hub-triangles needs k >= 1")
    arcs = []
    for j in range(k):
        a, b, c = 1 + 3 * j, 2 + 3 * j, 3 + 3 * j
        arcs += [(a, b), (b, c), (c, a), (0, a), (0, b), (0, c)]
    d = build_digraph(3 * k + 1, arcs)
    if not (classify(d).locally_in_semicomplete and twin_report(d).quasi_twin_free):
        raise InternalInconsistencyError("hub-triangles instance lost its defining properties")
    return d


def blowup(r: Digraph, blocks: Sequence[Digraph]) -> Digraph:
    """``R[L_1, ..., L_r]``: block ``i`` occupies a consecutive id range, in order."""
    if len(blocks) != r.n:
        raise InputError(f"{len(blocks)} blocks for a quotient on {r.n} vertices")
    offsets = []
    total = 0
    for b in blocks:
        offsets.append(total)
        total += b.n
    arcs = []
    for i, b in enumerate(blocks):
        arcs += [(offsets[i] + u, offsets[i] + v) for u, v in b.arcs]
    for i, j in r.arcs:
        for u in range(blocks[i].n):
            for v in range(blocks[j].n):
                arcs.append((offsets[i] + u, offsets[j] + v))
    return build_digraph(total, arcs)


def block_ranges(blocks: Sequence[Digraph]) -> list[tuple[int, ...]]:
    out, total = [], 0
    for b in blocks:
        out.append(tuple(range(total, total + b.n)))
        total += b.n
    return out


def _random_tournament(n: int, rng: random.Random) -> Digraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return build_digraph(n, arcs)


def gen_random_tournament(n: int, seed: int) -> Digraph:
    if n < 1:
        raise InputError("tournament needs n >= 1")
    return _random_tournament(n, random.Random(seed))


def random_strong_tournament(n: int, rng: random.Random) -> Digraph:
    if n == 2:
        raise InputError("no strong tournament on 2 vertices")
    for _ in range(RETRY_BUDGET):
        t = _random_tournament(n, rng)
        if is_strong_mask(t, t.all_mask):
            return t
    raise GenerationError(f"no strong tournament on {n} vertices within budget")


def random_round_quotient(r: int, rng: random.Random, strong: bool, cap: int = 3) -> Digraph:
    """Random simple round digraph on ``r`` vertices, labelled in round order.

    ``strong`` picks a wrapping circular structure; otherwise arcs only go
    forward (a canonical quotient).  Interval out-degrees are drawn at random
    and the candidate is kept only if the labelling is round.
    """
    if r < 2:
        raise InputError("round quotient needs r >= 2")
    for _ in range(RETRY_BUDGET):
        arcs = []
        for i in range(r):
            if strong:
                top = min(r - 2, cap) if r > 2 else 1
                deg = rng.randint(1, max(1, top))
                arcs += [(i, (i + j) % r) for j in range(1, deg + 1)]
            elif i < r - 1:
                deg = rng.randint(1, min(r - 1 - i, cap))
                arcs += [(i, i + j) for j in range(1, deg + 1)]
        q = build_digraph(r, arcs)
        if not classify(q).simple:
            continue
        if strong and not is_strong_mask(q, q.all_mask):
            continue
        if is_round_labelling(q, list(range(r))):
            return q
    raise GenerationError(f"no round quotient on {r} vertices within budget")


def _block_sizes(n_target: int, r: int, rng: random.Random) -> list[int]:
    sizes = [1] * r
    spare = n_target - r
    order = list(range(r))
    rng.shuffle(order)
    for i in order:
        if spare < 2:
            break
        grow = rng.choice([0, 0, 2, 2, 3, 4])
        grow = min(grow, spare)
        if grow >= 2:
            sizes[i] += grow
            spare -= grow
    return sizes


@dataclass(frozen=True)
class RoundInstance:
    digraph: Digraph
    quotient: Digraph
    blocks: tuple[tuple[int, ...], ...]
    strong: bool


def gen_round_instance(n_target: int, seed: int, strong: bool | None = None) -> RoundInstance:
    """Blow-up of a random round quotient with random strong tournament blocks."""
    if n_target < 2:
        raise InputError("local tournament target order must be >= 2")
    rng = random.Random(seed)
    if strong is None:
        strong = rng.random() < 0.5
    lo = 3 if strong else 2
    r = rng.randint(min(lo, n_target), max(lo, min(n_target, 10)))
    r = max(r, lo)
    q = random_round_quotient(r, rng, strong)
    sizes = _block_sizes(n_target, r, rng)
    blocks = [build_digraph(1, []) if s == 1 else random_strong_tournament(s, rng) for s in sizes]
    d = blowup(q, blocks)
    cls = classify(d)
    if not cls.local_tournament or not connectivity(d)[0]:
        raise InternalInconsistencyError("blow-up of a round quotient is not a connected local tournament")
    return RoundInstance(d, q, tuple(block_ranges(blocks)), strong)


def gen_random_local_tournament(n_target: int, seed: int) -> Digraph:
    return gen_round_instance(n_target, seed).digraph


FILTERS = ("none", "connected", "strong", "twin-free", "quasi-twin-free", "has-quasi-twins")


def _passes(d: Digraph, filters: Iterable[str]) -> bool:
    tw = None
    for f in filters:
        if f == "none":
            continue
        if f == "connected":
            if not connectivity(d)[0]:
                return False
        elif f == "strong":
            if not connectivity(d)[1]:
                return False
        else:
            tw = tw or twin_report(d)
            if f == "twin-free" and not tw.twin_free:
                return False
            if f == "quasi-twin-free" and not tw.quasi_twin_free:
                return False
            if f == "has-quasi-twins" and not tw.quasi_twins:
                return False
    return True


def gen_random_digraph(n: int, p: float, seed: int, filters: str | Sequence[str] = "none",
                       retries: int = RETRY_BUDGET) -> Digraph:
    """Each ordered pair becomes an arc with probability ``p``; resampled until ``filters`` pass."""
    if not 0.0 <= p <= 1.0:
        raise InputError(f"arc probability must lie in [0, 1], got {p}")
    if n < 1:
        raise InputError("random digraph needs n >= 1")
    filters = [filters] if isinstance(filters, str) else list(filters)
    for f in filters:
        if f not in FILTERS:
            raise InputError(f"unknown filter {f!r}; choose from {', '.join(FILTERS)}")
    rng = random.Random(seed)
    for _ in range(retries):
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
        d = build_digraph(n, arcs)
        if _passes(d, filters):
            return d
    raise GenerationError(f"no digraph passing {filters} after {retries} draws")


def gen_locally_in_semicomplete(n: int, seed: int, extra: float = 1.0) -> Digraph:
    """Random connected simple digraph in which every in-neighbourhood is semicomplete.

    Vertex ``v`` first gets an in-neighbour ``u < v`` plus a random part of
    ``N^-(u)``; then about ``extra * n`` further arcs are tried, each kept
    only when the target's in-neighbourhood stays semicomplete.
    """
    if n < 1:
        raise InputError("need n >= 1")
    rng = random.Random(seed)
    out = [0] * n
    inn = [0] * n

    def adjacent(a: int, b: int) -> bool:
        return bool((out[a] | inn[a]) >> b & 1)

    def add(u: int, v: int) -> None:
        out[u] |= 1 << v
        inn[v] |= 1 << u

    for v in range(1, n):
        u = rng.randrange(v)
        add(u, v)
        for w in bits(inn[u]):
            if rng.random() < 0.5:
                add(w, v)
    for _ in range(int(extra * n)):
        u, v = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if u == v or adjacent(u, v):
            continue
        if all(adjacent(u, w) for w in bits(inn[v])):
            add(u, v)
    d = build_digraph(n, [(u, v) for u in range(n) for v in bits(out[u])])
    cls = classify(d)
    if not (cls.simple and cls.locally_in_semicomplete):
        raise GenerationError("locally in-semicomplete generator broke its invariant")
    return d


@dataclass(frozen=True)
class SeparatorInstance:
    digraph: Digraph
    X: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    """Canonical blocks of the digraph minus X."""


def gen_separator_instance(block_sizes: Sequence[int], x_size: int, seed: int,
                           middle_links: bool = False) -> SeparatorInstance:
    """Chain of strong tournaments ``T_1 => ... => T_r`` closed into a cycle through a tournament X.

    Blocks get ids first, in order, then X.  With ``middle_links`` each X
    vertex is also joined to some middle blocks at random (arcs in either
    direction, all-or-none per block); the result is not checked for
    being a local tournament.
    """
    r = len(block_sizes)
    if r < 3:
        raise InputError("need at least three blocks")
    rng = random.Random(seed)
    blocks = [build_digraph(1, []) if s == 1 else random_strong_tournament(s, rng) for s in block_sizes]
    chain = build_digraph(r, [(i, i + 1) for i in range(r - 1)])
    y = blowup(chain, blocks)
    ranges = block_ranges(blocks)
    ny = y.n
    X = tuple(range(ny, ny + x_size))
    xt = _random_tournament(x_size, rng)
    arcs = list(y.arcs) + [(ny + u, ny + v) for u, v in xt.arcs]
    for x in X:
        arcs += [(v, x) for v in ranges[-1]]
        arcs += [(x, v) for v in ranges[0]]
        if middle_links:
            for i in range(1, r - 1):
                choice = rng.random()
                if choice < 0.2:
                    arcs += [(x, v) for v in ranges[i]]
                elif choice < 0.4:
                    arcs += [(v, x) for v in ranges[i]]
    d = build_digraph(ny + x_size, arcs)
    return SeparatorInstance(d, X, tuple(ranges))


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


# Families parametrised by a triangle count k; the rest take an order n.
K_FAMILIES = ("bridged-triangles", "hub-triangles", "hub-triangles-reverse")
FAMILIES = ("bridged-triangles", "hub-triangles", "hub-triangles-reverse", "random-tournament", "random-local-tournament",
            "random-digraph", "nonroundable")


def generate(spec: FamilySpec) -> Digraph:
    from .digraph import reverse

    p = spec.params
    if spec.family == "bridged-triangles":
        return gen_bridged_triangles(int(p["k"]))
    if spec.family == "hub-triangles":
        return gen_hub_triangles(int(p["k"]))
    if spec.family == "hub-triangles-reverse":
        return reverse(gen_hub_triangles(int(p["k"])))
    if spec.family == "random-tournament":
        return gen_random_tournament(int(p["n"]), spec.seed)
    if spec.family == "random-local-tournament":
        return gen_random_local_tournament(int(p["n"]), spec.seed)
    if spec.family == "random-digraph":
        return gen_random_digraph(int(p["n"]), float(p.get("p", 0.3)), spec.seed,
                                  p.get("filters", ("strong", "quasi-twin-free")))
    if spec.family == "nonroundable":
        return gen_nonroundable(int(p["n"]), spec.seed)
    raise InputError(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}")


def gen_nonroundable(n_max: int, seed: int, retries: int = RETRY_BUDGET) -> Digraph:
    """Randomized search for a strong, connected, non-roundable local tournament of order <= n_max."""
    from .structure import round_decomposition

    if n_max < 5:
        raise InputError("non-roundable search needs n_max >= 5")
    rng = random.Random(seed)
    for _ in range(retries):
        r = rng.randint(3, max(3, min(6, n_max - 2)))
        sizes = [1] * r
        budget = n_max - r - 1
        x_size = rng.randint(1, max(1, min(3, budget)))
        budget -= x_size - 1
        for i in range(r):
            if budget >= 3 and rng.random() < 0.3:
                sizes[i] = 3
                budget -= 2
        inst = gen_separator_instance(sizes, x_size, rng.randrange(1 << 30), middle_links=True)
        d = inst.digraph
        cls = classify(d)
        if not cls.local_tournament or cls.tournament or not connectivity(d)[1]:
            continue
        if round_decomposition(d) is None:
            return d
    raise GenerationError(f"no non-roundable local tournament found within {retries} draws")
