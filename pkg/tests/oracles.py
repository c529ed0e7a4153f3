"""Brute-force reference implementations, independent of the library algorithms."""

from __future__ import annotations

import itertools
from collections import deque


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def arcset(d):
    return set(d.arcs)


def _is_strong_tournament(arcs, block):
    for u, v in itertools.combinations(block, 2):
        if ((u, v) in arcs) == ((v, u) in arcs):
            return False
    if len(block) == 1:
        return True
    for s in block:
        seen, todo = {s}, [s]
        while todo:
            u = todo.pop()
            for w in block:
                if w not in seen and (u, w) in arcs:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != len(block):
            return False
    return True


def _round_order_exists(r, qarcs):
    for perm in itertools.permutations(range(1, r)):
        order = (0,) + perm
        ok = True
        for i, v in enumerate(order):
            outs = {w for (a, w) in qarcs if a == v}
            ins = {a for (a, w) in qarcs if w == v}
            if outs != {order[(i + j) % r] for j in range(1, len(outs) + 1)}:
                ok = False
                break
            if ins != {order[(i - j) % r] for j in range(1, len(ins) + 1)}:
                ok = False
                break
        if ok:
            return True
    return False


def brute_round_decompositions(d):
    """All partitions into >= 2 strong-tournament modules with a simple round quotient."""
    arcs = arcset(d)
    found = []
    for part in set_partitions(list(range(d.n))):
        r = len(part)
        if r < 2 or not all(_is_strong_tournament(arcs, b) for b in part):
            continue
        qarcs = set()
        ok = True
        for i, a in enumerate(part):
            for j, b in enumerate(part):
                if i == j:
                    continue
                hits = [(u, v) in arcs for u in a for v in b]
                if all(hits):
                    qarcs.add((i, j))
                elif any(hits):
                    ok = False
        if not ok or any((j, i) in qarcs for (i, j) in qarcs):
            continue
        if _round_order_exists(r, qarcs):
            found.append(sorted(sorted(b) for b in part))
    return found


def shortest_path_lengths(d, s):
    """Exhaustive simple-path search for directed distances from s (small n only)."""
    best = {s: 0}
    arcs = arcset(d)

    def walk(u, visited, length):
        for v in range(d.n):
            if (u, v) in arcs and v not in visited:
                if v not in best or length + 1 < best[v]:
                    best[v] = length + 1
                walk(v, visited | {v}, length + 1)

    walk(s, {s}, 0)
    return best


def brute_min_set(d, kind):
    """Smallest set of the given kind by plain enumeration of Python sets."""
    ins = [{u for (u, w) in d.arcs if w == v} for v in range(d.n)]
    for k in range(d.n + 1):
        for S in itertools.combinations(range(d.n), k):
            Sset = set(S)
            rest = [v for v in range(d.n) if v not in Sset]
            sigs = [frozenset(ins[v] & Sset) for v in rest]
            dom = all(sigs)
            loc = len(set(sigs)) == len(sigs)
            if kind == "dominating" and dom:
                return S
            if kind == "locating" and loc:
                return S
            if kind == "ld" and dom and loc:
                return S
    return None
