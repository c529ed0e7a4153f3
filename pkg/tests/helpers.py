"""Small digraphs and hypothesis strategies shared by the tests."""

import itertools

from hypothesis import strategies as st

from locdom.digraph import build_digraph


def cycle(n):
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return build_digraph(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def digraphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_digraph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def tournaments(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    flips = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_digraph(n, [(u, v) if f else (v, u) for (u, v), f in zip(pairs, flips)])


ACCEPTANCE_LINES: dict[int, str] = {}


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok
