import itertools

import pytest
from hypothesis import given

from helpers import cycle, digraphs, path
from locdom.digraph import build_digraph, connectivity, mask_of
from locdom.errors import InputError
from locdom.generators import blowup, gen_bridged_triangles, gen_hub_triangles, gen_random_local_tournament
from locdom.structure import (
    are_quasi_twins,
    check_decomposition,
    classify,
    is_minimal_separator,
    is_round_labelling,
    minimal_separator,
    minimal_separators,
    round_decomposition,
    twin_report,
)
from oracles import brute_round_decompositions

TRANSITIVE3 = build_digraph(3, [(0, 1), (0, 2), (1, 2)])
STAR = build_digraph(3, [(0, 1), (0, 2)])


def test_classify(c3):
    cls = classify(c3)
    assert cls.tournament and cls.local_tournament
    assert not classify(STAR).local_tournament
    for k in (2, 3):
        cls = classify(gen_hub_triangles(k))
        assert cls.locally_in_semicomplete and not cls.local_tournament


def test_twin_report():
    assert twin_report(STAR).open_twins == ((1, 2),)
    rep = twin_report(TRANSITIVE3)
    assert (1, 2) in rep.quasi_twins and are_quasi_twins(TRANSITIVE3, 1, 2)
    assert rep.twin_free and not rep.quasi_twin_free


def test_round_labelling():
    c4 = cycle(4)
    assert is_round_labelling(c4, [0, 1, 2, 3])
    assert not is_round_labelling(c4, [0, 2, 1, 3])
    assert is_round_labelling(TRANSITIVE3, [0, 1, 2])
    with pytest.raises(InputError):
        is_round_labelling(c4, [0, 1, 1, 3])


def test_round_decomposition_examples():
    dec = round_decomposition(path(3))
    assert dec.blocks == ((0,), (1,), (2,)) and dec.canonical
    assert dec.quotient.arcs == ((0, 1), (1, 2))
    d = blowup(build_digraph(2, [(0, 1)]), [cycle(3), build_digraph(1, [])])
    dec = round_decomposition(d)
    assert dec.blocks == ((0, 1, 2), (3,))
    dec = round_decomposition(cycle(4))
    assert dec.blocks == ((0,), (1,), (2,), (3,)) and not dec.canonical
    assert check_decomposition(cycle(4), dec) == []


def test_round_decomposition_rejects():
    with pytest.raises(InputError):
        round_decomposition(cycle(3))
    with pytest.raises(InputError):
        round_decomposition(STAR)
    with pytest.raises(InputError):
        round_decomposition(build_digraph(3, []))


def _small_connected_local_tournaments(max_n):
    for n in range(2, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for choice in itertools.product(range(3), repeat=len(pairs)):
            arcs = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
            d = build_digraph(n, arcs)
            cls = classify(d)
            connected, strong = connectivity(d)
            if cls.local_tournament and connected:
                yield d, cls.tournament and strong


def test_round_decomposition_matches_partition_search():
    """Every connected local tournament on <= 5 vertices, against exhaustive partition search."""
    checked = 0
    for d, strong_tournament in _small_connected_local_tournaments(5):
        if strong_tournament:
            continue
        dec = round_decomposition(d)
        ours = [] if dec is None else [sorted(sorted(b) for b in dec.blocks)]
        assert ours == brute_round_decompositions(d)
        if dec is not None:
            assert check_decomposition(d, dec) == []
        checked += 1
    assert checked > 3000


def test_connected_local_tournaments_are_twin_free():
    for d, _ in _small_connected_local_tournaments(5):
        assert twin_report(d).twin_free
    for seed in range(100):
        assert twin_report(gen_random_local_tournament(12, seed)).twin_free


def test_minimal_separator():
    assert minimal_separator(cycle(4)) == (0,)
    assert minimal_separator(cycle(5)) == (0,)
    k3 = build_digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    with pytest.raises(InputError):
        minimal_separator(k3)
    with pytest.raises(InputError):
        minimal_separator(path(3))


@given(digraphs(min_n=3, max_n=6))
def test_minimal_separators_are_minimal(d):
    if not connectivity(d)[1]:
        return
    last = 0
    for X in minimal_separators(d):
        assert is_minimal_separator(d, mask_of(X))
        assert len(X) >= last
        last = len(X)


def test_bridged_triangles_are_strong_and_quasi_twin_free():
    for k in (1, 2, 3):
        d = gen_bridged_triangles(k)
        assert connectivity(d)[1] and twin_report(d).quasi_twin_free
