import pytest
from hypothesis import given

from helpers import cycle, digraphs, path
from locdom.digraph import (
    bfs_layers,
    build_digraph,
    connectivity,
    induced,
    neighbourhood,
    reverse,
    strong_components,
)
from locdom.errors import InputError
from locdom.generators import gen_hub_triangles
from oracles import shortest_path_lengths


def test_build_basic():
    d = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert d.n == 3 and d.arcs == ((0, 1), (1, 2), (2, 0))
    assert build_digraph(1, []).arc_count == 0
    assert build_digraph(2, [(0, 1), (0, 1)]).arcs == ((0, 1),)


@pytest.mark.parametrize("arcs", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_build_rejects(arcs):
    with pytest.raises(InputError):
        build_digraph(3, arcs)


def test_neighbourhood(c3):
    assert neighbourhood(c3, 0, "in") == [2]
    assert neighbourhood(c3, 0, "out", closed=True) == [0, 1]
    assert neighbourhood(build_digraph(1, []), 0, "in") == []


def test_induced(c3, p3):
    sub, idmap = induced(c3, [0, 1])
    assert sub.arcs == ((0, 1),) and idmap == (0, 1)
    sub, idmap = induced(c3, [0, 1, 2])
    assert sub.arcs == c3.arcs and idmap == (0, 1, 2)
    sub, _ = induced(p3, [0, 2])
    assert sub.n == 2 and sub.arc_count == 0


def test_reverse(c3):
    assert reverse(c3).arcs == ((0, 2), (1, 0), (2, 1))
    assert reverse(build_digraph(2, [(0, 1)])).arcs == ((1, 0),)


@given(digraphs())
def test_reverse_involution(d):
    assert reverse(reverse(d)) == d


def test_connectivity(c3, p3):
    assert connectivity(c3) == (True, True)
    assert connectivity(p3) == (True, False)
    assert connectivity(build_digraph(4, [(0, 1), (2, 3)])) == (False, False)


def test_strong_components(c3, p3):
    assert strong_components(c3).components == ((0, 1, 2),)
    sc = strong_components(p3)
    assert sc.components == ((0,), (1,), (2,))
    assert sc.condensation.arcs == ((0, 1), (1, 2))
    sc = strong_components(build_digraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
    assert sc.components == ((0, 1, 2), (3,))
    assert sc.condensation.arcs == ((0, 1),)


@given(digraphs())
def test_strong_iff_one_component(d):
    assert connectivity(d)[1] == (len(strong_components(d).components) == 1)


@given(digraphs())
def test_condensation_is_topological(d):
    sc = strong_components(d)
    assert all(i < j for i, j in sc.condensation.arcs)
    assert sorted(v for c in sc.components for v in c) == list(d.vertices)


def test_bfs_layers(c3):
    lay = bfs_layers(c3, 0)
    assert lay.layers == ((0,), (1,), (2,))
    lay = bfs_layers(gen_hub_triangles(1), 0)
    assert lay.layers == ((0,), (1, 2, 3))
    lay = bfs_layers(path(3), 2)
    assert lay.layers == ((2,),) and tuple(lay.unreachable) == (0, 1)


@given(digraphs(max_n=6))
def test_bfs_matches_path_search(d):
    dist = shortest_path_lengths(d, 0)
    lay = bfs_layers(d, 0)
    got = {v: i for i, layer in enumerate(lay.layers) for v in layer}
    assert got == dist
    assert set(lay.unreachable) == set(d.vertices) - set(dist)


def test_cycle_helper():
    assert cycle(4).arc_count == 4
