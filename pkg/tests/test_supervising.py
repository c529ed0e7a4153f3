import pytest

from helpers import cycle, path
from locdom.digraph import build_digraph, mask_of, reverse
from locdom.errors import DomainError, HypothesisError, InputError
from locdom.generators import (
    gen_bridged_triangles,
    gen_hub_triangles,
    gen_locally_in_semicomplete,
    gen_random_digraph,
)
from locdom.ldcore import evaluate_set, part_count, s_partition
from locdom.structure import twin_report
from locdom.supervising import (
    find_supervising_vertex,
    layered_dominating_set,
    complete_ld_set,
    maximal_augment,
    solve_supervising,
)

TWO_TRIANGLES = build_digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def test_find_supervising_vertex(c3):
    assert find_supervising_vertex(c3) == 0
    assert find_supervising_vertex(path(3)) == 0
    assert find_supervising_vertex(TWO_TRIANGLES) is None


def test_layered_examples(c3):
    S, witness = layered_dominating_set(c3, 0)
    assert S == (0, 1) and witness == {1: 2}
    assert part_count(c3, mask_of(S)) == 1
    S, _ = layered_dominating_set(gen_hub_triangles(1), 0)
    assert S == (0,)
    assert layered_dominating_set(build_digraph(1, []), 0)[0] == (0,)
    with pytest.raises(InputError):
        layered_dominating_set(path(3), 2)


def test_maximal_augment_examples(c3):
    assert maximal_augment(gen_hub_triangles(1), [0]) == (0, 1)
    assert maximal_augment(c3, [0, 1]) == (0, 1)
    assert maximal_augment(cycle(4), range(4)) == (0, 1, 2, 3)
    with pytest.raises(InputError):
        maximal_augment(c3, [0])


def test_completion_examples(c3):
    res = complete_ld_set(gen_hub_triangles(1), [0, 1])
    assert res.vertices == (0, 1) and res.trace.chosen == "S"
    res = complete_ld_set(c3, [0, 1])
    assert res.vertices == (0, 1) and res.size <= 2


def test_solve_supervising_triangle_families():
    res = solve_supervising(gen_hub_triangles(3))
    assert res.verified and res.size <= 6
    res = solve_supervising(gen_bridged_triangles(3))
    assert res.verified and res.size <= 7


def test_solve_supervising_errors():
    with pytest.raises(DomainError):
        solve_supervising(TWO_TRIANGLES)
    with pytest.raises(HypothesisError, match=r"\(1, 2\)"):
        solve_supervising(build_digraph(3, [(0, 1), (0, 2)]))


def _witness_invariants(d, S, witness):
    Sm = mask_of(S)
    sigs = [d.in_masks[w] & Sm for w in witness.values()]
    assert len(set(sigs)) == len(sigs)
    assert all(w not in S for w in witness.values())


def test_random_strong_quasi_twin_free():
    for seed in range(200):
        n = 3 + seed % 15
        d = gen_random_digraph(n, 0.35, seed, ("strong", "quasi-twin-free"))
        S, witness = layered_dominating_set(d, find_supervising_vertex(d))
        _witness_invariants(d, S, witness)
        aug = maximal_augment(d, S)
        Am = mask_of(aug)
        assert part_count(d, Am) >= len(aug) - 1
        for v in d.vertices:
            if v not in aug:
                assert part_count(d, Am | 1 << v) < len(aug)
        res = complete_ld_set(d, aug)
        assert evaluate_set(d, res.vertices).ld and res.size <= 2 * n // 3
        tr = res.trace
        if tr.X2 is not None:
            sp = s_partition(d, aug)
            assert evaluate_set(d, tr.X2).ld
            assert len(tr.X2) == n - sp.n1 - sp.n2
            assert 2 * len(tr.X1_prime) <= n + len(aug) + sp.n1


def test_twin_free_with_quasi_twins():
    for seed in range(100):
        n = 4 + seed % 12
        d = gen_random_digraph(n, 0.3, seed, ("strong", "twin-free", "has-quasi-twins"))
        res = solve_supervising(d)
        assert evaluate_set(d, res.vertices).ld and res.size <= 3 * n // 4


def test_locally_in_semicomplete_have_supervisor():
    solved = 0
    for seed in range(300):
        d = gen_locally_in_semicomplete(3 + seed % 15, seed)
        assert find_supervising_vertex(d) is not None
        if twin_report(d).twin_free:
            assert solve_supervising(d).verified
            solved += 1
    assert solved > 0


@pytest.mark.parametrize("k", [2, 3, 4])
def test_reversed_hub_triangles_have_no_supervisor(k):
    d = reverse(gen_hub_triangles(k))
    assert find_supervising_vertex(d) is None
