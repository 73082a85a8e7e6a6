import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_dimension, brute_resolves, floyd_warshall, random_connected_graph
from metdim import (
    Basis,
    Variant,
    all_pairs_distances,
    build_graph,
    dimension_lower_bound,
    dimension_profile,
    excision_criterion,
    flower_snark,
    is_resolving,
    minimum_resolving_set,
    path,
    wheel,
)
from metdim.errors import SizeCapExceeded
from metdim.solver import SearchSpace, check_size

K2 = build_graph(2, [(0, 1)])
P3 = build_graph(3, [(0, 1), (1, 2)])


def test_lower_bound_flower():
    g, _ = flower_snark(7)
    assert dimension_lower_bound(g, Variant.EDGE) == 3
    assert dimension_lower_bound(g, Variant.MIXED) == 3
    assert dimension_lower_bound(g, Variant.VERTEX) == 2


def test_lower_bound_small():
    assert dimension_lower_bound(K2, "edge") == 1
    assert dimension_lower_bound(K2, "vertex") == 1
    assert dimension_lower_bound(wheel(8)[0], "mixed") == 3


@pytest.mark.parametrize("delta, floor", [(1, 1), (2, 2), (3, 3), (4, 3), (5, 4), (8, 4), (9, 5)])
def test_log_floor_arithmetic(delta, floor):
    g = build_graph(delta + 1, list(itertools.combinations(range(delta + 1), 2)))
    assert dimension_lower_bound(g, "edge") == max(1, 1 + math.ceil(math.log2(delta)))
    assert dimension_lower_bound(g, "edge") == floor


def test_j5_mixed():
    g, _ = flower_snark(5)
    dm = all_pairs_distances(g)
    basis = minimum_resolving_set(g, dm, Variant.MIXED)
    assert basis.cardinality == 5
    assert basis.certificate.refuted_cardinality == 4
    assert basis.certificate.subsets_checked == math.comb(20, 4)
    every = minimum_resolving_set(g, dm, Variant.MIXED, mode="all")
    stated = tuple(sorted(g.index_of(t) for t in ["a_3", "b_0", "b_1", "c_2", "d_3"]))
    assert stated in {b.landmarks for b in every}


def test_j7_mixed():
    g, _ = flower_snark(7)
    basis = minimum_resolving_set(g, all_pairs_distances(g), "mixed")
    assert basis.cardinality == 4
    assert basis.labels(g) == ["b_0", "c_1", "c_5", "d_3"]


def test_w3_mixed():
    g, _ = wheel(3)
    assert minimum_resolving_set(g, all_pairs_distances(g), "mixed").cardinality == 4


def test_w4_vertex():
    g, _ = wheel(4)
    assert minimum_resolving_set(g, all_pairs_distances(g), "vertex").cardinality == 2


def test_path5_mixed_against_brute_force():
    g = path(5)
    r, _ = brute_dimension(g, "mixed")
    assert r == 2
    assert minimum_resolving_set(g, all_pairs_distances(g), "mixed").cardinality == r


def test_certificate_from_floor():
    # the edge floor for a path is 1 and one end vertex edge-resolves it
    basis = minimum_resolving_set(path(4), variant="edge")
    assert basis.cardinality == 1
    assert basis.certificate.source == "bound"
    assert basis.certificate.subsets_checked == 0


def test_bad_mode():
    with pytest.raises(ValueError):
        minimum_resolving_set(K2, variant="mixed", mode="some")


def test_profile_j5():
    rep = dimension_profile(flower_snark(5)[0])
    assert (rep.beta, rep.beta_edge, rep.beta_mixed) == (3, 4, 5)
    assert rep.bound_checks["mixed_ge_max"] and rep.bound_checks["edge_ge_log_floor"]


def test_profile_j9():
    rep = dimension_profile(flower_snark(9)[0])
    assert rep.beta == 3 and rep.beta_mixed == 4
    assert rep.beta_edge in (3, 4)


def test_profile_k2():
    rep = dimension_profile(K2)
    assert (rep.beta, rep.beta_mixed) == (1, 2)
    assert brute_dimension(K2, "mixed")[0] == 2


def test_profile_to_dict_has_no_timing_by_default():
    rep = dimension_profile(wheel(5)[0])
    d = rep.to_dict(wheel(5)[0])
    assert d["elapsed_ms"] is None
    assert set(rep.to_dict(include_timing=True)["elapsed_ms"]) == {"vertex", "edge", "mixed"}
    assert d["bases"]["mixed"]["labels"] == [f"v_{i}" for i in range(1, 6)]


def test_size_cap():
    g, _ = flower_snark(17)
    with pytest.raises(SizeCapExceeded):
        dimension_profile(g)
    with pytest.raises(SizeCapExceeded):
        check_size(wheel(10)[0], 5)
    check_size(g, 0)


def test_excision_examples():
    g, _ = wheel(8)
    assert excision_criterion(g, all_pairs_distances(g), 0)
    assert excision_criterion(P3, all_pairs_distances(P3), 1)
    assert not excision_criterion(K2, all_pairs_distances(K2), 0)


@given(st.integers(3, 10), st.sampled_from([0.1, 0.3, 0.6]), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_excision_soundness(n, p, seed):
    g = random_connected_graph(n, p, seed)
    dm = all_pairs_distances(g)
    for v in range(g.n):
        if excision_criterion(g, dm, v):
            rest = [x for x in range(g.n) if x != v]
            assert is_resolving(g, dm, rest, Variant.MIXED)


def test_excision_soundness_families():
    for g in [flower_snark(5)[0], flower_snark(7)[0]] + [wheel(n)[0] for n in range(3, 11)]:
        dm = all_pairs_distances(g)
        for v in range(g.n):
            if excision_criterion(g, dm, v):
                assert is_resolving(g, dm, [x for x in range(g.n) if x != v], "mixed")


@given(st.integers(2, 9), st.sampled_from([0.1, 0.3, 0.6]), st.integers(0, 10**6),
       st.sampled_from(list(Variant)))
@settings(max_examples=60, deadline=None)
def test_matches_brute_force(n, p, seed, variant):
    g = random_connected_graph(n, p, seed)
    r, sets = brute_dimension(g, variant.value)
    every = minimum_resolving_set(g, variant=variant, mode="all")
    assert [b.landmarks for b in every] == sets
    first = minimum_resolving_set(g, variant=variant)
    assert first.cardinality == r
    assert first.landmarks == min(sets)


@given(st.integers(4, 10), st.sampled_from([0.1, 0.3, 0.6]), st.integers(0, 10**6),
       st.sampled_from(list(Variant)))
@settings(max_examples=40, deadline=None)
def test_pruned_and_naive_sweeps_agree(n, p, seed, variant):
    g = random_connected_graph(n, p, seed)
    space = SearchSpace(g, all_pairs_distances(g), variant)
    for r in range(1, n + 1):
        fast = space.sweep(r, mode="all")
        slow = space.sweep(r, mode="all", naive=True)
        assert fast.hits == slow.hits
        assert fast.checked == slow.checked == math.comb(n, r)


def test_certificate_reverified_by_enumeration():
    """Independent re-enumeration of the refuted cardinality, small item domains."""
    graphs = [wheel(3)[0], wheel(4)[0], path(5), P3, K2,
              build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])]
    for g in graphs:
        dist = floyd_warshall(g)
        for variant in Variant:
            basis = minimum_resolving_set(g, variant=variant)
            assert isinstance(basis, Basis)
            assert brute_resolves(g, dist, basis.landmarks, variant.value)
            r = basis.certificate.refuted_cardinality
            if r >= 1:
                subsets = list(itertools.combinations(range(g.n), r))
                assert not any(brute_resolves(g, dist, s, variant.value) for s in subsets)
                if basis.certificate.source == "search":
                    assert basis.certificate.subsets_checked == len(subsets)


@pytest.mark.parametrize("n", [5, 7])
def test_first_is_lexicographic_min_of_all(n):
    g, _ = flower_snark(n)
    dm = all_pairs_distances(g)
    for variant in Variant:
        first = minimum_resolving_set(g, dm, variant)
        every = minimum_resolving_set(g, dm, variant, mode="all")
        assert first.landmarks == min(b.landmarks for b in every)
        assert all(is_resolving(g, dm, b.landmarks, variant) for b in every)


@pytest.mark.parametrize("threads", [2, 8])
def test_thread_count_does_not_change_results(threads):
    g, _ = flower_snark(7)
    dm = all_pairs_distances(g)
    for variant in Variant:
        one = minimum_resolving_set(g, dm, variant, threads=1)
        many = minimum_resolving_set(g, dm, variant, threads=threads)
        assert one == many
    assert minimum_resolving_set(g, dm, "mixed", mode="all", threads=threads) == \
        minimum_resolving_set(g, dm, "mixed", mode="all", threads=1)


def test_threads_from_environment(monkeypatch):
    from metdim.solver import default_threads

    monkeypatch.setenv("METDIM_THREADS", "4")
    assert default_threads() == 4
    monkeypatch.setenv("METDIM_THREADS", "lots")
    assert default_threads() == 1
