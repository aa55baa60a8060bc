import random

import pytest

from kegraphs.bruteforce import (
    brute_max_stable_sets,
    brute_stability_number,
    is_stable_set,
)
from kegraphs.constructions import cycle, fixture_by_name, path, random_graph
from kegraphs.graph import Graph, GraphError
from kegraphs.limits import CapExceededError
from kegraphs.matching import maximum_matching
from kegraphs.stable import (
    ExtensionBlockedError,
    certify_max_stable,
    core_report,
    extend_stable_through_matching,
    maximum_stable_sets,
    stability_after_adding_edge,
    stability_number,
)

K4_MINUS_E = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def test_family_examples():
    fam = maximum_stable_sets(path(3))
    assert fam.alpha == 2 and fam.sets == (frozenset({0, 2}),)
    fam = maximum_stable_sets(K4_MINUS_E)
    assert fam.alpha == 2 and fam.sets == (frozenset({2, 3}),)
    fam = maximum_stable_sets(cycle(4))
    assert fam.sets == (frozenset({0, 2}), frozenset({1, 3}))


def test_two_enumerators_agree():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(0, 9)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        fam = maximum_stable_sets(g)
        assert fam.alpha == brute_stability_number(g)
        assert list(fam.sets) == brute_max_stable_sets(g)
        assert all(is_stable_set(g, s) for s in fam.sets)


def test_empty_graph_conventions():
    fam = maximum_stable_sets(Graph(0))
    assert fam.alpha == 0 and fam.sets == (frozenset(),)
    rep = core_report(fam)
    assert rep.core == frozenset() and rep.anticore == frozenset()


def test_core_report_examples():
    rep = core_report(maximum_stable_sets(K4_MINUS_E))
    assert rep.core == {2, 3} and rep.anticore == {0, 1}
    rep = core_report(maximum_stable_sets(path(3)))
    assert rep.core == {0, 2} and rep.anticore == {1}
    g5 = fixture_by_name("fig5_non_ke").graph
    rep = core_report(maximum_stable_sets(g5))
    assert rep.core == {0, 4} and rep.anticore == {1, 2}


def test_core_and_anticore_partition_properties():
    rng = random.Random(23)
    for _ in range(80):
        g = random_graph(rng.randint(1, 9), rng.random(), rng.randrange(1 << 30))
        fam = maximum_stable_sets(g)
        rep = core_report(fam)
        assert not (rep.core & rep.anticore)
        middle = frozenset(range(g.n)) - rep.core - rep.anticore
        for v in middle:
            assert any(v in s for s in fam.sets)
            assert any(v not in s for s in fam.sets)


def test_certificate_accepts_and_rejects():
    m = [(0, 2), (1, 3)]
    assert certify_max_stable(K4_MINUS_E, m, {2, 3}).ok
    verdict = certify_max_stable(K4_MINUS_E, m, {0, 3})
    assert not verdict.ok and "not stable" in verdict.reason
    verdict = certify_max_stable(K4_MINUS_E, m, {2})
    assert not verdict.ok and "heavy edge" in verdict.reason
    assert certify_max_stable(path(3), [(0, 1)], {0, 2}).ok
    missing = certify_max_stable(path(3), [(0, 1)], {0})
    assert not missing.ok and "exposed" in missing.reason


def test_certificate_preconditions():
    with pytest.raises(GraphError):
        certify_max_stable(K4_MINUS_E, [(0, 2)], {2, 3})  # not maximum
    with pytest.raises(GraphError):
        certify_max_stable(cycle(5), [(0, 1), (2, 3)], {1, 3})  # not KE


def test_extension_on_the_square():
    got = extend_stable_through_matching(cycle(4), [(0, 1), (2, 3)], {0, 2}, 1)
    assert got == {1, 3}


def test_extension_on_the_six_vertex_fixture():
    g = fixture_by_name("fig4_g2").graph
    fam = maximum_stable_sets(g)
    m = maximum_matching(g)
    s = fam.sets[0]
    for b in sorted(frozenset(range(g.n)) - s):
        got = extend_stable_through_matching(g, m, s, b)
        assert b in got and got in set(fam.sets)


def test_extension_rejects_vertices_already_inside():
    with pytest.raises(GraphError):
        extend_stable_through_matching(cycle(4), [(0, 1), (2, 3)], {0, 2}, 0)


def test_extension_requires_perfect_matching():
    with pytest.raises(GraphError):
        extend_stable_through_matching(path(3), [(0, 1)], {0, 2}, 1)


def test_extension_detects_closed_blossoms():
    # KE with a perfect matching but not blossom-free: the saturation walks
    # into an edge inside the matched image
    with pytest.raises(ExtensionBlockedError):
        extend_stable_through_matching(K4_MINUS_E, [(0, 2), (1, 3)], {2, 3}, 0)


def test_alpha_after_edge_addition_examples():
    g3 = fixture_by_name("fig3_nonstable").graph
    assert stability_number(g3) == 4
    assert stability_after_adding_edge(g3, (0, 4)) == 3
    chord = stability_after_adding_edge(cycle(4), (0, 2))
    assert chord == brute_stability_number(cycle(4).with_edge(0, 2)) == 2
    assert stability_after_adding_edge(K4_MINUS_E, (2, 3)) == 1


def test_alpha_after_edge_addition_rejects_existing_edges():
    with pytest.raises(GraphError):
        stability_after_adding_edge(cycle(4), (0, 1))


def test_adding_an_edge_drops_alpha_by_at_most_one():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(2, 8)
        g = random_graph(n, rng.uniform(0.1, 0.8), rng.randrange(1 << 30))
        alpha = stability_number(g)
        for u in range(n):
            for v in range(u + 1, n):
                if not g.has_edge(u, v):
                    assert stability_after_adding_edge(g, (u, v)) in (alpha - 1, alpha)


def test_caps_are_enforced():
    with pytest.raises(CapExceededError):
        stability_number(Graph(21))
    with pytest.raises(CapExceededError):
        maximum_stable_sets(Graph(17))
    assert stability_number(Graph(21), cap=21) == 21
