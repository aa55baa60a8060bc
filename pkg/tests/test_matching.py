import itertools
import random

import pytest

from kegraphs.bruteforce import brute_max_matching_size
from kegraphs.constructions import (
    FIG2_M1,
    FIG2_M2,
    FIG3_PM,
    complete,
    cycle,
    fixture_by_name,
    path,
    random_bipartite,
    random_graph,
    random_tree,
)
from kegraphs.graph import Graph, GraphError
from kegraphs.limits import CapExceededError, SearchBudgetExceededError
from kegraphs.matching import (
    enumerate_maximum_matchings,
    exposed_vertices,
    find_blossoms,
    find_flower,
    find_posy,
    is_blossom_free,
    is_near_perfect_matching,
    is_perfect_matching,
    matching_number,
    maximum_matching,
    partner_map,
    validate_matching,
)
from kegraphs.stable import stability_number

K4_MINUS_E = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
TWO_TRIANGLES = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def blossom_is_valid(g, m, blossom):
    """Check the definition directly: odd cycle, consecutive edges exist,
    heavy edges exactly at the positions pairing off everything but the
    base."""
    cyc = blossom.cycle
    if len(cyc) % 2 == 0 or len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    edges = blossom.cycle_edges()
    if any(e not in g.edges for e in edges):
        return False
    m = set(m)
    for i, e in enumerate(edges):
        expect_heavy = i % 2 == 1  # cycle[0] is the base; edges 1, 3, ... heavy
        if (e in m) != expect_heavy:
            return False
    return True


def brute_blossoms(g, m):
    """Independent route: scan all odd vertex orderings of all subsets."""
    m = set(m)
    found = set()
    for k in range(3, g.n + 1, 2):
        for subset in itertools.combinations(range(g.n), k):
            first = subset[0]
            for rest in itertools.permutations(subset[1:]):
                cyc = (first,) + rest
                edges = [tuple(sorted((cyc[i], cyc[(i + 1) % k]))) for i in range(k)]
                if any(e not in g.edges for e in edges):
                    continue
                heavy = [e in m for e in edges]
                # the base is a vertex whose two incident cycle edges are
                # light and the rest alternate
                for r in range(k):
                    rot = [heavy[(r + i) % k] for i in range(k)]
                    if rot == [i % 2 == 1 for i in range(k)]:
                        base = cyc[r]
                        found.add((base, frozenset(edges)))
    return found


def test_matching_number_examples():
    assert matching_number(K4_MINUS_E) == brute_max_matching_size(K4_MINUS_E) == 2
    assert matching_number(path(3)) == 1
    g2 = fixture_by_name("fig2_blossom").graph
    assert brute_max_matching_size(g2) == 3
    assert len(validate_matching(g2, FIG2_M1)) == 3
    assert len(validate_matching(g2, FIG2_M2)) == 3


def test_search_agrees_with_brute_force_on_randoms():
    rng = random.Random(77)
    for _ in range(300):
        n = rng.randint(0, 9)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        assert len(maximum_matching(g)) == brute_max_matching_size(g)


def test_maximum_matching_is_deterministic():
    g = fixture_by_name("fig1_seven").graph
    assert maximum_matching(g) == maximum_matching(g)
    assert maximum_matching(g) == {(0, 1), (2, 3), (4, 5)}


def test_validate_matching_rejects_bad_input():
    with pytest.raises(GraphError):
        validate_matching(path(3), [(0, 2)])  # not an edge
    with pytest.raises(GraphError):
        validate_matching(path(3), [(0, 1), (1, 2)])  # shared vertex


def test_exposed_vertices():
    c4 = cycle(4)
    assert exposed_vertices(c4, [(0, 1), (2, 3)]) == frozenset()
    assert exposed_vertices(path(3), [(0, 1)]) == {2}
    g2 = fixture_by_name("fig2_blossom").graph
    assert exposed_vertices(g2, FIG2_M1) == {0, 3}


def test_perfect_and_near_perfect():
    assert is_perfect_matching(cycle(4), [(0, 1), (2, 3)])
    assert is_near_perfect_matching(path(3), [(0, 1)])
    one_edge = [(0, 2)]
    assert not is_perfect_matching(K4_MINUS_E, one_edge)
    assert not is_near_perfect_matching(K4_MINUS_E, one_edge)


def test_unique_five_cycle_blossom_and_its_base():
    g2 = fixture_by_name("fig2_blossom").graph
    found = find_blossoms(g2, FIG2_M1)
    assert len(found) == 1
    (b,) = found
    assert b.vertex_set == {1, 2, 4, 5, 6}
    assert b.base == 6
    assert blossom_is_valid(g2, FIG2_M1, b)
    # same cycle, other maximum matching: not a blossom
    assert find_blossoms(g2, FIG2_M2) == ()
    assert is_blossom_free(g2, FIG2_M2)
    assert not is_blossom_free(g2, FIG2_M1)


def test_bipartite_graphs_have_no_blossoms():
    rng = random.Random(21)
    for _ in range(30):
        g = random_bipartite(4, 4, rng.random(), rng.randrange(1 << 30))
        assert find_blossoms(g, maximum_matching(g)) == ()


def test_blossom_search_matches_brute_enumeration():
    rng = random.Random(42)
    for _ in range(120):
        n = rng.randint(3, 7)
        g = random_graph(n, rng.uniform(0.2, 0.9), rng.randrange(1 << 30))
        m = maximum_matching(g)
        got = find_blossoms(g, m)
        assert all(blossom_is_valid(g, m, b) for b in got)
        assert {(b.base, frozenset(b.cycle_edges())) for b in got} == brute_blossoms(g, m)


def test_blossoms_relative_to_non_maximum_matchings():
    g = complete(4)
    got = find_blossoms(g, [(0, 1)])
    assert got and all(blossom_is_valid(g, [(0, 1)], b) for b in got)


def test_pm_fixture_is_not_blossom_free():
    g3 = fixture_by_name("fig3_nonstable").graph
    assert not is_blossom_free(g3, FIG3_PM)


def test_forests_are_blossom_free():
    rng = random.Random(31)
    for _ in range(20):
        g = random_tree(rng.randint(1, 10), rng.randrange(1 << 30))
        assert is_blossom_free(g, maximum_matching(g))


def test_flower_absent_under_perfect_matchings():
    c4 = cycle(4)
    assert find_flower(c4, maximum_matching(c4)) is None
    assert find_flower(TWO_TRIANGLES, maximum_matching(TWO_TRIANGLES)) is None


def test_odd_cycle_flower_has_trivial_stem():
    c5 = cycle(5)
    m = maximum_matching(c5)
    flower = find_flower(c5, m)
    assert flower is not None
    assert flower.trivial_stem
    assert flower.stem == (flower.blossom.base,)
    assert flower.blossom.base in exposed_vertices(c5, m)
    assert blossom_is_valid(c5, m, flower.blossom)


def test_flower_with_a_real_stem():
    # five-cycle with a two-edge tail: the matching covering the tail
    # leaves a cycle vertex exposed only through the stem
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])
    m = validate_matching(g, [(1, 2), (3, 4), (0, 5)])
    flower = find_flower(g, m)
    assert flower is not None and not flower.trivial_stem
    assert flower.stem[0] == flower.blossom.base
    assert flower.stem[-1] == 6
    assert len(flower.stem) % 2 == 1  # even number of edges


def test_paths_have_no_flowers():
    p4 = path(4)
    assert find_flower(p4, maximum_matching(p4)) is None


def test_flower_requires_a_maximum_matching():
    with pytest.raises(GraphError):
        find_flower(cycle(5), [(0, 1)])
    with pytest.raises(GraphError):
        find_posy(cycle(5), [(0, 1)])


def test_posy_in_two_bridged_triangles():
    m = maximum_matching(TWO_TRIANGLES)
    # sanity: alpha + mu < n forces a flower or posy; here it is a posy
    assert stability_number(TWO_TRIANGLES) + len(m) < TWO_TRIANGLES.n
    posy = find_posy(TWO_TRIANGLES, m)
    assert posy is not None
    assert blossom_is_valid(TWO_TRIANGLES, m, posy.blossom1)
    assert blossom_is_valid(TWO_TRIANGLES, m, posy.blossom2)
    p = posy.path
    assert p[0] == posy.blossom1.base and p[-1] == posy.blossom2.base
    assert len(p) % 2 == 0  # odd number of edges
    partner = partner_map(m)
    assert partner[p[0]] == p[1] and partner[p[-1]] == p[-2]


def test_trees_have_no_posies():
    rng = random.Random(8)
    for _ in range(20):
        g = random_tree(rng.randint(1, 9), rng.randrange(1 << 30))
        assert find_posy(g, maximum_matching(g)) is None


def test_structures_absent_for_every_maximum_matching_of_ke_graphs():
    rng = random.Random(60)
    seen = 0
    while seen < 40:
        n = rng.randint(2, 7)
        g = random_graph(n, rng.uniform(0.2, 0.8), rng.randrange(1 << 30))
        if stability_number(g) + matching_number(g) != n:
            continue
        seen += 1
        for m in enumerate_maximum_matchings(g):
            assert find_flower(g, m) is None
            assert find_posy(g, m) is None


def test_all_maximum_matchings_enumeration():
    assert enumerate_maximum_matchings(path(3)) == (
        frozenset({(0, 1)}),
        frozenset({(1, 2)}),
    )
    assert enumerate_maximum_matchings(cycle(4)) == (
        frozenset({(0, 1), (2, 3)}),
        frozenset({(0, 3), (1, 2)}),
    )
    rng = random.Random(90)
    for _ in range(60):
        g = random_graph(rng.randint(0, 7), rng.random(), rng.randrange(1 << 30))
        ms = enumerate_maximum_matchings(g)
        target = brute_max_matching_size(g)
        assert all(len(m) == target for m in ms)
        assert len(set(ms)) == len(ms) and len(ms) >= 1


def test_enumeration_respects_the_cap():
    with pytest.raises(CapExceededError):
        enumerate_maximum_matchings(Graph(17))


def test_search_budget_is_enforced():
    g = complete(12)
    with pytest.raises(SearchBudgetExceededError):
        find_blossoms(g, maximum_matching(g), budget=50)
