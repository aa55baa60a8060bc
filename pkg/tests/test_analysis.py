import json
import random

import pytest

from kegraphs.analysis import (
    check_alpha_plus_pm_criterion,
    check_alpha_plus_three_routes,
    check_anticore_empty_criterion,
    check_bipartite_equivalences,
    check_bipartite_zero_core,
    check_certificate_equivalence,
    check_core_anticore_duality,
    check_core_lower_bounds,
    check_ke_arithmetic,
    check_matchings_in_cuts,
    check_near_perfect_necessity,
    check_structure_consistency,
    classify_alpha_plus,
    decompose,
    full_report,
    has_perfect_matching,
    is_alpha_critical,
    is_edge_addition_stable,
    is_koenig_egervary,
    pendant_characterization,
    pm_via_core,
)
from kegraphs.constructions import (
    complete,
    complete_bipartite,
    cycle,
    fixture_by_name,
    path,
    random_bipartite,
    random_tree,
)
from kegraphs.graph import Graph, GraphError, neighborhood
from kegraphs.stable import core_report, maximum_stable_sets

K4_MINUS_E = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def test_ke_membership_examples():
    assert is_koenig_egervary(K4_MINUS_E)
    assert not is_koenig_egervary(cycle(5))
    rng = random.Random(2)
    for _ in range(30):
        g = random_bipartite(
            rng.randint(0, 5), rng.randint(0, 5), rng.random(), rng.randrange(1 << 30)
        )
        assert is_koenig_egervary(g)


def test_ke_membership_is_closed_under_components():
    from kegraphs.constructions import random_graph
    from kegraphs.graph import connected_components, induced_subgraph

    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng.randint(1, 9), rng.uniform(0.1, 0.5),
                         rng.randrange(1 << 30))
        per_component = all(
            is_koenig_egervary(induced_subgraph(g, comp)[0])
            for comp in connected_components(g)
        )
        assert is_koenig_egervary(g) == per_component


def test_decompose_examples():
    d = decompose(K4_MINUS_E)
    assert d.stable_set == {2, 3} and d.rest == {0, 1}
    assert len(d.cut_matching) == 2
    d = decompose(path(4))
    assert d.stable_set == {0, 2} and len(d.cut_matching) == 2
    star = complete_bipartite(1, 3)
    d = decompose(star)
    assert d.stable_set == {1, 2, 3} and d.rest == {0} and len(d.cut_matching) == 1


def test_decompose_rejects_bad_inputs():
    with pytest.raises(GraphError):
        decompose(cycle(5))
    with pytest.raises(GraphError):
        decompose(Graph(4, [(0, 1), (2, 3)]))


def test_classification_examples():
    assert classify_alpha_plus(fixture_by_name("fig4_g1").graph).kind == "alpha1_plus"
    assert classify_alpha_plus(fixture_by_name("fig4_g2").graph).kind == "alpha0_plus"
    verdict = classify_alpha_plus(K4_MINUS_E)
    assert verdict.kind == "not_stable" and verdict.witness_edge == (2, 3)
    assert classify_alpha_plus(complete(5)).kind == "alpha0_plus"
    assert classify_alpha_plus(Graph(1)).kind == "alpha1_plus"


def test_classification_matches_definition():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 8)
        g = Graph(
            n,
            [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.5
            ],
        )
        kind = classify_alpha_plus(g).kind
        assert is_edge_addition_stable(g) == (kind != "not_stable")


def test_pm_criterion_examples():
    v = check_alpha_plus_pm_criterion(K4_MINUS_E)
    assert v.consistent and not v.pm_and_small_anticore
    v = check_alpha_plus_pm_criterion(path(3))
    assert v.consistent and not v.pm_and_small_anticore
    v = check_alpha_plus_pm_criterion(cycle(4))
    assert v.consistent and v.pm_and_small_anticore


def test_three_route_examples():
    v = check_alpha_plus_three_routes(fixture_by_name("fig3_nonstable").graph)
    assert v.consistent
    assert (v.by_definition, v.by_core_sets, v.by_matching_structure) == (
        False,
        False,
        False,
    )
    v = check_alpha_plus_three_routes(fixture_by_name("fig4_g1").graph)
    assert v.consistent and v.by_definition
    v = check_alpha_plus_three_routes(cycle(4))
    assert v.consistent and v.by_definition


def test_three_route_gates():
    with pytest.raises(GraphError):
        check_alpha_plus_three_routes(cycle(5))  # not KE
    with pytest.raises(GraphError):
        check_alpha_plus_three_routes(Graph(4, [(0, 1), (2, 3)]))  # disconnected
    with pytest.raises(GraphError):
        check_alpha_plus_three_routes(Graph(1))  # too small


def test_anticore_empty_criterion_examples():
    v = check_anticore_empty_criterion(K4_MINUS_E)
    assert v.consistent and not v.anticore_empty
    v = check_anticore_empty_criterion(cycle(4))
    assert v.consistent and v.anticore_empty
    rng = random.Random(6)
    for _ in range(25):
        tree = random_tree(rng.randint(2, 9), rng.randrange(1 << 30))
        v = check_anticore_empty_criterion(tree)
        assert v.consistent
        if not has_perfect_matching(tree):
            assert not v.anticore_empty


def test_pm_via_core():
    assert pm_via_core(K4_MINUS_E) is True
    assert pm_via_core(path(3)) is False
    with pytest.raises(GraphError):
        pm_via_core(fixture_by_name("fig5_non_ke").graph)


def test_core_anticore_duality_examples():
    v = check_core_anticore_duality(K4_MINUS_E, [(0, 2), (1, 3)])
    assert v.consistent
    v = check_core_anticore_duality(cycle(4))
    assert v.consistent
    # the duality genuinely fails outside its scope: on the non-KE fixture
    g5 = fixture_by_name("fig5_non_ke").graph
    rep = core_report(maximum_stable_sets(g5))
    assert neighborhood(g5, rep.core) == {1} != rep.anticore
    with pytest.raises(GraphError):
        check_core_anticore_duality(g5)


def test_pendant_characterization_examples():
    # single edge: a pendant perfect matching exists, but both endpoints are
    # pendant while alpha is 1, so the counting statements fail (the
    # three-way equivalence genuinely needs order at least 3)
    v = pendant_characterization(Graph(2, [(0, 1)]))
    assert (v.pendant_pm, v.pendant_count_non_critical, v.ke_stable_pendant_count) == (
        True,
        False,
        False,
    )
    v = pendant_characterization(path(3))
    assert not v.pendant_pm and not v.pendant_count_non_critical
    assert not v.ke_stable_pendant_count
    corona = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    v = pendant_characterization(corona)
    assert v.consistent and v.pendant_pm


def test_alpha_critical_examples():
    assert is_alpha_critical(path(3), 0)
    assert not is_alpha_critical(Graph(2, [(0, 1)]), 0)
    assert not is_alpha_critical(cycle(4), 2)


def test_core_lower_bound_examples():
    v = check_core_lower_bounds(path(3))
    assert v.oversized_alpha_applicable and v.consistent
    v = check_core_lower_bounds(complete_bipartite(1, 3))
    assert v.unequal_sides_applicable and v.consistent
    v = check_core_lower_bounds(cycle(4))
    assert not v.oversized_alpha_applicable and not v.unequal_sides_applicable


def test_bipartite_equivalences():
    v = check_bipartite_equivalences(cycle(4))
    assert v.consistent and v.has_pm
    v = check_bipartite_equivalences(path(3))
    assert v.consistent and not v.has_pm
    with pytest.raises(GraphError):
        check_bipartite_equivalences(cycle(5))
    with pytest.raises(GraphError):
        check_bipartite_equivalences(Graph(1))


def test_bipartite_zero_core():
    assert check_bipartite_zero_core(cycle(4)).holds
    v = check_bipartite_zero_core(path(3))
    assert not v.applicable and v.holds


def test_ke_arithmetic_and_near_perfect():
    assert check_ke_arithmetic(K4_MINUS_E).consistent
    assert check_near_perfect_necessity(fixture_by_name("fig4_g1").graph).holds
    assert check_matchings_in_cuts(K4_MINUS_E).holds


def test_certificate_equivalence_check():
    assert check_certificate_equivalence(K4_MINUS_E).holds
    assert check_certificate_equivalence(path(4)).holds


def test_structure_consistency():
    v = check_structure_consistency(cycle(5))
    assert v.consistent and not v.ke_by_arithmetic and not v.structure_free
    v = check_structure_consistency(cycle(4), all_matchings_max_n=8)
    assert v.consistent and v.ke_by_arithmetic and v.structure_free


def test_full_report_values():
    rep = full_report(K4_MINUS_E)
    doc = rep.to_json_dict()
    assert (doc["alpha"], doc["mu"], doc["is_ke"], doc["has_pm"]) == (2, 2, True, True)
    assert (doc["core_size"], doc["anticore_size"]) == (2, 2)
    assert doc["stability"]["class"] == "not_stable"
    rep = full_report(cycle(4))
    doc = rep.to_json_dict()
    assert (doc["alpha"], doc["mu"], doc["core_size"], doc["anticore_size"]) == (
        2,
        2,
        0,
        0,
    )
    assert doc["stability"]["class"] == "alpha0_plus"
    rep = full_report(fixture_by_name("fig1_seven").graph)
    assert (rep.alpha, rep.mu, rep.is_ke, rep.has_pm) == (4, 3, True, False)


def test_full_report_handles_disconnected_graphs():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    rep = full_report(g)
    assert not rep.connected and rep.decomposition is None
    assert rep.alpha == 3 and rep.mu == 2 and rep.is_ke


def test_report_json_is_stable():
    doc = full_report(fixture_by_name("fig4_g1").graph).to_json_dict()
    first = json.dumps(doc, sort_keys=True)
    second = json.dumps(full_report(fixture_by_name("fig4_g1").graph).to_json_dict(),
                        sort_keys=True)
    assert first == second
