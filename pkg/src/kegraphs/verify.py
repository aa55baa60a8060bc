"""Corpus-level cross-validation of every structural claim.

Each check states an equivalence or bound, names the inputs it applies
to, and is evaluated over seeded random corpora.  Both sides of every
equivalence are computed by independent routes (brute force, definition
chasing, or matching structure), so a reported violation always means an
implementation bug.  The CLI's verify command and the acceptance suite
are thin wrappers around run_checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from . import analysis, bruteforce, constructions
from .edgefile import format_graph
from .graph import Graph, bipartition, is_connected
from .matching import (
    enumerate_maximum_matchings,
    find_flower,
    find_posy,
    has_blossom,
    maximum_matching,
)
from .stable import (
    certify_max_stable,
    core_report,
    extend_stable_through_matching,
    maximum_stable_sets,
)

ALL_MATCHINGS_MAX_N = 8


class Facts:
    """Per-graph quantities, computed once and shared across checks."""

    def __init__(self, label: str, graph: Graph):
        self.label = label
        self.graph = graph

    @cached_property
    def matching(self):
        return maximum_matching(self.graph)

    @cached_property
    def mu(self) -> int:
        return len(self.matching)

    @cached_property
    def family(self):
        return maximum_stable_sets(self.graph)

    @cached_property
    def alpha(self) -> int:
        return self.family.alpha

    @cached_property
    def core(self):
        return core_report(self.family)

    @cached_property
    def is_ke(self) -> bool:
        return self.alpha + self.mu == self.graph.n

    @cached_property
    def has_pm(self) -> bool:
        return self.graph.n % 2 == 0 and self.mu * 2 == self.graph.n

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def bipartite(self) -> bool:
        return bipartition(self.graph) is not None

    @cached_property
    def blossom_free(self) -> bool:
        return not has_blossom(self.graph, self.matching)

    @cached_property
    def stable_by_definition(self) -> bool:
        return analysis.is_edge_addition_stable(self.graph)


@dataclass
class CheckStats:
    description: str
    applicable: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.applicable - self.passed


@dataclass
class VerifySummary:
    graphs: int
    checks: dict[str, CheckStats]

    @property
    def violations(self) -> int:
        return sum(s.failed for s in self.checks.values())

    def table(self) -> str:
        name_w = max(len(n) for n in self.checks) + 2
        lines = [f"{'check'.ljust(name_w)}{'applicable':>11}{'pass':>8}{'fail':>8}"]
        for name in sorted(self.checks):
            s = self.checks[name]
            lines.append(
                f"{name.ljust(name_w)}{s.applicable:>11}{s.passed:>8}{s.failed:>8}"
            )
        verdict = "PASS" if self.violations == 0 else "FAIL"
        lines.append(
            f"RESULT: {verdict} ({self.violations} violations over {self.graphs} graphs)"
        )
        return "\n".join(lines)


def _check_matching_oracle(f: Facts) -> str | None:
    brute = bruteforce.brute_max_matching_size(f.graph)
    if f.mu != brute:
        return f"matching sizes differ: search {f.mu}, brute force {brute}"
    return None


def _check_omega_oracle(f: Facts) -> str | None:
    brute = bruteforce.brute_max_stable_sets(f.graph)
    if list(f.family.sets) != brute:
        return "stable-set families differ between enumerators"
    if f.alpha != bruteforce.brute_stability_number(f.graph):
        return "stability numbers differ between enumerators"
    return None


def _check_edge_addition_definition(f: Facts) -> str | None:
    by_def = f.stable_by_definition
    by_core = f.core.core_size <= 1
    if by_def != by_core:
        return f"definition says {by_def}, core size {f.core.core_size} says {by_core}"
    return None


def _check_ke_arithmetic(f: Facts) -> str | None:
    v = analysis.check_ke_arithmetic(f.graph)
    if not v.consistent:
        return f"arithmetic verdict {v}"
    return None


def _check_matchings_in_cut(f: Facts) -> str | None:
    v = analysis.check_matchings_in_cuts(f.graph)
    if not v.holds:
        return "a maximum matching leaves a maximum-stable-set cut"
    return None


def _check_certificate(f: Facts) -> str | None:
    v = analysis.check_certificate_equivalence(f.graph)
    if not v.holds:
        return "certificate disagrees with family membership"
    return None


def _check_near_perfect(f: Facts) -> str | None:
    v = analysis.check_near_perfect_necessity(f.graph)
    if not v.holds:
        return "edge-addition-stable KE graph lacks a (near-)perfect matching"
    return None


def _check_anticore_empty(f: Facts) -> str | None:
    v = analysis.check_anticore_empty_criterion(f.graph)
    if not v.consistent:
        return (
            f"anticore empty {v.anticore_empty} vs pm+blossom-free "
            f"{v.pm_and_blossom_free}"
        )
    return None


def _check_pm_criterion(f: Facts) -> str | None:
    v = analysis.check_alpha_plus_pm_criterion(f.graph)
    if not v.consistent:
        return (
            f"definition {v.stable_by_definition} vs pm+anticore<=1 "
            f"{v.pm_and_small_anticore}"
        )
    return None


def _check_three_routes(f: Facts) -> str | None:
    v = analysis.check_alpha_plus_three_routes(f.graph)
    if not v.consistent:
        return (
            f"definition {v.by_definition}, core {v.by_core_sets}, "
            f"structure {v.by_matching_structure}"
        )
    return None


def _check_core_duality(f: Facts) -> str | None:
    v = analysis.check_core_anticore_duality(f.graph, f.matching)
    if not v.consistent:
        return (
            f"neighborhood==anticore {v.neighborhood_equals_anticore}, "
            f"matched-into-core {v.anticore_matched_into_core}"
        )
    return None


def _check_pm_core_sizes(f: Facts) -> str | None:
    via_core = analysis.pm_via_core(f.graph)
    if via_core != f.has_pm:
        return f"core sizes say {via_core}, matching says {f.has_pm}"
    return None


def _check_pendant(f: Facts) -> str | None:
    v = analysis.pendant_characterization(f.graph)
    if not v.consistent:
        return (
            f"pendant pm {v.pendant_pm}, count/critical "
            f"{v.pendant_count_non_critical}, ke+stable {v.ke_stable_pendant_count}"
        )
    return None


def _check_core_lower_bounds(f: Facts) -> str | None:
    v = analysis.check_core_lower_bounds(f.graph)
    if not v.consistent:
        return "a core lower bound failed"
    return None


def _check_sterboul(f: Facts) -> str | None:
    flower = find_flower(f.graph, f.matching)
    posy = find_posy(f.graph, f.matching)
    structure_free = flower is None and posy is None
    if structure_free != f.is_ke:
        return f"KE {f.is_ke} but structure-free {structure_free}"
    if f.is_ke and f.graph.n <= ALL_MATCHINGS_MAX_N:
        for m in enumerate_maximum_matchings(f.graph):
            if find_flower(f.graph, m) or find_posy(f.graph, m):
                return f"KE graph has a structure for matching {sorted(m)}"
    return None


def _check_decomposition(f: Facts) -> str | None:
    d = analysis.decompose(f.graph)
    if d.stable_set not in set(f.family.sets):
        return "stable side is not a maximum stable set"
    if len(d.rest) != f.mu:
        return "non-stable side size differs from the matching number"
    return None


def _check_peel(f: Facts) -> str | None:
    (x, y), h = constructions.peel(f.graph)
    if x not in f.core.anticore:
        return "peeled vertex is not the anticore vertex"
    if not analysis.is_koenig_egervary(h):
        return "peeled graph is not KE"
    hrep = core_report(maximum_stable_sets(h))
    if hrep.anticore_size != 0:
        return "peeled graph has a nonempty anticore"
    if maximum_stable_sets(h).alpha != len(maximum_matching(h)):
        return "peeled graph has unequal stability and matching numbers"
    return None


def _check_pendant_pair_roundtrip(f: Facts) -> str | None:
    g = f.graph
    transversal = sorted({min(s) for s in f.family.sets})
    fg = constructions.attach_k2(g, transversal)
    frep = core_report(maximum_stable_sets(fg))
    if not analysis.is_koenig_egervary(fg):
        return "attachment output is not KE"
    if not analysis.has_perfect_matching(fg):
        return "attachment output lacks a perfect matching"
    if sorted(frep.anticore) != [g.n]:
        return f"attachment anticore is {sorted(frep.anticore)}, wanted [{g.n}]"
    if sorted(frep.core) != [g.n + 1]:
        return f"attachment core is {sorted(frep.core)}, wanted [{g.n + 1}]"
    _, back = constructions.peel(fg)
    if back != g:
        return "peeling the attachment did not restore the base"
    return None


def _check_extension(f: Facts) -> str | None:
    g = f.graph
    members = set(f.family.sets)
    s = f.family.sets[0]
    for b in sorted(frozenset(range(g.n)) - s):
        got = extend_stable_through_matching(g, f.matching, s, b)
        if b not in got:
            return f"extension from vertex {b} does not contain it"
        if got not in members:
            return f"extension from vertex {b} is not maximum"
        if not certify_max_stable(g, f.matching, got):
            return f"extension from vertex {b} fails the certificate"
    return None


def _check_bipartite_equivalences(f: Facts) -> str | None:
    v = analysis.check_bipartite_equivalences(f.graph)
    if not v.consistent:
        return (
            f"definition {v.stable_by_definition}, pm {v.has_pm}, "
            f"partition {v.partition_pair}, empty core {v.empty_core}"
        )
    return None


def _check_bipartite_zero_core(f: Facts) -> str | None:
    v = analysis.check_bipartite_zero_core(f.graph)
    if not v.holds:
        return "equal nonzero core and anticore sizes on a bipartite graph"
    return None


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    applies: callable
    run: callable


CHECKS: tuple[Check, ...] = (
    Check("matching-oracle", "search matching size equals brute force",
          lambda f: True, _check_matching_oracle),
    Check("omega-oracle", "two independent stable-set enumerators agree",
          lambda f: True, _check_omega_oracle),
    Check("edge-addition-definition",
          "no edge addition lowers alpha iff core size is at most 1",
          lambda f: True, _check_edge_addition_definition),
    Check("sterboul-structures",
          "KE by arithmetic iff no flower and no posy",
          lambda f: True, _check_sterboul),
    Check("ke-arithmetic", "KE bounds and perfect-matching arithmetic",
          lambda f: True, _check_ke_arithmetic),
    Check("matchings-in-cut",
          "every maximum matching lies in every maximum-stable-set cut",
          lambda f: f.is_ke, _check_matchings_in_cut),
    Check("stable-set-certificate",
          "exposed+endpoint certificate equals family membership",
          lambda f: f.is_ke, _check_certificate),
    Check("near-perfect-necessity",
          "edge-addition-stable KE graphs have (near-)perfect matchings",
          lambda f: f.is_ke, _check_near_perfect),
    Check("anticore-empty-criterion",
          "empty anticore iff perfect matching and blossom-free",
          lambda f: f.is_ke and f.connected and f.graph.n >= 2,
          _check_anticore_empty),
    Check("alpha-plus-pm-criterion",
          "stability by definition iff perfect matching and anticore <= 1",
          lambda f: f.is_ke and f.connected, _check_pm_criterion),
    Check("alpha-plus-three-routes",
          "definition, core sizes, and matching structure agree",
          lambda f: f.is_ke and f.connected and f.graph.n >= 2,
          _check_three_routes),
    Check("core-anticore-duality",
          "N(core) equals anticore and is matched into the core",
          lambda f: f.is_ke, _check_core_duality),
    Check("pm-iff-core-equals-anticore",
          "perfect matching iff core and anticore sizes agree",
          lambda f: f.is_ke, _check_pm_core_sizes),
    Check("pendant-characterization",
          "pendant perfect matching three-way equivalence",
          lambda f: f.connected and f.graph.n >= 3, _check_pendant),
    Check("core-lower-bounds",
          "oversized alpha or unequal sides force core size >= 2",
          lambda f: f.is_ke and f.connected and f.graph.n >= 2,
          _check_core_lower_bounds),
    Check("ke-decomposition",
          "stable side * matched rest decomposition is valid",
          lambda f: f.is_ke and f.connected, _check_decomposition),
    Check("peel-step",
          "peeling the anticore pair leaves an empty-anticore KE graph",
          lambda f: (f.is_ke and f.core.anticore_size == 1
                     and f.alpha == f.mu),
          _check_peel),
    Check("pendant-pair-roundtrip",
          "pendant-pair attachment conclusion and peel round-trip",
          lambda f: (f.is_ke and f.graph.n >= 2
                     and f.core.anticore_size == 0),
          _check_pendant_pair_roundtrip),
    Check("extension-construction",
          "alternating saturation reaches every vertex",
          lambda f: (f.is_ke and f.has_pm and f.blossom_free),
          _check_extension),
    Check("bipartite-equivalences",
          "stability, perfect matching, partition pair, empty core agree",
          lambda f: f.bipartite and f.connected and f.graph.n >= 2,
          _check_bipartite_equivalences),
    Check("bipartite-zero-core",
          "equal core and anticore sizes force both empty",
          lambda f: f.bipartite, _check_bipartite_zero_core),
)

CHECKS_BY_NAME = {c.name: c for c in CHECKS}

MAX_RECORDED_FAILURES = 5


def run_checks(
    graphs,
    check_names: list[str] | None = None,
    *,
    inject_failure: bool = False,
) -> VerifySummary:
    """Run the selected checks over (label, graph) pairs."""
    selected = [
        CHECKS_BY_NAME[n] for n in (check_names or [c.name for c in CHECKS])
    ]
    stats = {c.name: CheckStats(c.description) for c in selected}
    if inject_failure:
        stats["self-test"] = CheckStats("deliberately failing harness self-test")
    count = 0
    for label, g in graphs:
        count += 1
        f = Facts(label, g)
        for check in selected:
            if not check.applies(f):
                continue
            s = stats[check.name]
            s.applicable += 1
            detail = check.run(f)
            if detail is None:
                s.passed += 1
            elif len(s.failures) < MAX_RECORDED_FAILURES:
                s.failures.append(
                    f"{label}: {detail}\n{format_graph(g).rstrip()}"
                )
        if inject_failure:
            s = stats["self-test"]
            s.applicable += 1
            if len(s.failures) < MAX_RECORDED_FAILURES:
                s.failures.append(f"{label}: injected failure")
    return VerifySummary(graphs=count, checks=stats)


# -- corpora -------------------------------------------------------------------


def connected_corpus(seed: int, count_per_size: int, n_lo: int, n_hi: int):
    """Seeded connected graphs, count_per_size of each order in [n_lo, n_hi].

    Mixes density levels and sprinkles in named shapes (trees, cycles,
    complete and complete-bipartite graphs) so that the small worked
    examples all appear.
    """
    rng = random.Random(seed)
    out = []
    for n in range(n_lo, n_hi + 1):
        for i in range(count_per_size):
            label = f"n{n}-{i}"
            if n >= 2 and i % 17 == 13:
                g = constructions.random_tree(n, rng.randrange(1 << 30))
            elif n >= 3 and i % 17 == 5:
                g = constructions.cycle(n)
            elif i % 17 == 9:
                g = constructions.complete(n)
            elif n >= 2 and i % 17 == 15:
                a = rng.randint(1, n - 1)
                g = constructions.complete_bipartite(a, n - a)
            else:
                p = rng.uniform(0.15, 0.9)
                g = constructions.random_connected_graph(
                    n, p, rng.randrange(1 << 30)
                )
            out.append((label, g))
    return out


def bipartite_corpus(seed: int, count: int, n_max: int):
    """Seeded connected bipartite graphs of order at most n_max."""
    rng = random.Random(seed)
    out = []
    made = 0
    while made < count:
        n1 = rng.randint(1, n_max - 1)
        n2 = rng.randint(1, min(n_max - n1, n_max - 1))
        p = rng.uniform(0.2, 0.95)
        g = constructions.random_bipartite(n1, n2, p, rng.randrange(1 << 30))
        if not is_connected(g):
            continue
        out.append((f"bip{made}-{n1}x{n2}", g))
        made += 1
    return out
