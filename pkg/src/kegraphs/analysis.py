"""Koenig-Egervary recognition and the structural cross-check layer.

A graph is Koenig-Egervary (KE) when its stability number plus its
matching number equals its order.  Around that identity this module
implements the per-graph verdicts the verification suite relies on:
every check computes both sides of an equivalence by independent routes
(definition vs. core sizes vs. matching structure) and reports whether
they agree, rather than inferring one side from the other.

Statements that hold only under connectivity assumptions are gated: the
checks raise on inputs outside their scope, and full_report applies them
per connected component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import (
    Edge,
    Graph,
    GraphError,
    bipartition,
    connected_components,
    cut_edges,
    delete_vertices,
    induced_subgraph,
    is_connected,
    neighborhood,
    pendant_vertices,
)
from .limits import check_cap, DEFAULT_OMEGA_CAP
from .matching import (
    Matching,
    enumerate_maximum_matchings,
    find_flower,
    find_posy,
    has_blossom,
    matching_number,
    maximum_matching,
    partner_map,
    validate_matching,
)
from .stable import (
    CoreReport,
    core_report,
    maximum_stable_sets,
    stability_after_adding_edge,
    stability_number,
)


class TheoremViolationError(AssertionError):
    """An internal cross-check failed; this always means an implementation
    bug, never a defect in the underlying mathematics."""


def is_koenig_egervary(g: Graph, cap: int | None = None) -> bool:
    """Whether the stability number plus the matching number equals n."""
    return stability_number(g, cap=cap) + matching_number(g) == g.n


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) == g.n // 2


def is_edge_addition_stable(g: Graph, cap: int | None = None) -> bool:
    """Definition route: no single added edge lowers the stability number."""
    alpha = stability_number(g, cap=cap)
    for u in range(g.n):
        mask = g.adjacency_mask(u)
        for v in range(u + 1, g.n):
            if mask >> v & 1:
                continue
            if stability_after_adding_edge(g, (u, v), cap=cap) != alpha:
                return False
    return True


def is_alpha_critical(g: Graph, v: int, cap: int | None = None) -> bool:
    """Whether deleting v lowers the stability number."""
    g.check_vertex(v)
    return stability_number(delete_vertices(g, {v}), cap=cap) < stability_number(
        g, cap=cap
    )


# -- decomposition ------------------------------------------------------------


@dataclass(frozen=True)
class KeDecomposition:
    """A maximum stable set S, the rest of the graph, and a matching of size
    |V - S| living entirely in the cut between them."""

    stable_set: frozenset[int]
    rest: frozenset[int]
    cut_matching: Matching


def decompose(g: Graph, cap: int | None = None) -> KeDecomposition:
    """Split a connected KE graph as stable set * rest with a cut matching.

    The stable side is the lexicographically first maximum stable set; the
    witness matching is the canonical maximum matching, which necessarily
    covers all of the rest and crosses the cut.
    """
    if not is_connected(g):
        raise GraphError("decompose requires a connected graph; split by component")
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("decompose requires a Koenig-Egervary graph")
    fam = maximum_stable_sets(g, cap=cap)
    s = fam.sets[0]
    rest = frozenset(range(g.n)) - s
    m = maximum_matching(g)
    cut = cut_edges(g, s, rest)
    if not m <= cut:
        raise TheoremViolationError("maximum matching leaves the cut of a KE split")
    if len(m) != len(rest):
        raise TheoremViolationError("cut matching does not cover the non-stable side")
    return KeDecomposition(stable_set=s, rest=rest, cut_matching=m)


# -- stability classification -------------------------------------------------


@dataclass(frozen=True)
class StabilityClassification:
    """Core-size verdict: alpha0_plus (empty core), alpha1_plus (singleton),
    or not_stable with a witness edge whose addition drops alpha."""

    kind: str
    core: frozenset[int]
    witness_edge: Edge | None = None


def classify_alpha_plus(g: Graph, cap: int | None = None) -> StabilityClassification:
    fam = maximum_stable_sets(g, cap=cap)
    rep = core_report(fam)
    if rep.core_size == 0:
        return StabilityClassification("alpha0_plus", rep.core)
    if rep.core_size == 1:
        return StabilityClassification("alpha1_plus", rep.core)
    u, v = sorted(rep.core)[:2]
    # two core vertices are never adjacent, and joining them kills every
    # maximum stable set at once
    witness = (u, v)
    if stability_after_adding_edge(g, witness, cap=cap) >= fam.alpha:
        raise TheoremViolationError("core pair addition failed to lower alpha")
    return StabilityClassification("not_stable", rep.core, witness)


# -- per-theorem verdicts ------------------------------------------------------


@dataclass(frozen=True)
class ArithmeticVerdict:
    """KE arithmetic: alpha >= n/2 >= mu; perfect matching iff alpha == mu;
    and, among graphs with a perfect matching, alpha == mu iff KE."""

    bounds_hold: bool
    pm_iff_alpha_equals_mu: bool
    pm_graphs_alpha_mu_iff_ke: bool

    @property
    def consistent(self) -> bool:
        return (
            self.bounds_hold
            and self.pm_iff_alpha_equals_mu
            and self.pm_graphs_alpha_mu_iff_ke
        )


def check_ke_arithmetic(g: Graph, cap: int | None = None) -> ArithmeticVerdict:
    alpha = stability_number(g, cap=cap)
    mu = matching_number(g)
    ke = alpha + mu == g.n
    pm = has_perfect_matching(g)
    bounds = (2 * alpha >= g.n >= 2 * mu) if ke else True
    iff1 = (pm == (alpha == mu)) if ke else True
    iff2 = ((alpha == mu) == ke) if pm else True
    return ArithmeticVerdict(bounds, iff1, iff2)


@dataclass(frozen=True)
class CutContainmentVerdict:
    """Every maximum matching lies inside every (S, V-S) cut, S ranging over
    the maximum stable sets."""

    matchings_checked: int
    stable_sets_checked: int
    holds: bool


def check_matchings_in_cuts(g: Graph, cap: int | None = None) -> CutContainmentVerdict:
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("cut containment is a KE-only property")
    fam = maximum_stable_sets(g, cap=cap)
    matchings = enumerate_maximum_matchings(g, cap=cap)
    full = frozenset(range(g.n))
    for s in fam.sets:
        cut = cut_edges(g, s, full - s)
        for m in matchings:
            if not m <= cut:
                return CutContainmentVerdict(len(matchings), len(fam.sets), False)
    return CutContainmentVerdict(len(matchings), len(fam.sets), True)


@dataclass(frozen=True)
class CertificateVerdict:
    """The exposed-vertices-plus-one-endpoint certificate agrees with
    membership in the maximum-stable-set family, over every stable set and
    every maximum matching."""

    sets_checked: int
    holds: bool


def _all_stable_sets(g: Graph) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []
    n = g.n
    masks = g._masks  # noqa: SLF001

    def rec(v: int, chosen: int, banned: int) -> None:
        if v == n:
            out.append(frozenset(u for u in range(n) if chosen >> u & 1))
            return
        rec(v + 1, chosen, banned)
        if not banned >> v & 1:
            rec(v + 1, chosen | 1 << v, banned | masks[v])

    rec(0, 0, 0)
    return out


def check_certificate_equivalence(g: Graph, cap: int | None = None) -> CertificateVerdict:
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("the stable-set certificate is a KE-only property")
    check_cap(g.n, cap, DEFAULT_OMEGA_CAP, "certificate equivalence scan")
    fam = maximum_stable_sets(g, cap=cap)
    members = set(fam.sets)
    matchings = enumerate_maximum_matchings(g, cap=cap)
    exposed_by_matching = [
        (m, frozenset(range(g.n)) - {v for e in m for v in e}) for m in matchings
    ]
    checked = 0
    for s in _all_stable_sets(g):
        expected = s in members
        for m, exposed in exposed_by_matching:
            checked += 1
            certified = exposed <= s and all(
                (u in s) + (v in s) == 1 for u, v in m
            )
            if certified != expected:
                return CertificateVerdict(checked, False)
    return CertificateVerdict(checked, True)


@dataclass(frozen=True)
class AnticoreEmptyVerdict:
    """Empty anticore iff perfect matching plus blossom-free, both sides
    computed independently."""

    anticore_empty: bool
    pm_and_blossom_free: bool

    @property
    def consistent(self) -> bool:
        return self.anticore_empty == self.pm_and_blossom_free


def check_anticore_empty_criterion(
    g: Graph, cap: int | None = None
) -> AnticoreEmptyVerdict:
    if g.n < 2:
        raise GraphError("criterion requires order at least 2")
    if not is_connected(g):
        raise GraphError("criterion requires a connected graph")
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("criterion requires a Koenig-Egervary graph")
    rep = core_report(maximum_stable_sets(g, cap=cap))
    pm = has_perfect_matching(g)
    right = pm and not has_blossom(g, maximum_matching(g))
    return AnticoreEmptyVerdict(rep.anticore_size == 0, right)


@dataclass(frozen=True)
class PmCriterionVerdict:
    """Edge-addition stability iff perfect matching plus anticore of size at
    most one."""

    stable_by_definition: bool
    pm_and_small_anticore: bool

    @property
    def consistent(self) -> bool:
        return self.stable_by_definition == self.pm_and_small_anticore


def check_alpha_plus_pm_criterion(
    g: Graph, cap: int | None = None
) -> PmCriterionVerdict:
    if not is_connected(g):
        raise GraphError("criterion requires a connected graph")
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("criterion requires a Koenig-Egervary graph")
    left = is_edge_addition_stable(g, cap=cap)
    rep = core_report(maximum_stable_sets(g, cap=cap))
    right = has_perfect_matching(g) and rep.anticore_size <= 1
    return PmCriterionVerdict(left, right)


@dataclass(frozen=True)
class ThreeRouteVerdict:
    """Edge-addition stability decided by three independent routes: the
    definition, the core/anticore sizes, and matching structure."""

    by_definition: bool
    by_core_sets: bool
    by_matching_structure: bool

    @property
    def consistent(self) -> bool:
        return self.by_definition == self.by_core_sets == self.by_matching_structure


def _structural_stability_route(g: Graph) -> bool:
    """Matching-only route: a perfect matching must exist, and the graph is
    either blossom-free, or some pendant vertex p with neighbor q leaves
    G - {p, q} blossom-free with a perfect matching.

    Deleting arbitrary adjacent pairs would admit false positives (deleting
    one such pair from the complete four-vertex graph minus an edge leaves a
    bare edge, yet that graph has a two-vertex anticore); restricted to
    pendant pairs, the route is equivalent to the core-size route on every
    KE graph of order at least 2.
    """
    if not has_perfect_matching(g):
        return False
    if not has_blossom(g, maximum_matching(g)):
        return True
    for p in pendant_vertices(g):
        q = g.neighbors(p)[0]
        h = delete_vertices(g, {p, q})
        if h.n == 0:
            continue
        if not has_perfect_matching(h):
            continue
        if not has_blossom(h, maximum_matching(h)):
            return True
    return False


def check_alpha_plus_three_routes(
    g: Graph, cap: int | None = None
) -> ThreeRouteVerdict:
    if g.n < 2:
        raise GraphError("criterion requires order at least 2")
    if not is_connected(g):
        raise GraphError("criterion requires a connected graph")
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("criterion requires a Koenig-Egervary graph")
    by_def = is_edge_addition_stable(g, cap=cap)
    rep = core_report(maximum_stable_sets(g, cap=cap))
    by_core = rep.anticore_size == 0 or (
        rep.anticore_size == 1 and has_perfect_matching(g)
    )
    return ThreeRouteVerdict(by_def, by_core, _structural_stability_route(g))


def pm_via_core(g: Graph, cap: int | None = None) -> bool:
    """Perfect-matching test through core sizes: for KE graphs a perfect
    matching exists exactly when core and anticore have the same size.
    Refuses non-KE inputs, where the equality proves nothing."""
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("core-size comparison decides perfect matchings only "
                         "for Koenig-Egervary graphs")
    rep = core_report(maximum_stable_sets(g, cap=cap))
    return rep.core_size == rep.anticore_size


@dataclass(frozen=True)
class CoreDualityVerdict:
    """N(core) equals the anticore, and any maximum matching pairs every
    anticore vertex with a core vertex."""

    neighborhood_equals_anticore: bool
    anticore_matched_into_core: bool

    @property
    def consistent(self) -> bool:
        return self.neighborhood_equals_anticore and self.anticore_matched_into_core


def check_core_anticore_duality(
    g: Graph, m: Iterable[Edge] | None = None, cap: int | None = None
) -> CoreDualityVerdict:
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("core/anticore duality is a KE-only property")
    m = maximum_matching(g) if m is None else validate_matching(g, m)
    if len(m) != matching_number(g):
        raise GraphError("duality check needs a maximum matching")
    rep = core_report(maximum_stable_sets(g, cap=cap))
    lemma5 = neighborhood(g, rep.core) == rep.anticore
    partner = partner_map(m)
    lemma6 = all(
        v in partner and partner[v] in rep.core for v in rep.anticore
    )
    return CoreDualityVerdict(lemma5, lemma6)


@dataclass(frozen=True)
class NearPerfectVerdict:
    """Edge-addition-stable KE graphs have a perfect or near-perfect
    matching."""

    applicable: bool
    holds: bool


def check_near_perfect_necessity(g: Graph, cap: int | None = None) -> NearPerfectVerdict:
    if not is_koenig_egervary(g, cap=cap):
        raise GraphError("near-perfect necessity is stated for KE graphs")
    rep = core_report(maximum_stable_sets(g, cap=cap))
    if rep.core_size > 1:
        return NearPerfectVerdict(False, True)
    return NearPerfectVerdict(True, g.n - 2 * matching_number(g) <= 1)


@dataclass(frozen=True)
class PendantVerdict:
    """Three-way equivalence for pendant structure: a perfect matching made
    of pendant edges; exactly alpha pendant vertices with none critical;
    KE plus edge-addition-stable with exactly alpha pendant vertices."""

    pendant_pm: bool
    pendant_count_non_critical: bool
    ke_stable_pendant_count: bool

    @property
    def consistent(self) -> bool:
        return self.pendant_pm == self.pendant_count_non_critical == self.ke_stable_pendant_count


def pendant_characterization(g: Graph, cap: int | None = None) -> PendantVerdict:
    if g.n < 2:
        raise GraphError("pendant characterization requires order at least 2")
    pendants = pendant_vertices(g)
    pendant_edges = {(p, g.neighbors(p)[0]) for p in pendants}
    pendant_edges = {tuple(sorted(e)) for e in pendant_edges}
    covered = [v for e in pendant_edges for v in e]
    stmt1 = len(covered) == len(set(covered)) == g.n
    alpha = stability_number(g, cap=cap)
    stmt2 = len(pendants) == alpha and not any(
        is_alpha_critical(g, p, cap=cap) for p in pendants
    )
    stmt3 = (
        is_koenig_egervary(g, cap=cap)
        and is_edge_addition_stable(g, cap=cap)
        and len(pendants) == alpha
    )
    return PendantVerdict(stmt1, stmt2, stmt3)


@dataclass(frozen=True)
class CoreLowerBoundVerdict:
    """Lower bounds on the core: a KE graph with alpha > n/2 has a core of
    size at least 2; so does a connected bipartite graph with unequal
    sides."""

    oversized_alpha_applicable: bool
    oversized_alpha_holds: bool
    unequal_sides_applicable: bool
    unequal_sides_holds: bool

    @property
    def consistent(self) -> bool:
        return self.oversized_alpha_holds and self.unequal_sides_holds


def check_core_lower_bounds(g: Graph, cap: int | None = None) -> CoreLowerBoundVerdict:
    if g.n < 2 or not is_connected(g):
        raise GraphError("core lower bounds are stated for connected graphs of "
                         "order at least 2")
    alpha = stability_number(g, cap=cap)
    ke = is_koenig_egervary(g, cap=cap)
    semi_applies = ke and 2 * alpha > g.n
    rep = core_report(maximum_stable_sets(g, cap=cap))
    semi_holds = rep.core_size >= 2 if semi_applies else True
    sides = bipartition(g)
    cor_applies = sides is not None and len(sides[0]) != len(sides[1])
    cor_holds = rep.core_size >= 2 if cor_applies else True
    return CoreLowerBoundVerdict(semi_applies, semi_holds, cor_applies, cor_holds)


@dataclass(frozen=True)
class BipartiteEquivalenceVerdict:
    """For connected bipartite graphs: edge-addition stability, a perfect
    matching, two maximum stable sets partitioning V, and an empty core are
    all equivalent."""

    stable_by_definition: bool
    has_pm: bool
    partition_pair: bool
    empty_core: bool

    @property
    def consistent(self) -> bool:
        return (
            self.stable_by_definition
            == self.has_pm
            == self.partition_pair
            == self.empty_core
        )


def check_bipartite_equivalences(
    g: Graph, cap: int | None = None
) -> BipartiteEquivalenceVerdict:
    if g.n < 2 or not is_connected(g):
        raise GraphError("bipartite equivalences are stated for connected graphs "
                         "of order at least 2")
    if bipartition(g) is None:
        raise GraphError("graph is not bipartite")
    by_def = is_edge_addition_stable(g, cap=cap)
    pm = has_perfect_matching(g)
    fam = maximum_stable_sets(g, cap=cap)
    members = set(fam.sets)
    full = frozenset(range(g.n))
    pair = any(full - s in members for s in fam.sets)
    empty_core = core_report(fam).core_size == 0
    return BipartiteEquivalenceVerdict(by_def, pm, pair, empty_core)


@dataclass(frozen=True)
class BipartiteZeroCoreVerdict:
    """For bipartite graphs, equal core and anticore sizes force both to be
    empty."""

    applicable: bool
    holds: bool


def check_bipartite_zero_core(g: Graph, cap: int | None = None) -> BipartiteZeroCoreVerdict:
    if bipartition(g) is None:
        raise GraphError("graph is not bipartite")
    rep = core_report(maximum_stable_sets(g, cap=cap))
    if rep.core_size != rep.anticore_size:
        return BipartiteZeroCoreVerdict(False, True)
    return BipartiteZeroCoreVerdict(True, rep.core_size == 0)


@dataclass(frozen=True)
class StructureConsistencyVerdict:
    """KE membership by arithmetic agrees with the absence of flowers and
    posies relative to the canonical maximum matching (and, when requested,
    relative to every maximum matching)."""

    ke_by_arithmetic: bool
    flower_found: bool
    posy_found: bool
    all_matchings_checked: int

    @property
    def structure_free(self) -> bool:
        return not (self.flower_found or self.posy_found)

    @property
    def consistent(self) -> bool:
        return self.ke_by_arithmetic == self.structure_free


def check_structure_consistency(
    g: Graph,
    cap: int | None = None,
    *,
    all_matchings_max_n: int = 0,
    budget: int | None = None,
) -> StructureConsistencyVerdict:
    ke = is_koenig_egervary(g, cap=cap)
    m = maximum_matching(g)
    flower_found = find_flower(g, m, budget=budget) is not None
    posy_found = find_posy(g, m, budget=budget) is not None
    checked = 0
    if ke and g.n <= all_matchings_max_n:
        for mm in enumerate_maximum_matchings(g, cap=cap):
            checked += 1
            flower_found = flower_found or find_flower(g, mm, budget=budget) is not None
            posy_found = posy_found or find_posy(g, mm, budget=budget) is not None
            if flower_found or posy_found:
                break
    return StructureConsistencyVerdict(ke, flower_found, posy_found, checked)


# -- the aggregated report -----------------------------------------------------


@dataclass(frozen=True)
class PendantProfile:
    pendants: tuple[int, ...]
    alpha_critical_pendants: tuple[int, ...]


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    m: int
    connected: bool
    alpha: int
    mu: int
    is_ke: bool
    has_pm: bool
    core: CoreReport
    stability: StabilityClassification
    decomposition: KeDecomposition | None
    blossom_free: bool
    pendant_profile: PendantProfile
    omega_size: int

    def to_json_dict(self) -> dict:
        dec = None
        if self.decomposition is not None:
            dec = {
                "stable_set": sorted(self.decomposition.stable_set),
                "rest": sorted(self.decomposition.rest),
                "cut_matching": [list(e) for e in sorted(self.decomposition.cut_matching)],
            }
        return {
            "n": self.n,
            "m": self.m,
            "connected": self.connected,
            "alpha": self.alpha,
            "mu": self.mu,
            "is_ke": self.is_ke,
            "has_pm": self.has_pm,
            "core": sorted(self.core.core),
            "anticore": sorted(self.core.anticore),
            "core_size": self.core.core_size,
            "anticore_size": self.core.anticore_size,
            "stability": {
                "class": self.stability.kind,
                "witness_edge": list(self.stability.witness_edge)
                if self.stability.witness_edge
                else None,
            },
            "decomposition": dec,
            "blossom_free": self.blossom_free,
            "pendant_profile": {
                "pendants": list(self.pendant_profile.pendants),
                "alpha_critical_pendants": list(
                    self.pendant_profile.alpha_critical_pendants
                ),
            },
            "omega_size": self.omega_size,
        }


def _component_cross_checks(g: Graph, cap: int | None) -> None:
    """Per-component theorem checks; any failure is an implementation bug."""
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        if sub.n >= 2 and is_koenig_egervary(sub, cap=cap):
            if not check_anticore_empty_criterion(sub, cap=cap).consistent:
                raise TheoremViolationError("anticore-empty criterion failed")
            if not check_alpha_plus_pm_criterion(sub, cap=cap).consistent:
                raise TheoremViolationError("perfect-matching stability criterion failed")
            if not check_alpha_plus_three_routes(sub, cap=cap).consistent:
                raise TheoremViolationError("three-route stability criterion failed")
            if not check_core_lower_bounds(sub, cap=cap).consistent:
                raise TheoremViolationError("core lower bound failed")
        if sub.n >= 3 and not pendant_characterization(sub, cap=cap).consistent:
            raise TheoremViolationError("pendant characterization failed")


def full_report(
    g: Graph, cap: int | None = None, *, deep_checks: bool = True
) -> AnalysisReport:
    """Aggregate verdict for one graph.

    With deep_checks the applicable structural equivalences are re-verified
    per connected component and a TheoremViolationError is raised on any
    disagreement.
    """
    fam = maximum_stable_sets(g, cap=cap)
    rep = core_report(fam)
    m = maximum_matching(g)
    alpha, mu = fam.alpha, len(m)
    ke = alpha + mu == g.n
    connected = is_connected(g)
    pm = has_perfect_matching(g)
    stability = classify_alpha_plus(g, cap=cap)
    decomposition = decompose(g, cap=cap) if (ke and connected and g.n) else None
    blossom_free = not has_blossom(g, m)
    pendants = pendant_vertices(g)
    profile = PendantProfile(
        pendants=pendants,
        alpha_critical_pendants=tuple(
            p for p in pendants if is_alpha_critical(g, p, cap=cap)
        ),
    )
    if ke:
        if pm != pm_via_core(g, cap=cap):
            raise TheoremViolationError("core-size perfect-matching test failed")
        if not check_core_anticore_duality(g, m, cap=cap).consistent:
            raise TheoremViolationError("core/anticore duality failed")
        if not check_ke_arithmetic(g, cap=cap).consistent:
            raise TheoremViolationError("KE arithmetic failed")
    if deep_checks:
        _component_cross_checks(g, cap)
    return AnalysisReport(
        n=g.n,
        m=g.m,
        connected=connected,
        alpha=alpha,
        mu=mu,
        is_ke=ke,
        has_pm=pm,
        core=rep,
        stability=stability,
        decomposition=decomposition,
        blossom_free=blossom_free,
        pendant_profile=profile,
        omega_size=len(fam.sets),
    )
