"""Graph constructions, figure fixtures, and seeded generators.

The constructive operations mirror the structural results they witness:
joining a stable side to a small side across a cut matching produces a
Koenig-Egervary graph; attaching a pendant pair to an empty-anticore KE
graph produces one with a singleton anticore; peeling the anticore
vertex and its matching partner undoes the attachment; gluing a clique
onto an edge-addition-stable bipartite base preserves stability.

Randomness always flows through random.Random (the Mersenne Twister)
seeded by the caller, so corpora are reproducible bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .analysis import AnalysisReport, classify_alpha_plus, is_koenig_egervary
from .graph import Edge, Graph, GraphError, bipartition, is_connected
from .matching import matching_number, maximum_matching, partner_map
from .stable import core_report, maximum_stable_sets


# -- joins and pendant pairs ---------------------------------------------------


def join(h1: Graph, h2: Graph, cross: Iterable[Edge]) -> Graph:
    """Disjoint union of h1 and h2 plus the given cross edges.

    Cross pairs are (h1-vertex, h2-vertex) in each side's own numbering;
    h2's ids are shifted by h1.n in the result.  At least one cross edge is
    required when both sides are nonempty.
    """
    cross = list(cross)
    for u, v in cross:
        if not (0 <= u < h1.n):
            raise GraphError(f"cross pair ({u}, {v}): {u} is not an h1 vertex")
        if not (0 <= v < h2.n):
            raise GraphError(f"cross pair ({u}, {v}): {v} is not an h2 vertex")
    if h1.n and h2.n and not cross:
        raise GraphError("join of two nonempty graphs needs at least one cross edge")
    shift = h1.n
    edges = list(h1.edges)
    edges += [(u + shift, v + shift) for u, v in h2.edges]
    edges += [(u, v + shift) for u, v in cross]
    return Graph(h1.n + h2.n, edges)


def attach_k2(g: Graph, y_edges: Iterable[int]) -> Graph:
    """Attach a pendant pair: y = g.n adjacent to y_edges and to the new
    pendant x = g.n + 1.

    Requires a Koenig-Egervary base with empty anticore and an attachment
    set meeting every maximum stable set; the result is then KE with a
    perfect matching, anticore exactly {y} and core exactly {x}.
    """
    y_set = g.check_vertex_set(y_edges)
    if not y_set:
        raise GraphError("attachment set must be nonempty")
    if not is_koenig_egervary(g):
        raise GraphError("attachment base must be a Koenig-Egervary graph")
    fam = maximum_stable_sets(g)
    if core_report(fam).anticore_size != 0:
        raise GraphError("attachment base must have an empty anticore")
    for s in fam.sets:
        if not (y_set & s):
            raise GraphError(
                f"attachment set misses the maximum stable set {sorted(s)}"
            )
    y = g.n
    x = g.n + 1
    edges = list(g.edges) + [(v, y) for v in sorted(y_set)] + [(y, x)]
    return Graph(g.n + 2, edges)


def peel(g: Graph) -> tuple[Edge, Graph]:
    """Remove the unique anticore vertex and its matching partner.

    Requires a KE graph with anticore of size exactly one and equal
    stability and matching numbers (hence a perfect matching).  Returns the
    removed edge (anticore vertex, partner) and the peeled graph, which is
    KE with empty anticore; remaining vertices keep their relative order.
    """
    if not is_koenig_egervary(g):
        raise GraphError("peel requires a Koenig-Egervary graph")
    fam = maximum_stable_sets(g)
    rep = core_report(fam)
    if rep.anticore_size != 1:
        raise GraphError(f"peel requires anticore size 1, got {rep.anticore_size}")
    if fam.alpha != matching_number(g):
        raise GraphError("peel requires equal stability and matching numbers")
    (x,) = rep.anticore
    partner = partner_map(maximum_matching(g))
    y = partner[x]
    keep = [v for v in g.vertices() if v not in (x, y)]
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u not in (x, y) and v not in (x, y)
    ]
    return (x, y), Graph(g.n - 2, edges)


def bullet_kp(g: Graph, p: int, attach: Edge | int) -> Graph:
    """Glue a p-clique onto an edge-addition-stable bipartite base.

    For p <= 2 the clique vertex x = g.n is joined to both endpoints of
    attach, which must be an edge lying in a perfect matching of g.  For
    p >= 3 attach names a single base vertex joined to x.  Either way the
    result keeps the stability number one above the base's and stays
    edge-addition stable.
    """
    if p < 1:
        raise GraphError("clique order must be positive")
    if bipartition(g) is None:
        raise GraphError("bullet base must be bipartite")
    if classify_alpha_plus(g).kind == "not_stable":
        raise GraphError("bullet base must be edge-addition stable")
    x = g.n
    clique = [(x + i, x + j) for i in range(p) for j in range(i + 1, p)]
    if p <= 2:
        try:
            a, b = attach  # type: ignore[misc]
        except TypeError:
            raise GraphError("for p <= 2, attach must be an edge (a, b)") from None
        a, b = int(a), int(b)
        if not g.has_edge(a, b):
            raise GraphError(f"attach pair ({a}, {b}) is not an edge of the base")
        keep = [v for v in g.vertices() if v not in (a, b)]
        sub_edges = [e for e in g.edges if a not in e and b not in e]
        relabel = {old: new for new, old in enumerate(keep)}
        reduced = Graph(len(keep), [(relabel[u], relabel[v]) for u, v in sub_edges])
        if matching_number(reduced) * 2 != reduced.n:
            raise GraphError(
                f"attach edge ({a}, {b}) lies in no perfect matching of the base"
            )
        cross = [(x, a), (x, b)]
    else:
        if not isinstance(attach, int):
            raise GraphError("for p >= 3, attach must be a single base vertex")
        g.check_vertex(attach)
        cross = [(x, attach)]
    edges = list(g.edges) + clique + [(u, v) for u, v in cross]
    return Graph(g.n + p, edges)


def non_ke_alpha_plus_family(n: int, variant: int) -> Graph:
    """Edge-addition-stable non-KE graphs of any order n >= 5.

    variant 1: a pendant vertex attached to one vertex of K_{n-1}; the core
    is exactly the pendant.  variant 0: a p-clique (p = n - 2 >= 3) glued to
    one endpoint of a single edge; the core is empty.
    """
    if n < 5:
        raise GraphError("the family starts at order 5")
    if variant not in (0, 1):
        raise GraphError("variant must be 0 or 1")
    if variant == 1:
        clique = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
        return Graph(n, clique + [(0, 1)])
    return bullet_kp(Graph(2, [(0, 1)]), n - 2, 0)


# -- figure fixtures -----------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    """A named graph with its externally pinned expectations, stated as a
    partial view of the analysis report's JSON form."""

    name: str
    graph: Graph
    expected: dict


def _fixture_graphs() -> list[tuple[str, Graph, dict]]:
    k4_minus_e = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    seven = Graph(7, [(0, 1), (1, 2), (2, 3), (4, 5), (1, 4), (1, 5), (2, 6)])
    # 0..2 top row, 3..5 bottom row, 6..7 the right tail; the unique five
    # cycle is 1-4-5-6-2
    blossom8 = Graph(
        8,
        [(0, 1), (1, 2), (3, 4), (4, 5), (1, 4), (2, 6), (5, 6), (6, 7)],
    )
    # 0..3 top row, 4..7 bottom row
    nonstable8 = Graph(
        8,
        [
            (0, 1), (1, 2), (2, 3),
            (4, 5), (5, 6), (6, 7),
            (4, 1), (5, 2), (6, 3),
            (0, 5), (1, 6), (2, 7),
            (1, 5), (2, 6),
        ],
    )
    # 0..2 bottom row, 3..5 top row, 6..7 the tail pair
    g1 = Graph(
        8,
        [
            (6, 7),
            (1, 4), (2, 5),
            (2, 6), (5, 6),
            (0, 4), (1, 3),
            (0, 5), (2, 3),
            (1, 5), (2, 4),
        ],
    )
    # 0..3 bottom path, 4..5 top pair; triangle 1-2-5
    g2 = Graph(6, [(0, 1), (1, 2), (2, 3), (4, 5), (1, 5), (2, 5)])
    # 0..3 bottom row, 4..7 top row; core {0, 4}, anticore {1, 2}
    non_ke8 = Graph(
        8,
        [
            (0, 1), (1, 2), (2, 3),
            (5, 6), (6, 7),
            (1, 4), (2, 5),
            (2, 6), (3, 5),
            (2, 7), (3, 7),
        ],
    )
    p3 = path(3)
    return [
        (
            "fig1_k4_minus_e",
            k4_minus_e,
            {
                "alpha": 2, "mu": 2, "is_ke": True, "has_pm": True,
                "core": [2, 3], "anticore": [0, 1],
                "core_size": 2, "anticore_size": 2,
                "stability_class": "not_stable", "blossom_free": False,
            },
        ),
        (
            "fig1_seven",
            seven,
            {"alpha": 4, "mu": 3, "is_ke": True, "has_pm": False},
        ),
        (
            "fig2_blossom",
            blossom8,
            {"alpha": 5, "mu": 3, "is_ke": True, "has_pm": False},
        ),
        (
            "fig3_nonstable",
            nonstable8,
            {
                "alpha": 4, "mu": 4, "is_ke": True, "has_pm": True,
                "stability_class": "not_stable", "blossom_free": False,
            },
        ),
        (
            "fig4_g1",
            g1,
            {
                "alpha": 4, "mu": 4, "is_ke": True, "has_pm": True,
                "core": [7], "anticore": [6],
                "core_size": 1, "anticore_size": 1,
                "stability_class": "alpha1_plus", "bipartite": False,
            },
        ),
        (
            "fig4_g2",
            g2,
            {
                "alpha": 3, "mu": 3, "is_ke": True, "has_pm": True,
                "core_size": 0, "anticore_size": 0,
                "stability_class": "alpha0_plus", "bipartite": False,
                "blossom_free": True,
            },
        ),
        (
            "fig5_non_ke",
            non_ke8,
            {
                "alpha": 4, "mu": 3, "is_ke": False, "has_pm": False,
                "core": [0, 4], "anticore": [1, 2],
                "core_size": 2, "anticore_size": 2,
            },
        ),
        (
            "p3",
            p3,
            {
                "alpha": 2, "mu": 1, "is_ke": True, "has_pm": False,
                "core": [0, 2], "anticore": [1],
                "core_size": 2, "anticore_size": 1,
                "stability_class": "not_stable",
            },
        ),
    ]


def fixtures() -> tuple[Fixture, ...]:
    """All named fixtures, in a fixed order."""
    return tuple(Fixture(name, g, expected) for name, g, expected in _fixture_graphs())


def fixture_by_name(name: str) -> Fixture:
    for f in fixtures():
        if f.name == name:
            return f
    raise KeyError(f"unknown fixture {name!r}")


def fixture_mismatches(f: Fixture, report: AnalysisReport) -> list[str]:
    """Expected-versus-computed discrepancies for one fixture, empty when
    the pinned values are reproduced exactly."""
    doc = report.to_json_dict()
    out = []
    for key, want in sorted(f.expected.items()):
        if key == "stability_class":
            got = doc["stability"]["class"]
        elif key == "bipartite":
            got = bipartition(f.graph) is not None
        else:
            got = doc[key]
        if got != want:
            out.append(f"{f.name}: {key} expected {want!r}, got {got!r}")
    return out


# matchings referenced by the figure discussions, 0-based
FIG2_M1: frozenset[Edge] = frozenset({(4, 5), (1, 2), (6, 7)})
FIG2_M2: frozenset[Edge] = frozenset({(0, 1), (3, 4), (6, 7)})
FIG3_PM: frozenset[Edge] = frozenset({(0, 1), (2, 3), (4, 5), (6, 7)})


# -- deterministic generators --------------------------------------------------


def path(n: int) -> Graph:
    if n < 0:
        raise GraphError("path order must be nonnegative")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle order must be at least 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("complete-graph order must be nonnegative")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise GraphError("side sizes must be nonnegative")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    if n < 0 or not 0.0 <= edge_prob <= 1.0:
        raise GraphError("need n >= 0 and edge probability in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph(n, edges)


def random_connected_graph(
    n: int, edge_prob: float, seed: int, max_tries: int = 10_000
) -> Graph:
    """Rejection-sample random graphs until one is connected."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < edge_prob
        ]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise GraphError(
        f"no connected sample after {max_tries} tries (n={n}, p={edge_prob})"
    )


def random_tree(n: int, seed: int) -> Graph:
    """Uniform-ish random tree: each vertex i >= 1 hangs off an earlier one."""
    if n < 1:
        raise GraphError("tree order must be positive")
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(n, edges)


def random_bipartite(n1: int, n2: int, edge_prob: float, seed: int) -> Graph:
    if n1 < 0 or n2 < 0 or not 0.0 <= edge_prob <= 1.0:
        raise GraphError("need nonnegative sides and edge probability in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (i, n1 + j)
        for i in range(n1)
        for j in range(n2)
        if rng.random() < edge_prob
    ]
    return Graph(n1 + n2, edges)


def random_bipartite_with_pm(n_side: int, extra_prob: float, seed: int) -> Graph:
    """Balanced bipartite graph with a guaranteed perfect matching: seed the
    matching i <-> n_side + i, then sprinkle extra cross edges."""
    if n_side < 1 or not 0.0 <= extra_prob <= 1.0:
        raise GraphError("need a positive side size and probability in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, n_side + i) for i in range(n_side)]
    for i in range(n_side):
        for j in range(n_side):
            if i != j and rng.random() < extra_prob:
                edges.append((i, n_side + j))
    return Graph(2 * n_side, edges)


GENERATOR_NAMES: tuple[str, ...] = (
    "path",
    "cycle",
    "complete",
    "complete-bipartite",
    "random-graph",
    "random-connected",
    "random-tree",
    "random-bipartite",
    "random-bipartite-pm",
)
