"""Exact stability-number machinery.

The stability number comes from a bitmask branch-and-bound; the full
family of maximum stable sets from a pruned depth-first enumeration over
vertices in ascending order.  Both refuse inputs above the configured
caps.  The certificate check and the matching-driven extension replace
enumeration for Koenig-Egervary inputs: a stable set is maximum exactly
when it contains every exposed vertex and one endpoint of each heavy
edge, and in the blossom-free perfect-matching case any excluded vertex
can be pulled into a maximum stable set by alternating saturation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import Edge, Graph, GraphError, normalize_edge
from .limits import DEFAULT_ALPHA_CAP, DEFAULT_OMEGA_CAP, check_cap
from .matching import (
    exposed_vertices,
    matching_number,
    partner_map,
    validate_matching,
)


def stability_number(g: Graph, cap: int | None = None) -> int:
    """Size of a largest stable set."""
    check_cap(g.n, cap, DEFAULT_ALPHA_CAP, "stability number")
    return _alpha_mask(g, g.full_mask)


def _alpha_mask(g: Graph, mask: int) -> int:
    masks = g._masks  # noqa: SLF001 - hot path inside the package
    best = 0

    def rec(mask: int, size: int) -> None:
        nonlocal best
        while True:
            if mask == 0:
                if size > best:
                    best = size
                return
            if size + mask.bit_count() <= best:
                return
            # pivot: highest degree inside the mask, lowest id on ties
            pivot = -1
            pivot_deg = -1
            rest = mask
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                d = (masks[v] & mask).bit_count()
                if d > pivot_deg:
                    pivot_deg = d
                    pivot = v
            if pivot_deg == 0:
                total = size + mask.bit_count()
                if total > best:
                    best = total
                return
            take = mask & ~(masks[pivot] | (1 << pivot))
            rec(take, size + 1)
            mask ^= 1 << pivot  # and loop: pivot excluded

    rec(mask, 0)
    return best


@dataclass(frozen=True)
class StableSetFamily:
    """The complete family of maximum stable sets of one graph."""

    n: int
    alpha: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.sets:
            raise GraphError("a stable-set family cannot be empty")
        for s in self.sets:
            if len(s) != self.alpha:
                raise GraphError("family member size differs from alpha")

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def maximum_stable_sets(g: Graph, cap: int | None = None) -> StableSetFamily:
    """Enumerate every maximum stable set, in lexicographic order."""
    check_cap(g.n, cap, DEFAULT_OMEGA_CAP, "maximum-stable-set enumeration")
    n = g.n
    alpha = _alpha_mask(g, g.full_mask)
    masks = g._masks  # noqa: SLF001
    out: list[int] = []

    def rec(v: int, chosen: int, banned: int, size: int) -> None:
        if size + (n - v) < alpha:
            return
        if v == n:
            if size == alpha:
                out.append(chosen)
            return
        if not banned >> v & 1:
            rec(v + 1, chosen | 1 << v, banned | masks[v], size + 1)
        rec(v + 1, chosen, banned, size)

    rec(0, 0, 0, 0)
    sets = sorted(
        (frozenset(u for u in range(n) if chosen >> u & 1) for chosen in out),
        key=sorted,
    )
    return StableSetFamily(n=n, alpha=alpha, sets=tuple(sets))


@dataclass(frozen=True)
class CoreReport:
    """Intersection of all maximum stable sets (core) and of all their
    complements (anticore)."""

    core: frozenset[int]
    anticore: frozenset[int]

    @property
    def core_size(self) -> int:
        return len(self.core)

    @property
    def anticore_size(self) -> int:
        return len(self.anticore)


def core_report(fam: StableSetFamily) -> CoreReport:
    full = frozenset(range(fam.n))
    core = full
    anticore = full
    for s in fam.sets:
        core &= s
        anticore &= full - s
    if core & anticore:
        raise GraphError("core and anticore overlap; family is inconsistent")
    return CoreReport(core=core, anticore=anticore)


class Certification(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:  # noqa: D105
        return self.ok


def certify_max_stable(g: Graph, m: Iterable[Edge], s: Iterable[int]) -> Certification:
    """Certify a stable set as maximum without enumerating the family.

    Requires a Koenig-Egervary graph and a maximum matching; then s is a
    maximum stable set exactly when it contains every exposed vertex and
    exactly one endpoint of every heavy edge.  A failed certificate comes
    back with the first offending witness.
    """
    m = validate_matching(g, m)
    mu = matching_number(g)
    if len(m) != mu:
        raise GraphError(f"matching of size {len(m)} is not maximum ({mu})")
    alpha = stability_number(g)
    if alpha + mu != g.n:
        raise GraphError(
            f"certificate requires a Koenig-Egervary graph; got alpha={alpha}, "
            f"mu={mu}, n={g.n}"
        )
    s = g.check_vertex_set(s)
    for u, v in g.edges:
        if u in s and v in s:
            return Certification(False, f"not stable: edge ({u}, {v}) inside the set")
    for v in sorted(exposed_vertices(g, m)):
        if v not in s:
            return Certification(False, f"exposed vertex {v} missing from the set")
    for u, v in sorted(m):
        hits = (u in s) + (v in s)
        if hits != 1:
            word = "neither endpoint" if hits == 0 else "both endpoints"
            return Certification(
                False, f"heavy edge ({u}, {v}) has {word} in the set"
            )
    return Certification(True, None)


class ExtensionBlockedError(GraphError):
    """The alternating saturation closed a blossom: an edge appeared inside
    the matched image, so the input graph was not blossom-free."""


def extend_stable_through_matching(
    g: Graph, m: Iterable[Edge], s: Iterable[int], b: int
) -> frozenset[int]:
    """Build a maximum stable set containing b from one that excludes it.

    Requires a blossom-free Koenig-Egervary graph with the perfect matching
    m and a maximum stable set s.  Saturates alternately: neighbors of the
    growing matched image inside s, then their matching partners, until no
    new vertices appear; the result swaps the saturated part of s for its
    partner set.  The output is certified before it is returned.
    """
    m = validate_matching(g, m)
    if exposed_vertices(g, m):
        raise GraphError("extension requires a perfect matching")
    s = g.check_vertex_set(s)
    cert = certify_max_stable(g, m, s)
    if not cert:
        raise GraphError(f"s is not a maximum stable set: {cert.reason}")
    g.check_vertex(b)
    if b in s:
        raise GraphError(f"vertex {b} is already in the stable set")

    partner = partner_map(m)
    a_frontier = frozenset(g.neighbors(b)) & s
    if not a_frontier:
        # impossible for a maximum s: b would extend it
        raise GraphError(f"vertex {b} has no neighbor in the stable set")
    a_all: set[int] = set()
    b_all: set[int] = set()
    while a_frontier:
        a_all |= a_frontier
        b_frontier = {partner[a] for a in a_frontier}
        b_all |= b_frontier
        reached: set[int] = set()
        for w in b_frontier:
            reached.update(g.neighbors(w))
        a_frontier = frozenset((reached & s) - a_all)

    b_mask = _as_mask(b_all)
    for u in sorted(b_all):
        hit = g.adjacency_mask(u) & b_mask
        if hit:
            v = (hit & -hit).bit_length() - 1
            raise ExtensionBlockedError(
                f"edge ({min(u, v)}, {max(u, v)}) closed an odd alternating "
                "cycle; the graph is not blossom-free for this matching"
            )

    rest = s - a_all
    # the stated stop condition and the saturation fixpoint must coincide
    for w in b_all:
        if frozenset(g.neighbors(w)) & rest:
            raise AssertionError("saturation stopped before the cut emptied")
    result = frozenset(b_all) | rest
    assert b in result
    cert = certify_max_stable(g, m, result)
    if not cert:
        raise AssertionError(f"extension produced a non-maximum set: {cert.reason}")
    return result


def _as_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def stability_after_adding_edge(
    g: Graph, e: Edge, cap: int | None = None
) -> int:
    """Stability number of the graph with one extra edge."""
    u, v = normalize_edge(int(e[0]), int(e[1]))
    return stability_number(g.with_edge(u, v), cap=cap)
