"""Graph constructions: doubling, dipole moves, connected sums, products.

All constructions are pure: they take immutable graphs and return new
immutable graphs, so any of them may run concurrently on shared inputs.
After vertex deletions, indices are compacted to 1..n preserving
relative order, which keeps file exports stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import ColoredGraph, GemError, census, residue_components, validate


@dataclass(frozen=True)
class DoubleProvenance:
    """Where each vertex of a doubled graph came from.

    `origin[v]` is a (copy, original_vertex) pair with copy in {1, 2}.
    """

    origin: tuple[tuple[int, int], ...]

    def vertex_of(self, copy: int, original: int) -> int:
        return self.origin.index((copy, original)) + 1


def double(g: ColoredGraph) -> tuple[ColoredGraph, DoubleProvenance]:
    """Join two copies of a gem along their boundary.

    Copy 1 keeps the original vertex numbers; copy 2 is shifted by n.
    Each boundary vertex gains one new edge of the last color to its
    twin, so the result is closed with 2n vertices.
    """
    if g.is_closed():
        raise GemError("double requires a gem with nonempty boundary")
    n = g.vertex_count
    d = g.dimension
    pairs_by_color = []
    for c in g.colors:
        pairs = list(g.edges(c))
        pairs.extend((a + n, b + n) for a, b in g.edges(c))
        pairs_by_color.append(pairs)
    for v in g.boundary_vertices():
        pairs_by_color[d].append((v, v + n))
    doubled = ColoredGraph(d, 2 * n, pairs_by_color)
    origin = tuple(
        (1, v) for v in g.vertices
    ) + tuple((2, v) for v in g.vertices)
    return doubled, DoubleProvenance(origin=origin)


@dataclass(frozen=True)
class Dipole:
    """A color-c edge whose endpoints lie in different components of the
    residue on the remaining colors (a 1-dipole).  The separation
    certificate is re-verified against the graph before removal."""

    u: int
    v: int
    color: int

    def verify(self, g: ColoredGraph) -> bool:
        if not (1 <= self.u <= g.vertex_count and 1 <= self.v <= g.vertex_count):
            return False
        if self.u == self.v or g.mate(self.u, self.color) != self.v:
            return False
        # a 1-dipole is joined by exactly one edge
        for c in g.colors:
            if c != self.color and g.mate(self.u, c) == self.v:
                return False
        rest = set(g.colors) - {self.color}
        for comp in residue_components(g, rest):
            if self.u in comp.vertices:
                return self.v not in comp.vertices
        raise AssertionError("unreachable")


def find_one_dipoles(g: ColoredGraph, color: int) -> list[Dipole]:
    """All 1-dipoles of one color, ordered by smaller endpoint."""
    if color not in g.colors:
        raise GemError(f"color {color} out of range 0..{g.dimension}")
    rest = set(g.colors) - {color}
    comp_of = {}
    for idx, comp in enumerate(residue_components(g, rest)):
        for v in comp.vertices:
            comp_of[v] = idx
    out = []
    for a, b in g.edges(color):
        if comp_of[a] != comp_of[b] and all(
            g.mate(a, c) != b for c in g.colors if c != color
        ):
            out.append(Dipole(u=a, v=b, color=color))
    return out


def remove_one_dipole(g: ColoredGraph, dipole: Dipole) -> ColoredGraph:
    """Cancel a 1-dipole: drop its two vertices and weld the loose edges.

    For every color other than the dipole's, the two edges that left the
    removed vertices are fused into one.  The face-vector Euler
    characteristic and the represented manifold are unchanged.
    """
    if not dipole.verify(g):
        raise GemError(f"stale dipole {dipole}: certificate fails")
    u, v, dc = dipole.u, dipole.v, dipole.color
    keep = [w for w in g.vertices if w not in (u, v)]
    relabel = {w: i + 1 for i, w in enumerate(keep)}
    pairs_by_color = []
    for c in g.colors:
        pairs = [
            (relabel[a], relabel[b])
            for a, b in g.edges(c)
            if a not in (u, v) and b not in (u, v)
        ]
        if c != dc:
            a, b = g.mate(u, c), g.mate(v, c)
            if a is not None and b is not None:
                pairs.append((relabel[a], relabel[b]))
            # if only one side is matched (possible for the last color),
            # that endpoint simply becomes a boundary vertex
        pairs_by_color.append(pairs)
    return ColoredGraph(g.dimension, g.vertex_count - 2, pairs_by_color)


def crystallize_double(g: ColoredGraph) -> ColoredGraph:
    """Closed crystallization of the double of a bounded crystallization.

    Builds the double, then cancels h-1 1-dipoles of each color below
    the last and a single 1-dipole of the last color, always taking the
    first available dipole so outputs are reproducible.  The residue
    censuses of the result are checked against the double's.
    """
    report = validate(g)
    if not report.is_crystallization or report.h < 1:
        raise GemError(
            "crystallize_double requires a crystallization with boundary"
        )
    h = report.h
    d = g.dimension
    doubled, _ = double(g)
    doubled_census = census(doubled)
    out = doubled
    for color in range(d):
        for step in range(h - 1):
            dipoles = find_one_dipoles(out, color)
            if not dipoles:
                raise GemError(
                    f"no 1-dipole of color {color} available at step {step}"
                )
            out = remove_one_dipole(out, dipoles[0])
    dipoles = find_one_dipoles(out, d)
    if not dipoles:
        raise GemError(f"no 1-dipole of color {d} available")
    out = remove_one_dipole(out, dipoles[0])
    final = validate(out)
    if not (final.closed and final.is_crystallization):
        raise GemError("dipole cancellation did not yield a closed "
                       "crystallization")
    if d == 4:
        out_census = census(out)
        for i, j, k in itertools.combinations(range(4), 3):
            if out_census.g_of(i, j, k) != doubled_census.g_of(i, j, k) - h:
                raise GemError(
                    f"census check failed: g_{i}{j}{k} of the contracted "
                    "double is not the doubled count minus h"
                )
        for i, j in itertools.combinations(range(4), 2):
            if out_census.g_of(i, j, 4) != (
                doubled_census.g_of(i, j, 4) - 2 * (h - 1)
            ):
                raise GemError(
                    f"census check failed: g_{i}{j}4 of the contracted "
                    "double is not the doubled count minus 2(h-1)"
                )
    return out


def connected_sum(
    g1: ColoredGraph,
    v1: int,
    g2: ColoredGraph,
    v2: int,
    allow_boundary_vertices: bool = False,
) -> ColoredGraph:
    """Graph connected sum: delete v1, v2 and splice edges color by color.

    By default both vertices must be internal; the weaker per-color
    condition (it suffices that, for each color, one of the two deleted
    simplices' correspondingly labeled vertices avoids the boundary) can
    be opted into with `allow_boundary_vertices`, in which case only the
    color-degree match is enforced.
    """
    if g1.dimension != g2.dimension:
        raise GemError("connected sum requires equal dimensions")
    if not (1 <= v1 <= g1.vertex_count) or not (1 <= v2 <= g2.vertex_count):
        raise GemError("summing vertex out of range")
    for c in g1.colors:
        if (g1.mate(v1, c) is None) != (g2.mate(v2, c) is None):
            raise GemError(
                f"color-degree mismatch at summing vertices for color {c}"
            )
    if not allow_boundary_vertices:
        d = g1.dimension
        if g1.mate(v1, d) is None or g2.mate(v2, d) is None:
            raise GemError(
                "summing vertices must be internal "
                "(pass allow_boundary_vertices=True to override)"
            )
    n1 = g1.vertex_count
    relabel1 = {w: (w if w < v1 else w - 1) for w in g1.vertices if w != v1}
    relabel2 = {
        w: n1 - 1 + (w if w < v2 else w - 1)
        for w in g2.vertices
        if w != v2
    }
    pairs_by_color = []
    for c in g1.colors:
        pairs = [
            (relabel1[a], relabel1[b])
            for a, b in g1.edges(c)
            if v1 not in (a, b)
        ]
        pairs.extend(
            (relabel2[a], relabel2[b])
            for a, b in g2.edges(c)
            if v2 not in (a, b)
        )
        a, b = g1.mate(v1, c), g2.mate(v2, c)
        if a is not None:
            pairs.append((relabel1[a], relabel2[b]))
        pairs_by_color.append(pairs)
    return ColoredGraph(g1.dimension, n1 + g2.vertex_count - 2, pairs_by_color)


def sphere_connector_sum(
    g1: ColoredGraph, u: int, g2: ColoredGraph, v: int
) -> ColoredGraph:
    """Connected sum of two gems routed through the built-in 10-vertex
    4-sphere connector at its two designated vertices.

    The two summing vertices must be internal.  The result has
    |V(g1)| + |V(g2)| + 6 vertices.
    """
    from .catalog import catalog_get

    connector = catalog_get("fig1_s4")
    left = connected_sum(g1, u, connector.graph, connector.connector_vertices[0])
    # after compaction, the connector's second designated vertex sits at
    # offset |V(g1)| - 1 + (v2 - 1) with v2 = 2
    middle_vertex = g1.vertex_count - 1 + connector.connector_vertices[1] - 1
    return connected_sum(left, middle_vertex, g2, v)


def interval_product(g3: ColoredGraph) -> ColoredGraph:
    """Crystallization of M x [0,1] from a closed 3-manifold gem.

    Five partial copies of the input are chained: copy m drops the
    edges of one original color, (m-1) mod 4, and recolors its three
    surviving matchings (ascending) onto the color set {0..4} minus
    {(m-1) mod 5, m} (ascending); 2p edges of color c then join copies
    c and c+1 for 0 <= c <= 3.  Every color below 4 becomes a perfect
    matching while copies 0 and 4 stay unmatched in color 4, so they
    carry the two boundary components.
    """
    if g3.dimension != 3:
        raise GemError("interval product is defined for 3-dimensional gems")
    report = validate(g3)
    if not (report.closed and report.is_crystallization):
        raise GemError("interval product requires a closed crystallization")
    c3 = census(g3)
    n = g3.vertex_count
    pair_counts = {
        (i, j): c3.g_of(i, j) for i, j in itertools.combinations(range(4), 2)
    }
    sphere_sum = (
        pair_counts[(0, 1)] + pair_counts[(0, 2)] + pair_counts[(0, 3)]
    )
    complements = [
        (pair_counts[(0, 1)], pair_counts[(2, 3)]),
        (pair_counts[(0, 2)], pair_counts[(1, 3)]),
        (pair_counts[(0, 3)], pair_counts[(1, 2)]),
    ]
    if sphere_sum != 2 + n // 2 or any(a != b for a, b in complements):
        raise GemError(
            "input fails the closed 3-manifold census conditions "
            "(complementary pair counts equal and summing to 2 + n/2)"
        )
    copies = 5
    pairs_by_color: list[list[tuple[int, int]]] = [[] for _ in range(5)]
    for m in range(copies):
        dropped_own = {(m - 1) % copies, m}
        own_colors = [c for c in range(5) if c not in dropped_own]
        dropped_original = (m - 1) % 4
        kept_original = [c for c in range(4) if c != dropped_original]
        offset = m * n
        for original_color, target_color in zip(kept_original, own_colors):
            pairs_by_color[target_color].extend(
                (a + offset, b + offset)
                for a, b in g3.edges(original_color)
            )
    for c in range(4):
        pairs_by_color[c].extend(
            (c * n + r, (c + 1) * n + r) for r in range(1, n + 1)
        )
    product = ColoredGraph(4, copies * n, pairs_by_color)
    # the construction promises a genus realization of twice the sum of
    # two complementary pair counts minus four; check it
    from .genus import rho_epsilon

    expected = 2 * (pair_counts[(0, 1)] + pair_counts[(0, 3)]) - 4
    profile = rho_epsilon(product, (2, 0, 3, 1, 4))
    if profile.rho != expected:
        raise GemError(
            f"interval product genus check failed: rho at scheme "
            f"(2,0,3,1,4) is {profile.rho}, expected {expected}"
        )
    return product
