"""Edge-colored multigraph model for gem-encoded PL manifolds.

A gem is a properly edge-colored multigraph with colors 0..d that is
regular with respect to the last color: colors 0..d-1 are perfect
matchings on the vertex set, while color d may be a partial matching.
Vertices unmatched in color d are boundary vertices.  All invariants in
this package (residue censuses, boundary graphs, face vectors) are
derived from this data by exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GemError(ValueError):
    """Raised for structurally invalid gems or bad operation inputs."""


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by size."""

    def __init__(self, n: int):
        self._parent = list(range(n))
        self._size = [1] * n

    def find(self, v: int) -> int:
        root = v
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[v] != root:
            self._parent[v], v = root, self._parent[v]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]


class ColoredGraph:
    """Immutable (d+1)-edge-colored multigraph, regular w.r.t. color d.

    Vertices are 1..n.  Each color is a fixed-point-free partial pairing
    stored as an involution array; colors 0..d-1 must pair every vertex.
    Parallel edges between the same two vertices are allowed as long as
    their colors differ (which the matching representation guarantees).
    """

    __slots__ = ("dimension", "vertex_count", "_mates")

    def __init__(self, dimension, vertex_count, pairs_by_color):
        if dimension < 1:
            raise GemError("dimension must be a positive integer")
        if vertex_count < 1:
            raise GemError("vertex count must be positive")
        pairs_by_color = [list(p) for p in pairs_by_color]
        if len(pairs_by_color) != dimension + 1:
            raise GemError(
                f"expected {dimension + 1} colors, got {len(pairs_by_color)}"
            )
        n = vertex_count
        mates = []
        for color, pairs in enumerate(pairs_by_color):
            mate = [0] * (n + 1)
            for a, b in pairs:
                if not (1 <= a <= n and 1 <= b <= n):
                    raise GemError(
                        f"color {color}: vertex out of range in pair {a}-{b}"
                    )
                if a == b:
                    raise GemError(f"color {color}: loop at vertex {a}")
                if mate[a] or mate[b]:
                    dup = a if mate[a] else b
                    raise GemError(
                        f"color {color}: vertex {dup} paired more than once"
                    )
                mate[a], mate[b] = b, a
            if color < dimension and len(pairs) * 2 != n:
                raise GemError(f"color {color} not a total pairing")
            mates.append(tuple(mate))
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "_mates", tuple(mates))

    def __setattr__(self, name, value):
        raise AttributeError("ColoredGraph is immutable")

    # -- basic accessors -------------------------------------------------

    @property
    def colors(self) -> range:
        return range(self.dimension + 1)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def mate(self, vertex: int, color: int) -> int | None:
        """The other endpoint of `vertex`'s edge of `color`, or None."""
        m = self._mates[color][vertex]
        return m if m else None

    def edges(self, color: int) -> list[tuple[int, int]]:
        """Edges of one color as (smaller, larger) pairs, sorted."""
        mate = self._mates[color]
        return [(v, mate[v]) for v in self.vertices if v < mate[v]]

    def all_edges(self) -> list[tuple[int, int, int]]:
        """All edges as (smaller, larger, color) triples."""
        return [
            (a, b, c) for c in self.colors for (a, b) in self.edges(c)
        ]

    def boundary_vertices(self) -> list[int]:
        mate = self._mates[self.dimension]
        return [v for v in self.vertices if not mate[v]]

    def is_closed(self) -> bool:
        return not self.boundary_vertices()

    def vertex_tally(self) -> "VertexTally":
        boundary = len(self.boundary_vertices())
        return VertexTally(
            total=self.vertex_count,
            boundary=boundary,
            internal=self.vertex_count - boundary,
        )

    def degree(self, vertex: int) -> int:
        return sum(1 for c in self.colors if self._mates[c][vertex])

    # -- equality / hashing ----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ColoredGraph)
            and self.dimension == other.dimension
            and self.vertex_count == other.vertex_count
            and self._mates == other._mates
        )

    def __hash__(self):
        return hash((self.dimension, self.vertex_count, self._mates))

    def __repr__(self):
        return (
            f"ColoredGraph(d={self.dimension}, n={self.vertex_count}, "
            f"edges={sum(len(self.edges(c)) for c in self.colors)})"
        )

    # -- structural predicates ---------------------------------------------

    def is_connected(self) -> bool:
        return len(_components(self, self.colors)) == 1

    def is_bipartite(self) -> bool:
        """Two-colorability, checked by BFS over every edge."""
        side = [0] * (self.vertex_count + 1)
        for start in self.vertices:
            if side[start]:
                continue
            side[start] = 1
            queue = [start]
            while queue:
                v = queue.pop()
                for c in self.colors:
                    w = self._mates[c][v]
                    if not w:
                        continue
                    if not side[w]:
                        side[w] = -side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return False
        return True

    def is_contracted(self) -> bool:
        """True iff dropping any single color leaves the graph connected."""
        full = set(self.colors)
        return all(
            len(_components(self, full - {c})) == 1 for c in self.colors
        )


@dataclass(frozen=True)
class VertexTally:
    """Vertex counts: total = boundary + internal, all even for gems."""

    total: int
    boundary: int
    internal: int

    @property
    def p(self) -> int:
        return self.total // 2

    @property
    def p_bar(self) -> int:
        return self.boundary // 2

    @property
    def p_dot(self) -> int:
        return self.internal // 2


@dataclass(frozen=True)
class ResidueComponent:
    """One connected component of a residue subgraph.

    `regular` means every vertex of the component meets an edge of every
    color in the residue's color set.
    """

    vertices: tuple[int, ...]
    regular: bool


def _components(g: ColoredGraph, colors) -> list[list[int]]:
    uf = UnionFind(g.vertex_count + 1)
    for c in colors:
        mates = g._mates[c]
        for v in g.vertices:
            if mates[v]:
                uf.union(v, mates[v])
    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(groups.values(), key=lambda comp: comp[0])


def residue_components(g: ColoredGraph, colors) -> list[ResidueComponent]:
    """Connected components of the subgraph with edge colors in `colors`.

    Components are ordered by smallest vertex; each is flagged regular
    iff all its vertices meet every color of the set.
    """
    colorset = frozenset(colors)
    if not colorset:
        raise GemError("residue color set must be nonempty")
    if not colorset <= set(g.colors):
        raise GemError(f"colors {sorted(colorset)} out of range 0..{g.dimension}")
    out = []
    for comp in _components(g, colorset):
        regular = all(
            g._mates[c][v] for v in comp for c in colorset
        )
        out.append(ResidueComponent(vertices=tuple(comp), regular=regular))
    return out


@dataclass(frozen=True)
class BoundaryGraph:
    """The d-colored graph induced on the boundary vertices of a parent.

    Vertices are renumbered 1..2p_bar in increasing parent order;
    `parent_vertices[i-1]` is the parent vertex behind vertex i.  A
    color-j edge joins two vertices iff the parent joins them by an
    alternating path of j- and d-colored edges.  `components` lists the
    connected components (tuples of boundary-graph vertices).
    """

    graph: ColoredGraph | None
    parent_vertices: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    def is_empty(self) -> bool:
        return self.graph is None

    def component_count(self) -> int:
        return len(self.components)

    def component_subgraph(self, index: int) -> ColoredGraph:
        """A component as a standalone closed gem of dimension d-1."""
        comp = self.components[index]
        relabel = {v: i + 1 for i, v in enumerate(comp)}
        bg = self.graph
        pairs = [
            [
                (relabel[a], relabel[b])
                for (a, b) in bg.edges(c)
                if a in relabel
            ]
            for c in bg.colors
        ]
        return ColoredGraph(bg.dimension, len(comp), pairs)


def boundary_graph(g: ColoredGraph) -> BoundaryGraph:
    """Extract the boundary graph; empty result for closed gems."""
    boundary = g.boundary_vertices()
    if not boundary:
        return BoundaryGraph(graph=None, parent_vertices=(), components=())
    d = g.dimension
    index = {v: i + 1 for i, v in enumerate(boundary)}
    pairs_by_color: list[list[tuple[int, int]]] = [[] for _ in range(d)]
    for v in boundary:
        for j in range(d):
            cur = g.mate(v, j)
            steps = 0
            while g.mate(cur, d) is not None:
                cur = g.mate(g.mate(cur, d), j)
                steps += 1
                if steps > g.vertex_count:
                    raise GemError(
                        f"alternating ({j},{d})-path from vertex {v} "
                        "does not reach a boundary vertex"
                    )
            if v < cur:
                pairs_by_color[j].append((index[v], index[cur]))
            elif v == cur:
                raise GemError(
                    f"alternating ({j},{d})-path from vertex {v} returns "
                    "to its start"
                )
    bg = ColoredGraph(d - 1, len(boundary), pairs_by_color)
    comps = tuple(
        tuple(comp) for comp in _components(bg, bg.colors)
    )
    return BoundaryGraph(
        graph=bg, parent_vertices=tuple(boundary), components=comps
    )


@dataclass(frozen=True)
class ResidueCensus:
    """Component counts over every nonempty color subset.

    `g[B]` counts connected components of the residue with colors B;
    `g_dot[B]` counts the regular ones.  For gems with boundary,
    `boundary_g[{i,j}]` counts {i,j}-cycles of the extracted boundary
    graph and `component_boundary_g[q]` the same per boundary component.
    """

    dimension: int
    g: dict[frozenset, int]
    g_dot: dict[frozenset, int]
    boundary_g: dict[frozenset, int]
    component_boundary_g: tuple[dict[frozenset, int], ...]
    tally: VertexTally

    def g_of(self, *colors: int) -> int:
        return self.g[frozenset(colors)]

    def g_dot_of(self, *colors: int) -> int:
        return self.g_dot[frozenset(colors)]

    def boundary_g_of(self, i: int, j: int) -> int:
        return self.boundary_g.get(frozenset((i, j)), 0)


def census(g: ColoredGraph) -> ResidueCensus:
    """Full residue census, with boundary counts from the boundary graph.

    Boundary counts are computed on the extracted boundary graph rather
    than inferred from parent counts, so census identities relating the
    two remain genuine cross-checks.
    """
    counts: dict[frozenset, int] = {}
    regular_counts: dict[frozenset, int] = {}
    all_colors = list(g.colors)
    for size in range(1, len(all_colors) + 1):
        for subset in itertools.combinations(all_colors, size):
            comps = residue_components(g, subset)
            key = frozenset(subset)
            counts[key] = len(comps)
            regular_counts[key] = sum(1 for c in comps if c.regular)
    boundary_g: dict[frozenset, int] = {}
    per_component: list[dict[frozenset, int]] = []
    bg = boundary_graph(g)
    if not bg.is_empty():
        for i, j in itertools.combinations(range(g.dimension), 2):
            comps = residue_components(bg.graph, (i, j))
            boundary_g[frozenset((i, j))] = len(comps)
        for q in range(bg.component_count()):
            sub = bg.component_subgraph(q)
            per_q = {}
            for i, j in itertools.combinations(range(g.dimension), 2):
                per_q[frozenset((i, j))] = len(residue_components(sub, (i, j)))
            per_component.append(per_q)
    return ResidueCensus(
        dimension=g.dimension,
        g=counts,
        g_dot=regular_counts,
        boundary_g=boundary_g,
        component_boundary_g=tuple(per_component),
        tally=g.vertex_tally(),
    )


@dataclass(frozen=True)
class FaceVector:
    """Face counts of the induced simplicial cell complex.

    f[k] is the number of k-simplices; a k-simplex with vertex labels B
    corresponds to a connected component of the residue on the
    complementary colors, so all counts come from component censuses and
    the complex itself is never materialized.
    """

    f: tuple[int, ...]
    euler_characteristic: int


def face_vector(g: ColoredGraph) -> FaceVector:
    d = g.dimension
    all_colors = set(g.colors)
    f = []
    for k in range(d + 1):
        total = 0
        for labels in itertools.combinations(sorted(all_colors), k + 1):
            rest = all_colors - set(labels)
            if rest:
                total += len(residue_components(g, rest))
            else:
                total += g.vertex_count
        f.append(total)
    chi = sum((-1) ** k * fk for k, fk in enumerate(f))
    return FaceVector(f=tuple(f), euler_characteristic=chi)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome flags of the structural gem checks.

    Construction already guarantees well-formed involutions, totality of
    colors 0..d-1 and proper coloring, so those flags are always true on
    live graphs; they are kept so a report is self-describing.
    """

    involutions_ok: bool
    regular_wrt_last_color: bool
    proper_coloring: bool
    connected: bool
    bipartite: bool
    contracted: bool
    contracted_per_color: tuple[bool, ...]
    closed: bool
    boundary_component_count: int
    is_crystallization: bool
    f0: int

    @property
    def h(self) -> int:
        """Number of boundary components (0 for closed gems)."""
        return self.boundary_component_count


def validate(g: ColoredGraph) -> ValidationReport:
    """Check connectivity, orientability proxy and crystallization counts.

    A graph is flagged as a crystallization with h >= 1 boundary
    components when the complement of each color c < d has exactly h
    components, the complement of color d is connected, and the induced
    complex has d*h + 1 labeled vertices; a closed graph qualifies with
    d + 1 labeled vertices (equivalently: it is contracted).
    """
    d = g.dimension
    full = set(g.colors)
    per_color = tuple(
        len(_components(g, full - {c})) == 1 for c in g.colors
    )
    connected = g.is_connected()
    bg = boundary_graph(g)
    h = bg.component_count()
    fv = face_vector(g)
    if g.is_closed():
        crystal = connected and fv.f[0] == d + 1
    else:
        hat_counts_ok = all(
            len(_components(g, full - {c})) == h for c in range(d)
        )
        crystal = (
            connected
            and len(_components(g, full - {d})) == 1
            and hat_counts_ok
            and fv.f[0] == d * h + 1
        )
    return ValidationReport(
        involutions_ok=True,
        regular_wrt_last_color=True,
        proper_coloring=True,
        connected=connected,
        bipartite=g.is_bipartite(),
        contracted=all(per_color),
        contracted_per_color=per_color,
        closed=g.is_closed(),
        boundary_component_count=h,
        is_crystallization=crystal,
        f0=fv.f[0],
    )
