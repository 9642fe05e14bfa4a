"""Independent reference implementations used only by the tests.

Everything here deliberately avoids the library's own algorithms:
components come from BFS over explicit adjacency lists (the library
uses union-find), two-colorability from a fresh BFS coloring, and the
face vector is rebuilt from the oracle component counts.  Agreement is
therefore a genuine cross-check, not a tautology.
"""

from __future__ import annotations

import itertools
from collections import deque

from gemkit import ColoredGraph


def adjacency(g: ColoredGraph, colors) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for c in colors:
        for a, b in g.edges(c):
            adj[a].append(b)
            adj[b].append(a)
    return adj


def bfs_components(g: ColoredGraph, colors) -> list[set[int]]:
    adj = adjacency(g, colors)
    seen: set[int] = set()
    out = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        out.append(comp)
    return out


def bfs_component_count(g: ColoredGraph, colors) -> int:
    return len(bfs_components(g, colors))


def bfs_regular_component_count(g: ColoredGraph, colors) -> int:
    colors = list(colors)
    return sum(
        1
        for comp in bfs_components(g, colors)
        if all(g.mate(v, c) is not None for v in comp for c in colors)
    )


def bfs_is_bipartite(g: ColoredGraph) -> bool:
    adj = adjacency(g, g.colors)
    color: dict[int, int] = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def oracle_face_vector(g: ColoredGraph) -> tuple[int, ...]:
    d = g.dimension
    all_colors = set(g.colors)
    f = []
    for k in range(d + 1):
        total = 0
        for labels in itertools.combinations(sorted(all_colors), k + 1):
            rest = all_colors - set(labels)
            if rest:
                total += bfs_component_count(g, rest)
            else:
                total += g.vertex_count
        f.append(total)
    return tuple(f)


def oracle_euler_characteristic(g: ColoredGraph) -> int:
    return sum((-1) ** k * fk for k, fk in enumerate(oracle_face_vector(g)))
