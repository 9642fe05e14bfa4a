"""Property sweeps over random gems and all catalog/construction gems."""

import itertools
import random

from hypothesis import given, settings, strategies as st

from gemkit import (
    ColoredGraph,
    boundary_graph,
    census,
    export_gem,
    parse_gem,
    rho_epsilon,
    validate,
)
from oracles import bfs_component_count, bfs_regular_component_count


def _matching(vertices: list[int], rng: random.Random) -> list[tuple[int, int]]:
    vs = vertices[:]
    rng.shuffle(vs)
    return [(vs[i], vs[i + 1]) for i in range(0, len(vs) - 1, 2)]


@st.composite
def random_gems(draw, dimension: int = 4):
    """Arbitrary well-formed gems: total random matchings below the last
    color, a random partial matching (possibly empty or total) on it."""
    p = draw(st.integers(min_value=1, max_value=5))
    n = 2 * p
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    rng = random.Random(seed)
    pairs = [_matching(list(range(1, n + 1)), rng) for _ in range(dimension)]
    matched = draw(st.integers(min_value=0, max_value=p))
    last = _matching(list(range(1, n + 1)), rng)[:matched]
    pairs.append(last)
    return ColoredGraph(dimension, n, pairs)


@given(random_gems())
@settings(max_examples=60, deadline=None)
def test_census_matches_oracle(g):
    counts = census(g)
    for size in (1, 2, 3):
        for subset in itertools.combinations(g.colors, size):
            key = frozenset(subset)
            assert counts.g[key] == bfs_component_count(g, subset)
            assert counts.g_dot[key] == bfs_regular_component_count(g, subset)
            assert counts.g[key] >= counts.g_dot[key]


@given(random_gems())
@settings(max_examples=60, deadline=None)
def test_round_trip_identity(g):
    text = export_gem(g)
    assert parse_gem(text) == g
    assert export_gem(parse_gem(text)) == text


@given(random_gems())
@settings(max_examples=60, deadline=None)
def test_regular_equals_total_without_last_color(g):
    counts = census(g)
    for size in (1, 2, 3, 4):
        for subset in itertools.combinations(range(g.dimension), size):
            key = frozenset(subset)
            assert counts.g[key] == counts.g_dot[key]


@given(random_gems())
@settings(max_examples=60, deadline=None)
def test_rho_reversal_invariance(g):
    counts = census(g)
    for head in itertools.permutations(range(4)):
        assert (
            rho_epsilon(g, head + (4,), counts).rho
            == rho_epsilon(g, head[::-1] + (4,), counts).rho
        )


def _internal_vertices(g):
    return [v for v in g.vertices if g.mate(v, g.dimension) is not None]


@st.composite
def random_manifold_gems(draw):
    """Bounded manifold gems: iterated connected sums of a bounded catalog
    gem with closed catalog gems at random internal vertices.  Summing
    with a closed gem is always geometrically valid (every labeled vertex
    of its deleted simplex is interior), so the result still represents a
    manifold with the same boundary."""
    from gemkit import catalog_get, connected_sum, crystallize_double

    closed = [
        catalog_get("fig1_s4").graph,
        catalog_get("s4_order2").graph,
        crystallize_double(catalog_get("fig3_d3xs1").graph),
    ]
    bounded = ["fig2_s3xI", "fig3_d3xs1", "fig4_boundary16", "d4_order2"]
    out = catalog_get(draw(st.sampled_from(bounded))).graph
    for _ in range(draw(st.integers(min_value=0, max_value=2))):
        other = draw(st.sampled_from(closed))
        if not _internal_vertices(out):
            break
        v1 = draw(st.sampled_from(_internal_vertices(out)))
        v2 = draw(st.sampled_from(_internal_vertices(other)))
        out = connected_sum(out, v1, other, v2)
    return out


@given(random_manifold_gems())
@settings(max_examples=60, deadline=None)
def test_boundary_split_identity_on_manifold_gems(g):
    # interior/boundary split of the mixed cycle counts holds on every
    # manifold gem with boundary, crystallization or not
    counts = census(g)
    assert not g.is_closed()
    for i, j in itertools.combinations(range(4), 2):
        assert counts.g_of(i, j, 4) == (
            counts.g_dot_of(i, j, 4) + counts.boundary_g_of(i, j)
        )


@given(random_gems())
@settings(max_examples=60, deadline=None)
def test_boundary_graph_well_formed(g):
    bg = boundary_graph(g)
    if bg.is_empty():
        assert g.is_closed()
        return
    assert bg.graph.vertex_count == len(g.boundary_vertices())
    assert bg.graph.is_closed()
    assert sum(len(c) for c in bg.components) == bg.graph.vertex_count


def test_boundary_identities_on_catalog_and_constructions(
    all_entries, bounded_construction_outputs
):
    """Interior/boundary census split and the summed boundary cycle
    relation on every bounded gem touched by the test run."""
    gems = {
        e.name: e.graph for e in all_entries if not e.graph.is_closed()
    }
    gems.update(bounded_construction_outputs)
    for name, g in gems.items():
        counts = census(g)
        report = validate(g)
        for i, j in itertools.combinations(range(4), 2):
            assert counts.g_of(i, j, 4) == (
                counts.g_dot_of(i, j, 4) + counts.boundary_g_of(i, j)
            ), name
        assert sum(
            counts.boundary_g_of(i, j)
            for i, j in itertools.combinations(range(4), 2)
        ) == 4 * report.h + g.vertex_tally().boundary, name


def test_rho_reversal_invariance_on_catalog(all_entries):
    for entry in all_entries:
        g = entry.graph
        if g.dimension != 4:
            continue
        counts = census(g)
        for head in itertools.permutations(range(4)):
            assert (
                rho_epsilon(g, head + (4,), counts).rho
                == rho_epsilon(g, head[::-1] + (4,), counts).rho
            ), entry.name
