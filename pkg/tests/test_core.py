"""Core model: construction validation, residues, censuses, face vectors."""

import itertools

import pytest

from gemkit import (
    ColoredGraph,
    GemError,
    boundary_graph,
    census,
    face_vector,
    residue_components,
    validate,
)
from oracles import (
    bfs_component_count,
    bfs_is_bipartite,
    bfs_regular_component_count,
    oracle_euler_characteristic,
    oracle_face_vector,
)


class TestConstructionErrors:
    def test_incomplete_matching_rejected(self):
        with pytest.raises(GemError, match="not a total pairing"):
            ColoredGraph(1, 4, [[(1, 2)], []])

    def test_loop_rejected(self):
        with pytest.raises(GemError, match="loop"):
            ColoredGraph(1, 2, [[(1, 1)], []])

    def test_double_pairing_rejected(self):
        with pytest.raises(GemError, match="paired more than once"):
            ColoredGraph(1, 4, [[(1, 2), (2, 3)], []])

    def test_vertex_out_of_range_rejected(self):
        with pytest.raises(GemError, match="out of range"):
            ColoredGraph(1, 2, [[(1, 3)], []])

    def test_wrong_color_count_rejected(self):
        with pytest.raises(GemError, match="expected 3 colors"):
            ColoredGraph(2, 2, [[(1, 2)], [(1, 2)]])

    def test_immutable(self):
        g = ColoredGraph(1, 2, [[(1, 2)], []])
        with pytest.raises(AttributeError):
            g.dimension = 3


class TestBasicAccessors:
    def test_order_two_closed(self):
        g = ColoredGraph(4, 2, [[(1, 2)]] * 5)
        assert g.is_closed()
        assert g.mate(1, 3) == 2
        assert g.degree(1) == 5
        assert g.vertex_tally().p == 1

    def test_boundary_vertices(self, fig2):
        assert fig2.boundary_vertices() == [1, 2, 3, 10]
        assert fig2.vertex_tally().boundary == 4
        assert fig2.vertex_tally().p_bar == 2

    def test_edges_sorted_canonical(self, fig3):
        for c in fig3.colors:
            edges = fig3.edges(c)
            assert edges == sorted(edges)
            assert all(a < b for a, b in edges)

    def test_equality_and_hash(self, fig2):
        twin = ColoredGraph(
            4, 10, [fig2.edges(c) for c in fig2.colors]
        )
        assert twin == fig2
        assert hash(twin) == hash(fig2)


class TestResiduesAgainstOracle:
    @pytest.mark.parametrize(
        "name",
        [
            "fig1_s4",
            "fig2_s3xI",
            "fig3_d3xs1",
            "fig4_boundary16",
            "s2xs1_8",
            "rp3_8",
        ],
    )
    def test_component_counts_match_bfs(self, name):
        from gemkit import catalog_get

        g = catalog_get(name).graph
        for size in range(1, g.dimension + 2):
            for subset in itertools.combinations(g.colors, size):
                comps = residue_components(g, subset)
                assert len(comps) == bfs_component_count(g, subset)
                assert sum(
                    1 for c in comps if c.regular
                ) == bfs_regular_component_count(g, subset)

    def test_bipartiteness_matches_bfs(self, all_entries):
        for entry in all_entries:
            assert entry.graph.is_bipartite() == bfs_is_bipartite(entry.graph)

    def test_empty_color_set_rejected(self, fig2):
        with pytest.raises(GemError):
            residue_components(fig2, ())


class TestFaceVector:
    def test_order_two_sphere(self):
        g = ColoredGraph(4, 2, [[(1, 2)]] * 5)
        fv = face_vector(g)
        assert fv.f == (5, 10, 10, 5, 2)
        assert fv.euler_characteristic == 2

    def test_matches_oracle_on_catalog(self, all_entries):
        for entry in all_entries:
            fv = face_vector(entry.graph)
            assert fv.f == oracle_face_vector(entry.graph)
            assert fv.euler_characteristic == oracle_euler_characteristic(
                entry.graph
            )

    def test_euler_characteristics(self, fig1, fig2, fig3, fig4):
        assert face_vector(fig1).euler_characteristic == 2
        assert face_vector(fig2).euler_characteristic == 0
        assert face_vector(fig3).euler_characteristic == 0
        assert face_vector(fig4).euler_characteristic == 1


class TestBoundaryGraph:
    def test_closed_gem_has_empty_boundary(self, fig1):
        assert boundary_graph(fig1).is_empty()

    def test_fig2_two_sphere_components(self, fig2):
        bg = boundary_graph(fig2)
        assert bg.component_count() == 2
        assert [len(c) for c in bg.components] == [2, 2]
        for q in range(2):
            sub = bg.component_subgraph(q)
            assert sub.is_closed()
            assert validate(sub).is_crystallization

    def test_fig3_single_component_is_s2xs1_entry(self, fig3, s2xs1):
        bg = boundary_graph(fig3)
        assert bg.component_count() == 1
        assert bg.component_subgraph(0) == s2xs1

    def test_parent_vertices_are_boundary(self, fig4):
        bg = boundary_graph(fig4)
        assert list(bg.parent_vertices) == fig4.boundary_vertices()


class TestCensus:
    def test_fig1_census_values(self, fig1):
        counts = census(fig1)
        for i, j, k in itertools.combinations(range(4), 3):
            assert counts.g_of(i, j, k) == 2
        for i, j in itertools.combinations(range(4), 2):
            assert counts.g_of(i, j, 4) == 3

    def test_fig3_interior_cycles(self, fig3):
        counts = census(fig3)
        for i, j in itertools.combinations(range(4), 2):
            assert counts.g_of(i, j, 4) == 2
            assert counts.g_dot_of(i, j, 4) == 0
            assert counts.boundary_g_of(i, j) == 2

    def test_regular_equals_total_without_last_color(self, all_entries):
        # every color below d is a perfect matching, so residues avoiding
        # color d are automatically regular
        for entry in all_entries:
            g = entry.graph
            counts = census(g)
            for size in range(1, g.dimension + 1):
                for subset in itertools.combinations(range(g.dimension), size):
                    key = frozenset(subset)
                    assert counts.g[key] == counts.g_dot[key]


class TestValidate:
    def test_fig2_crystallization(self, fig2):
        report = validate(fig2)
        assert report.is_crystallization
        assert report.h == 2
        assert report.f0 == 9  # 4h + 1

    def test_fig3_crystallization(self, fig3):
        report = validate(fig3)
        assert report.is_crystallization
        assert report.h == 1
        assert report.f0 == 5

    def test_fig4_crystallization_non_bipartite(self, fig4):
        report = validate(fig4)
        assert report.is_crystallization
        assert report.h == 1
        assert not report.bipartite

    def test_fig1_closed_but_not_contracted(self, fig1):
        report = validate(fig1)
        assert report.closed
        assert not report.contracted
        assert not report.is_crystallization
        assert report.f0 == 9

    def test_order_two_gems_are_crystallizations(self):
        for d in (3, 4):
            g = ColoredGraph(d, 2, [[(1, 2)]] * (d + 1))
            assert validate(g).is_crystallization
