"""Identity and bound harness: catalog sweep plus negative controls."""

import pytest

from gemkit import (
    ColoredGraph,
    GemError,
    ManifoldMeta,
    catalog_get,
    verify_bounds,
    verify_identities,
)


def _swap_one_pair(g: ColoredGraph, color: int = 0) -> ColoredGraph:
    """Cross two edges of one color: a-b, c-d become a-c, b-d."""
    pairs = [list(g.edges(c)) for c in g.colors]
    (a, b), (c, d) = pairs[color][0], pairs[color][1]
    pairs[color][0], pairs[color][1] = (a, c), (b, d)
    return ColoredGraph(g.dimension, g.vertex_count, pairs)


class TestIdentities:
    def test_all_4d_catalog_entries_pass(self, all_entries):
        for entry in all_entries:
            if entry.graph.dimension != 4:
                continue
            report = verify_identities(entry.graph)
            assert report.passed, (entry.name, report.failures())

    def test_closed_entries_skip_boundary_families(self):
        report = verify_identities(catalog_get("s4_order2").graph)
        skipped = {s.name for s in report.skipped}
        assert "boundary-census-split" in skipped
        assert "double-census" in skipped
        assert any(c.name == "closed-triple-relation" for c in report.checks)

    def test_construction_outputs_pass(
        self, product_s2xs1, product_rp3, connector_sum_fig3,
        crystallized_double_fig3,
    ):
        for g in (
            product_s2xs1,
            product_rp3,
            connector_sum_fig3,
            crystallized_double_fig3,
        ):
            assert verify_identities(g).passed

    def test_negative_control_corrupted_fig2(self, fig2):
        corrupted = _swap_one_pair(fig2)
        report = verify_identities(corrupted)
        assert not report.passed
        assert report.failures()

    def test_negative_control_every_color(self, fig2):
        # corruption in any single color must be caught
        for color in range(5):
            if len(fig2.edges(color)) < 2:
                continue
            corrupted = _swap_one_pair(fig2, color)
            assert not verify_identities(corrupted).passed, color

    def test_report_deterministic(self, fig3):
        assert verify_identities(fig3) == verify_identities(fig3)

    def test_wrong_dimension_rejected(self, s2xs1):
        with pytest.raises(GemError, match="dimension 4"):
            verify_identities(s2xs1)

    def test_fig3_interior_cycle_floor_is_tight_at_zero(self, fig3):
        report = verify_identities(fig3)
        floors = [c for c in report.checks if c.name == "interior-cycle-floor"]
        assert floors
        for check in floors:
            assert check.left == 0 and check.right == 0 and check.passed


class TestBounds:
    def test_catalog_bounds_pass(self, all_entries):
        for entry in all_entries:
            if entry.meta is None or entry.graph.dimension != 4:
                continue
            report = verify_bounds(entry.graph, entry.meta)
            assert report.passed, (entry.name, report.failures())

    def test_fig2_vertex_bounds_sharp(self, fig2):
        meta = ManifoldMeta.for_graph(fig2, m=0, boundary_genus=0,
                                      double_rank=0)
        report = verify_bounds(fig2, meta)
        assert report.passed
        sharp = [c.statement for c in report.checks if c.sharp]
        assert "2p >= bound" in sharp
        assert "2p + 2p_bar >= bound" in sharp

    def test_fig4_vertex_bounds_all_sharp(self, fig4):
        meta = ManifoldMeta.for_graph(fig4, m=1)
        report = verify_bounds(fig4, meta)
        vertex_checks = [c for c in report.checks if c.name == "vertex-floor"]
        assert len(vertex_checks) == 3
        assert all(c.sharp for c in vertex_checks)

    def test_missing_optional_meta_is_skipped_not_failed(self, fig4):
        meta = ManifoldMeta.for_graph(fig4, m=1)
        report = verify_bounds(fig4, meta)
        skipped = {s.name for s in report.skipped}
        assert "genus-floor-via-double-rank" in skipped
        assert "genus-floor-with-boundary" in skipped
        assert report.passed

    def test_closed_input_rejected(self, fig1):
        with pytest.raises(GemError):
            verify_bounds(fig1, ManifoldMeta(h=0, chi=2, m=0))

    def test_connector_sum_complexity_sharp(self, connector_sum_fig3):
        meta = ManifoldMeta.for_graph(connector_sum_fig3, m=2)
        report = verify_bounds(connector_sum_fig3, meta)
        assert report.passed
        complexity = [
            c for c in report.checks
            if c.name == "complexity-floor"
        ]
        assert complexity and complexity[0].sharp
