import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbspec import (
    BlockModelSpec,
    ParameterError,
    ParseError,
    build_q_delta,
    degrees,
    largest_connected_component,
    read_edge_list,
    sample_er,
    sample_sbm,
    write_edge_list,
)
from conftest import disjoint_cliques


def assert_graph_invariants(g):
    adj = g.adj
    assert (adj != adj.T).nnz == 0
    assert not adj.diagonal().any()
    assert degrees(g).sum() == 2 * g.m


class TestSampleEr:
    def test_p_zero_empty(self):
        g = sample_er(4, 0.0, 1)
        assert g.m == 0 and g.n == 4
        assert np.array_equal(degrees(g), np.zeros(4))

    def test_p_one_complete(self):
        g = sample_er(4, 1.0, 1)
        assert g.m == 6
        assert np.array_equal(degrees(g), np.full(4, 3))

    def test_edge_count_within_binomial_band(self):
        # Binomial(124750, 0.01): mean 1247.5, sd ~ 35.14
        g = sample_er(500, 0.01, 99)
        sd = np.sqrt(124750 * 0.01 * 0.99)
        assert abs(g.m - 1247.5) < 5 * sd
        assert_graph_invariants(g)

    def test_deterministic(self):
        a = sample_er(60, 0.1, (42, 3))
        b = sample_er(60, 0.1, (42, 3))
        assert (a.adj != b.adj).nnz == 0

    def test_distinct_replicates_differ(self):
        a = sample_er(60, 0.1, (42, 0))
        b = sample_er(60, 0.1, (42, 1))
        assert (a.adj != b.adj).nnz != 0

    def test_bad_p(self):
        with pytest.raises(ParameterError):
            sample_er(10, 1.5, 0)

    @given(st.integers(2, 30), st.floats(0, 1), st.integers(0, 2**32))
    @settings(max_examples=25, deadline=None)
    def test_invariants_hold_for_any_sample(self, n, p, seed):
        assert_graph_invariants(sample_er(n, p, seed))


class TestSampleSbm:
    def test_one_block_matches_er(self):
        spec = BlockModelSpec(np.ones(40, dtype=int), np.array([[0.2]]))
        a = sample_sbm(spec, (5, 1))
        b = sample_er(40, 0.2, (5, 1))
        assert (a.adj != b.adj).nnz == 0

    def test_diagonal_blocks_deterministic(self):
        spec = BlockModelSpec(
            np.repeat([1, 2], 3), np.array([[1.0, 0.0], [0.0, 1.0]])
        )
        g = sample_sbm(spec, 0)
        assert g.m == 6
        expected = disjoint_cliques(3, 3)
        assert (g.adj != expected.adj).nnz == 0

    def test_mean_density_matches_er_at_delta_zero(self):
        spec = build_q_delta("balanced", 250, 250, None, 0.01, 0.0)
        ms = [sample_sbm(spec, (7, i)).m for i in range(200)]
        total_pairs = 500 * 499 / 2
        sd = np.sqrt(total_pairs * 0.01 * 0.99)
        assert abs(np.mean(ms) - total_pairs * 0.01) < 5 * sd / np.sqrt(200)

    def test_block_labels_shuffled_supported(self):
        g_lab = np.array([1, 2, 1, 2, 1, 2], dtype=int)
        spec = BlockModelSpec(g_lab, np.array([[1.0, 0.0], [0.0, 1.0]]))
        g = sample_sbm(spec, 0)
        assert g.m == 6  # two triangles on the interleaved index sets
        assert_graph_invariants(g)


class TestBuildQDelta:
    def test_balanced_delta_zero_is_null(self):
        spec = build_q_delta("balanced", 250, 250, None, 0.01, 0.0)
        assert np.allclose(spec.q, 0.01)

    def test_balanced_values(self):
        spec = build_q_delta("balanced", 250, 250, None, 0.01, 0.6)
        assert spec.q[0, 1] == pytest.approx(0.004, abs=1e-15)
        expected = 0.01 * (1 + (125000 / 124500) * 0.6)
        assert spec.q[0, 0] == pytest.approx(expected, rel=1e-12)
        assert spec.q[1, 1] == pytest.approx(expected, rel=1e-12)

    def test_unbalanced_values(self):
        spec = build_q_delta("unbalanced", 250, 250, None, 0.01, 0.6)
        assert spec.q[0, 0] == 0.01
        expected = 0.01 * (1 + (500 / 249) * 0.6)
        assert spec.q[1, 1] == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("n1,n2,p0,delta", [
        (250, 250, 0.01, 0.6), (400, 100, 0.08, 0.3), (30, 70, 0.2, 0.8),
    ])
    def test_equal_degree_row_sums(self, n1, n2, p0, delta):
        spec = build_q_delta("equal_degree", n1, n2, None, p0, delta)
        n = n1 + n2
        q = spec.q
        deg1 = (n1 - 1) * q[0, 0] + n2 * q[0, 1]
        deg2 = (n2 - 1) * q[1, 1] + n1 * q[0, 1]
        assert deg1 == pytest.approx((n - 1) * p0, rel=1e-12)
        assert deg2 == pytest.approx((n - 1) * p0, rel=1e-12)

    @pytest.mark.parametrize("kind", ["balanced", "unbalanced", "equal_degree"])
    @pytest.mark.parametrize("delta", [0.0, 0.2, 0.4, 0.6, 0.8])
    def test_density_normalization(self, kind, delta):
        spec = build_q_delta(kind, 400, 100, None, 0.08, delta)
        assert spec.expected_density() == pytest.approx(0.08, abs=1e-12)

    def test_three_block_shape(self):
        spec = build_q_delta("three_block", 426, 107, 267, 0.04, 0.3)
        assert spec.k == 3
        assert spec.q[0, 2] == pytest.approx(0.012)
        assert spec.q[2, 2] == pytest.approx(0.04)
        assert spec.q[0, 1] == pytest.approx(0.04 * 0.7)
        # at delta=0 the first two blocks merge: a K=2 model, not ER
        null = build_q_delta("three_block", 426, 107, 267, 0.04, 0.0)
        assert null.q[0, 0] == null.q[0, 1] == null.q[1, 1] == 0.04

    def test_entry_out_of_range_names_entry(self):
        with pytest.raises(ParameterError, match="Q22"):
            build_q_delta("unbalanced", 250, 250, None, 0.4, 0.9)

    def test_n3_requirement(self):
        with pytest.raises(ParameterError):
            build_q_delta("balanced", 10, 10, 10, 0.1, 0.1)
        with pytest.raises(ParameterError):
            build_q_delta("three_block", 10, 10, None, 0.1, 0.1)


class TestDegrees:
    def test_empty(self):
        assert np.array_equal(degrees(sample_er(5, 0.0, 0)), np.zeros(5))

    def test_complete(self):
        assert np.array_equal(degrees(sample_er(4, 1.0, 0)), [3, 3, 3, 3])

    def test_two_triangles(self):
        assert np.array_equal(degrees(disjoint_cliques(3, 3)), np.full(6, 2))


class TestEdgeListIO:
    def test_read_triangle(self, tmp_path):
        path = tmp_path / "t.edges"
        path.write_text("0 1\n1 2\n2 0\n")
        g, report = read_edge_list(path)
        assert g.n == 3 and g.m == 3
        assert report.duplicates == 0 and report.self_loops == 0

    def test_dedup_and_self_loop_report(self, tmp_path):
        path = tmp_path / "d.edges"
        path.write_text("0 1\n1 0\n0 0\n")
        g, report = read_edge_list(path)
        assert g.m == 1 and g.n == 2
        assert report.duplicates == 1
        assert report.self_loops == 1

    def test_round_trip_identity(self, tmp_path):
        g = sample_er(80, 0.05, 11)
        path = tmp_path / "g.edges"
        write_edge_list(g, path)
        back, report = read_edge_list(path)
        assert back.n == g.n
        assert (back.adj != g.adj).nnz == 0
        assert report.index_map is None

    def test_round_trip_preserves_isolated_nodes(self, tmp_path):
        g = sample_er(50, 0.02, 3)  # sparse enough to have isolated nodes
        assert (degrees(g) == 0).any()
        path = tmp_path / "iso.edges"
        write_edge_list(g, path)
        back, _ = read_edge_list(path)
        assert back.n == 50

    def test_gap_relabeling_reported(self, tmp_path):
        path = tmp_path / "gap.edges"
        path.write_text("0 5\n5 9\n")
        g, report = read_edge_list(path)
        assert g.n == 3 and g.m == 2
        assert np.array_equal(report.index_map, [0, 5, 9])

    def test_comments_ignored(self, tmp_path):
        path = tmp_path / "c.edges"
        path.write_text("# a comment\n0 1\n# another\n1 2\n")
        g, _ = read_edge_list(path)
        assert g.m == 2

    def test_malformed_line_number(self, tmp_path):
        path = tmp_path / "bad.edges"
        path.write_text("0 1\n1 2 3\n")
        with pytest.raises(ParseError, match="line 2"):
            read_edge_list(path)

    def test_non_integer_rejected(self, tmp_path):
        path = tmp_path / "bad2.edges"
        path.write_text("0 x\n")
        with pytest.raises(ParseError):
            read_edge_list(path)

    def test_canonical_writer_bytes(self, tmp_path):
        g = disjoint_cliques(3)
        path = tmp_path / "k3.edges"
        write_edge_list(g, path)
        assert path.read_bytes() == b"# n=3\n0 1\n0 2\n1 2\n"


class TestLargestConnectedComponent:
    def test_connected_graph_is_itself(self):
        g = disjoint_cliques(5)
        sub, index_map = largest_connected_component(g)
        assert sub.n == 5 and np.array_equal(index_map, np.arange(5))

    def test_picks_larger_component(self):
        g = disjoint_cliques(3, 2)
        sub, index_map = largest_connected_component(g)
        assert sub.n == 3 and sub.m == 3
        assert np.array_equal(index_map, [0, 1, 2])

    def test_tie_breaks_to_smallest_index(self):
        g = disjoint_cliques(3, 3)
        sub, index_map = largest_connected_component(g)
        assert np.array_equal(index_map, [0, 1, 2])

    def test_empty_graph(self):
        g = sample_er(4, 0.0, 0)
        sub, index_map = largest_connected_component(g)
        assert sub.n == 1  # isolated nodes are singleton components
