import json

import numpy as np
import pytest

from nbspec import (
    Labels,
    ParameterError,
    RecursiveConfig,
    SequentialConfig,
    TestStatKind,
    block_matrix_eigs,
    build_q_delta,
    count_nb_informative,
    estimate_blocks,
    estimate_k_recursive,
    estimate_k_sequential,
    estimate_p,
    expectation_eigs_closed_form,
    label_correlation,
    sample_er,
    sample_sbm,
    spectral_labels,
)
from nbspec.estimate import assemble_block_matrix
from conftest import complete_graph, disjoint_cliques, permute_graph


def accuracy(labels, truth):
    a, b = labels.values, truth
    direct = np.mean(a == b)
    flipped = np.mean((3 - a) == b)
    return max(direct, flipped)


class TestEstimateP:
    def test_empty(self):
        assert estimate_p(sample_er(5, 0.0, 0)) == 0.0

    def test_complete(self):
        assert estimate_p(complete_graph(4)) == 1.0

    def test_k3_plus_isolated(self):
        g = disjoint_cliques(3, 1)
        assert estimate_p(g) == pytest.approx(0.5)

    def test_needs_two_nodes(self):
        with pytest.raises(ParameterError):
            estimate_p(sample_er(1, 0.0, 0))


class TestEstimateBlocks:
    def test_single_block_is_density(self):
        g = sample_er(30, 0.3, 1)
        est = estimate_blocks(g, np.ones(30, dtype=int))
        assert est.qhat[0, 0] == pytest.approx(estimate_p(g))

    def test_two_cliques_true_labels(self):
        g = disjoint_cliques(10, 10)
        est = estimate_blocks(g, np.repeat([1, 2], 10))
        lo, _ = est.clamp_bounds()
        assert est.qhat[0, 0] == 1.0 and est.qhat[1, 1] == 1.0
        assert est.qhat[0, 1] == 0.0
        assert est.q_clamped()[0, 1] == pytest.approx(lo)

    def test_recovery_error_within_binomial_band(self):
        spec = build_q_delta("balanced", 1000, 1000, None, 0.02, 0.5)
        g = sample_sbm(spec, 31)
        est = estimate_blocks(g, spec.memberships)
        sizes = spec.block_sizes()
        for a in range(2):
            for b in range(2):
                n_ab = sizes[a] * sizes[b] - (sizes[a] if a == b else 0)
                q = spec.q[a, b]
                band = 5 * np.sqrt(q * (1 - q) / n_ab)
                assert abs(est.qhat[a, b] - q) < band


class TestSpectralLabels:
    @pytest.mark.parametrize("embedding", ["adjacency_topk", "centered_nb_half"])
    def test_two_cliques_exact(self, embedding):
        g = disjoint_cliques(10, 10)
        labels = spectral_labels(g, 2, embedding, seed=3)
        truth = np.repeat([1, 2], 10)
        assert accuracy(labels, truth) == 1.0

    def test_strong_sbm_high_accuracy(self):
        from nbspec import BlockModelSpec

        spec = BlockModelSpec(
            np.repeat([1, 2], 250), np.array([[0.1, 0.01], [0.01, 0.1]])
        )
        good = 0
        for seed in range(50):
            g = sample_sbm(spec, (101, seed))
            labels = spectral_labels(g, 2, "adjacency_topk", seed=7)
            if accuracy(labels, spec.memberships) > 0.95:
                good += 1
        assert good >= 48

    def test_no_signal_at_delta_zero(self):
        spec = build_q_delta("balanced", 250, 250, None, 0.01, 0.0)
        corrs = []
        for seed in range(10):
            g = sample_sbm(spec, (55, seed))
            labels = spectral_labels(g, 2, "centered_nb_half", seed=1)
            corrs.append(label_correlation(labels, Labels(spec.memberships, 2)))
        assert np.median(corrs) < 0.2

    def test_permutation_equivariant_on_separated_data(self, rng):
        g = disjoint_cliques(8, 8, 8)
        perm = rng.permutation(24)
        gp = permute_graph(g, perm)
        a = spectral_labels(g, 3, "adjacency_topk", seed=5)
        b = spectral_labels(gp, 3, "adjacency_topk", seed=5)
        # node i of gp is original node perm[i]; map b back to the original order
        in_original_order = np.empty(24, dtype=int)
        in_original_order[perm] = b.values
        # same partition up to block renaming: label pairs form a bijection
        pairs = {(int(x), int(y)) for x, y in zip(a.values, in_original_order)}
        assert len(pairs) == 3

    def test_centered_nb_half_needs_k2(self):
        g = disjoint_cliques(5, 5)
        with pytest.raises(ParameterError):
            spectral_labels(g, 3, "centered_nb_half")


class TestLabelCorrelation:
    def test_identical(self):
        a = Labels(np.repeat([1, 2], 5), 2)
        assert label_correlation(a, a) == pytest.approx(1.0)

    def test_flip_invariant(self):
        a = Labels(np.repeat([1, 2], 5), 2)
        b = Labels(np.repeat([2, 1], 5), 2)
        assert label_correlation(a, b) == pytest.approx(1.0)

    def test_independent_labels_low(self, rng):
        a = rng.integers(1, 3, size=1000)
        b = rng.integers(1, 3, size=1000)
        a[:2] = [1, 2]
        b[:2] = [1, 2]
        assert label_correlation(a, b) < 0.1

    def test_non_binary_rejected(self):
        with pytest.raises(ParameterError):
            label_correlation(np.ones(4, dtype=int), np.repeat([1, 2], 2))


class TestSequential:
    def test_two_cliques_k2(self):
        g = disjoint_cliques(50, 50)
        cfg = SequentialConfig(
            stat=TestStatKind("centered_nb"), alpha=0.05, null="mc",
            kmax=5, null_reps=150, seed=7,
        )
        result = estimate_k_sequential(g, cfg)
        assert result.k == 2 and not result.truncated
        assert result.outcomes[0].reject and not result.outcomes[1].reject

    def test_kmax_one_truncates(self):
        g = disjoint_cliques(50, 50)
        cfg = SequentialConfig(kmax=1, null_reps=100, seed=3)
        result = estimate_k_sequential(g, cfg)
        assert result.k == 1 and result.truncated

    def test_er_mostly_one(self):
        hits = 0
        for seed in range(6):
            g = sample_er(300, 0.05, (909, seed))
            cfg = SequentialConfig(alpha=0.05, null="mc", kmax=3,
                                   null_reps=200, seed=seed)
            if estimate_k_sequential(g, cfg).k == 1:
                hits += 1
        assert hits >= 5


class TestRecursive:
    def test_two_cliques_two_leaves(self):
        g = disjoint_cliques(50, 50)
        cfg = RecursiveConfig(alpha=0.01, null="mc", min_size=20,
                              null_reps=150, seed=5)
        root = estimate_k_recursive(g, cfg)
        leaves = root.leaves()
        assert len(leaves) == 2
        parts = sorted(tuple(sorted(leaf.members)) for leaf in leaves)
        assert parts == [tuple(range(50)), tuple(range(50, 100))]

    def test_er_single_leaf(self):
        g = sample_er(300, 0.05, 17)
        cfg = RecursiveConfig(alpha=0.001, null="mc", null_reps=200, seed=2)
        root = estimate_k_recursive(g, cfg)
        assert root.is_leaf()
        assert root.outcome is not None and not root.outcome.reject

    def test_min_size_stops_without_testing(self):
        g = sample_er(10, 0.5, 1)
        cfg = RecursiveConfig(min_size=20, null_reps=100, seed=0)
        root = estimate_k_recursive(g, cfg)
        assert root.is_leaf() and root.flag == "min_size"
        assert root.outcome is None

    def test_leaves_partition_nodes(self):
        spec = build_q_delta("balanced", 60, 60, None, 0.25, 0.9)
        g = sample_sbm(spec, 23)
        cfg = RecursiveConfig(alpha=0.01, null="mc", min_size=10,
                              null_reps=120, seed=11)
        root = estimate_k_recursive(g, cfg)
        members = np.concatenate([leaf.members for leaf in root.leaves()])
        assert np.array_equal(np.sort(members), np.arange(g.n))

    def test_deterministic_and_json(self):
        g = disjoint_cliques(30, 30)
        cfg = RecursiveConfig(alpha=0.01, null="mc", min_size=10,
                              null_reps=100, seed=9)
        a = estimate_k_recursive(g, cfg)
        b = estimate_k_recursive(g, cfg)
        assert a.to_json() == b.to_json()
        parsed = json.loads(a.to_json())
        assert set(parsed) <= {"members", "stat", "threshold", "reject", "children", "flag"}


class TestCountNb:
    def test_er_gives_one(self):
        for seed in (0, 1, 2):
            g = sample_er(500, 0.05, (31, seed))
            assert count_nb_informative(g) == 1

    def test_two_cliques_at_least_two(self):
        assert count_nb_informative(disjoint_cliques(50, 50)) >= 2

    def test_two_block_sparse_signal(self):
        spec = build_q_delta("balanced", 250, 250, None, 0.01, 0.6)
        hits = sum(
            count_nb_informative(sample_sbm(spec, (77, seed))) == 2
            for seed in range(5)
        )
        assert hits >= 3


class TestClosedForms:
    def test_equality_case_p_half_k_one(self):
        out = expectation_eigs_closed_form(0.5, 1.0, 0.3, 100, 0.05)
        np0_delta = 100 * 0.05 * 0.3
        assert out.lam2_ea == pytest.approx(np0_delta, rel=1e-12)
        assert out.lam1_centered == pytest.approx(np0_delta, rel=1e-12)

    def test_delta_zero_null(self):
        out = expectation_eigs_closed_form(0.6, 2.0, 0.0, 80, 0.1)
        assert out.lam2_ea == pytest.approx(0.0, abs=1e-12)
        assert out.lam1_centered == pytest.approx(0.0, abs=1e-12)
        assert out.lam1_ea == pytest.approx(80 * 0.1, rel=1e-12)

    def test_matches_dense_oracle(self):
        n, p0 = 40, 0.01
        for p in (0.5, 0.7, 0.9):
            n1 = int(round(p * n))
            for k in (0.0, 0.5, 2.0):
                for delta in (0.2, 0.6):
                    out = expectation_eigs_closed_form(p, k, delta, n, p0)
                    q = 1 - p
                    x = 2 * p * q / (p * p + k * q * q)
                    qmat = p0 * np.array(
                        [[1 + x * delta, 1 - delta], [1 - delta, 1 + k * x * delta]]
                    )
                    sizes = np.array([n1, n - n1])
                    ea = assemble_block_matrix(qmat, sizes, np.zeros(2))
                    vals = np.linalg.eigvalsh(ea)
                    # nontrivial eigenvalues are the extremes of a rank-2 matrix
                    got = sorted([vals[-1], vals[0] if vals[0] < -1e-12 else vals[-2]])
                    want = sorted([out.lam1_ea, out.lam2_ea])
                    assert np.allclose(got, want, rtol=1e-9, atol=1e-12)
                    centered = ea - p0 * np.ones((n, n))
                    vals_c = np.linalg.eigvalsh(centered)
                    got_c = sorted([vals_c[-1], vals_c[0] if vals_c[0] < -1e-12 else vals_c[-2]])
                    want_c = sorted([out.lam1_centered, out.lam2_centered])
                    assert np.allclose(got_c, want_c, rtol=1e-9, atol=1e-10)

    def test_centering_never_hurts(self):
        for p in (0.5, 0.6, 0.8):
            for k in (0.0, 1.0, 4.0):
                for delta in (0.1, 0.5, 0.9):
                    out = expectation_eigs_closed_form(p, k, delta, 60, 0.02)
                    assert out.lam1_centered >= out.lam2_ea - 1e-9


class TestBlockMatrixEigs:
    def test_k2_closed_form(self):
        # equal sizes m, equal diagonal a, off-diagonal b, ell = 1
        m, a, b = 5, 0.7, 0.2
        spec = block_matrix_eigs([[a, b], [b, a]], [m, m], [1.0, 1.0])
        expected_reduced = {a * (m - 1) + m * b, a * (m - 1) - m * b}
        assert set(np.round(spec.reduced, 12)) == set(
            np.round(sorted(expected_reduced, reverse=True), 12)
        )
        assert spec.deflated == ((-a, m - 1), (-a, m - 1))

    def test_k1_rank_one(self):
        spec = block_matrix_eigs([[2.0]], [6], [0.0])
        assert spec.reduced[0] == pytest.approx(12.0)
        assert spec.deflated == ((0.0, 5),)

    def test_random_k3_matches_dense(self, rng):
        for _ in range(10):
            k = 3
            b = rng.normal(size=(k, k))
            b = (b + b.T) / 2
            sizes = rng.integers(1, 7, size=k)
            ell = rng.uniform(0, 2, size=k)
            spec = block_matrix_eigs(b, sizes, ell)
            dense = np.linalg.eigvalsh(assemble_block_matrix(b, sizes, ell))
            assert np.allclose(np.sort(spec.full()), dense, atol=1e-10)
