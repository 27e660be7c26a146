import numpy as np
import pytest

from nbspec import (
    Graph,
    ModelEstimate,
    ParameterError,
    ResourceError,
    bethe_hessian,
    bh_r_a,
    bh_r_m,
    centered_adjacency,
    centered_edge_matrix,
    centered_nb_operator,
    edge_nb_matrix,
    nb_operator,
    normalized_adjacency,
    rescaled_split,
    sample_er,
)
from nbspec.estimate import estimate_blocks, estimate_p

from conftest import (
    complete_graph,
    disjoint_cliques,
    multiset_close,
    spectra_equivalent_mod_pm1,
)


def random_graph(rng, n, p=0.4):
    return sample_er(n, p, int(rng.integers(2**32)))


class TestModelEstimate:
    def test_alphahat(self):
        est = ModelEstimate.constant(101, 0.05)
        assert est.alphahat == pytest.approx(100 * 0.05 + 1)

    def test_clamping_bounds(self):
        est = ModelEstimate.constant(4, 0.0)
        lo, hi = est.clamp_bounds()
        assert lo == pytest.approx(1 / 12)
        assert est.q_clamped()[0, 0] == pytest.approx(lo)
        assert est.qhat[0, 0] == 0.0  # raw value untouched

    def test_p_matvec_matches_dense(self, rng):
        labels = rng.integers(1, 4, size=30)
        labels[:3] = [1, 2, 3]
        q = np.array([[0.5, 0.1, 0.2], [0.1, 0.4, 0.3], [0.2, 0.3, 0.6]])
        est = ModelEstimate(30, 0.3, labels=labels, qhat=q)
        x = rng.normal(size=30)
        assert np.allclose(est.p_matvec(x), est.p_dense() @ x, atol=1e-12)


class TestCenteredAdjacency:
    def test_zero_on_empty_with_p_zero(self):
        g = sample_er(4, 0.0, 0)
        op = centered_adjacency(g, ModelEstimate.constant(4, 0.0))
        assert np.allclose(op.dense(), 0.0)

    def test_zero_on_complete_with_p_one(self):
        op = centered_adjacency(complete_graph(4), ModelEstimate.constant(4, 1.0))
        assert np.allclose(op.dense(), 0.0)

    def test_k3_half_spectrum(self):
        op = centered_adjacency(complete_graph(3), ModelEstimate.constant(3, 0.5))
        vals = np.sort(np.linalg.eigvalsh(op.dense()))
        assert np.allclose(vals, [-0.5, -0.5, 1.0], atol=1e-12)


class TestNormalizedAdjacency:
    def test_row_variance_one_under_truth(self):
        # Var(A_ij) = p(1-p) and the weight is 1/sqrt((n-1)p(1-p))
        n, p = 50, 0.3
        w2 = 1.0 / ((n - 1) * p * (1 - p))
        assert (n - 1) * w2 * p * (1 - p) == pytest.approx(1.0)

    def test_k3_entries_and_leading_eigenvalue(self):
        op = normalized_adjacency(complete_graph(3), ModelEstimate.constant(3, 0.5))
        dense = op.dense()
        assert dense[0, 1] == pytest.approx(1 / np.sqrt(2))
        assert np.linalg.eigvalsh(dense)[-1] == pytest.approx(np.sqrt(2))

    def test_matvec_with_blocks(self, rng):
        g = sample_er(40, 0.3, 17)
        labels = np.repeat([1, 2], 20)
        est = estimate_blocks(g, labels)
        op = normalized_adjacency(g, est)
        x = rng.normal(size=40)
        assert np.allclose(op.matvec(x), op.dense() @ x, atol=1e-12)

    def test_semicircle_edge_under_truth(self):
        for seed in (0, 1, 2):
            g = sample_er(1000, 0.08, (123, seed))
            op = normalized_adjacency(g, ModelEstimate.constant(1000, 0.08))
            lam1 = np.linalg.eigvalsh(op.dense())[-1]
            assert 1.9 <= lam1 <= 2.2


class TestNbOperator:
    def test_k3_spectrum(self):
        vals = np.linalg.eigvals(nb_operator(complete_graph(3)).dense())
        expected = [1, 1] + [(-1 + 1j * np.sqrt(3)) / 2] * 2 + [(-1 - 1j * np.sqrt(3)) / 2] * 2
        # mu = 1 is a defective pair, computed only to ~sqrt(eps)
        assert multiset_close(vals, expected, tol=1e-6)

    def test_empty_graph_pm_one(self):
        g = sample_er(5, 0.0, 0)
        vals = np.linalg.eigvals(nb_operator(g).dense())
        assert multiset_close(vals, [1.0] * 5 + [-1.0] * 5, tol=1e-12)

    @pytest.mark.parametrize("seed", range(6))
    def test_edge_matrix_spectral_equivalence(self, seed, rng):
        # min degree >= 2 keeps the comparison free of nilpotent Jordan rings
        while True:
            g = sample_er(int(rng.integers(4, 13)), 0.6, int(rng.integers(2**32)))
            if g.m > 0 and g.degrees().min() >= 2:
                break
        b, _ = edge_nb_matrix(g)
        ev_b = np.linalg.eigvals(b.toarray()) if b.shape[0] else np.empty(0, complex)
        ev_h = np.linalg.eigvals(nb_operator(g).dense())
        assert spectra_equivalent_mod_pm1(ev_h, ev_b, surplus_b=g.m - g.n)

    def test_k3_edge_matrix_row_sums(self):
        b, de = edge_nb_matrix(complete_graph(3))
        assert b.shape == (6, 6)
        assert np.allclose(np.asarray(b.sum(axis=1)).ravel(), 1.0)
        assert de.shape == (6, 2)


class TestCenteredNbOperator:
    def test_exact_fit_gives_swap_operator(self):
        g = disjoint_cliques(3, 3)
        est = estimate_blocks(g, np.repeat([1, 2], 3))
        op = centered_nb_operator(g, est)
        n = g.n
        expected = np.block(
            [[np.zeros((n, n)), np.eye(n)], [np.eye(n), np.zeros((n, n))]]
        )
        assert np.allclose(op.dense(), expected, atol=1e-12)
        vals = np.linalg.eigvals(op.dense())
        assert multiset_close(vals, [1.0] * n + [-1.0] * n, tol=1e-10)

    def test_k3_explicit_matrix(self):
        g = complete_graph(3)
        op = centered_nb_operator(g, ModelEstimate.constant(3, 0.5))
        abar = g.adj.toarray() - 0.5 * (np.ones((3, 3)) - np.eye(3))
        dbar = abar.sum(axis=1)
        expected = np.block(
            [[abar, np.eye(3) - np.diag(dbar)], [np.eye(3), np.zeros((3, 3))]]
        )
        assert np.allclose(op.dense(), expected, atol=1e-14)

    def test_null_scaling_near_two(self):
        from nbspec import EigOptions, eig_leading

        for seed in (0, 1, 2):
            g = sample_er(1000, 0.08, (777, seed))
            phat = estimate_p(g)
            op = centered_nb_operator(g, ModelEstimate.constant(1000, phat))
            mu1 = eig_leading(op, EigOptions(k=1)).values[0].real
            scaled = mu1 / np.sqrt(999 * phat * (1 - phat))
            assert 1.9 <= scaled <= 2.15

    def test_spectrum_closed_under_conjugation(self, rng):
        g = random_graph(rng, 30)
        est = ModelEstimate.constant(30, estimate_p(g))
        for op in (nb_operator(g), centered_nb_operator(g, est)):
            vals = np.linalg.eigvals(op.dense())
            assert multiset_close(vals, np.conj(vals), tol=1e-8)


class TestRescaledSplit:
    def _ops(self, n=60, p=0.2, seed=4):
        g = sample_er(n, p, seed)
        est = ModelEstimate.constant(n, estimate_p(g))
        h = centered_nb_operator(g, est)
        return g, est, h

    def test_similarity_invariance(self):
        g, est, h = self._ops(100, 0.15)
        alpha = est.alphahat
        h_tilde, _, _ = rescaled_split(h, alpha)
        ev_h = np.linalg.eigvals(h.dense())
        ev_t = np.linalg.eigvals(h_tilde.dense()) * np.sqrt(alpha)
        assert multiset_close(ev_h, ev_t, tol=1e-9)

    def test_h0_nonzero_spectrum_is_scaled_adjacency(self):
        g, est, h = self._ops(40, 0.3, 9)
        alpha = est.alphahat
        _, h0, _ = rescaled_split(h, alpha)
        ev = np.linalg.eigvals(h0.dense())
        abar = centered_adjacency(g, est).dense() / np.sqrt(alpha)
        expected = np.concatenate([np.linalg.eigvalsh(abar), np.zeros(40)])
        assert multiset_close(ev, expected, tol=1e-9)

    def test_e_norm_formula(self):
        g, est, h = self._ops(50, 0.25, 2)
        alpha = est.alphahat
        h_tilde, h0, e_part = rescaled_split(h, alpha)
        expected = np.abs(g.degrees() / alpha - 1.0).max()
        assert e_part.norm() == pytest.approx(expected, rel=1e-12)
        assert np.allclose(
            h_tilde.dense(), h0.dense() + e_part.dense(), atol=1e-14
        )
        assert e_part.norm() == pytest.approx(
            np.linalg.norm(e_part.dense(), 2), rel=1e-12
        )

    def test_alpha_must_be_positive(self):
        _, _, h = self._ops()
        with pytest.raises(ParameterError):
            rescaled_split(h, 0.0)


class TestBetheHessian:
    def test_r_one_is_laplacian(self):
        g = sample_er(30, 0.2, 8)
        h1 = bethe_hessian(g, 1.0).toarray()
        lap = np.diag(g.degrees()) - g.adj.toarray()
        assert np.allclose(h1, lap, atol=1e-14)
        assert np.linalg.eigvalsh(h1)[0] == pytest.approx(0.0, abs=1e-10)

    def test_three_regular_scale_choices(self):
        g = complete_graph(4)
        assert bh_r_a(g) == pytest.approx(np.sqrt(3))
        assert bh_r_m(g) == pytest.approx(np.sqrt(2))

    def test_k3_at_r_two(self):
        vals = np.linalg.eigvalsh(bethe_hessian(complete_graph(3), 2.0).toarray())
        assert np.allclose(np.sort(vals), [1.0, 7.0, 7.0], atol=1e-12)


class TestCenteredEdgeMatrix:
    def test_single_edge_hand_computed(self):
        g = Graph.from_edges(2, [0], [1])
        est = ModelEstimate.constant(2, 1.0)
        mat, pairs = centered_edge_matrix(g, est)
        # Abar = 0, so only the backtracking -1 terms remain
        assert np.allclose(mat, [[0.0, -1.0], [-1.0, 0.0]])
        assert pairs.shape == (2, 2)

    @pytest.mark.parametrize("phat", [0.3, 0.7])
    @pytest.mark.parametrize("seed", range(4))
    def test_spectral_equivalence_with_centered_h(self, phat, seed, rng):
        n = int(rng.integers(3, 11))
        g = sample_er(n, 0.5, seed)
        est = ModelEstimate.constant(n, phat)
        mat, _ = centered_edge_matrix(g, est)
        ev_b = np.linalg.eigvals(mat)
        ev_h = np.linalg.eigvals(centered_nb_operator(g, est).dense())
        assert spectra_equivalent_mod_pm1(ev_h, ev_b, surplus_b=n * (n - 3) // 2)

    def test_size_cap(self):
        g = sample_er(50, 0.1, 0)
        with pytest.raises(ResourceError):
            centered_edge_matrix(g, ModelEstimate.constant(50, 0.1))


class TestMatvecDenseAgreement:
    def test_all_operator_kinds(self, rng):
        for _ in range(30):
            n = int(rng.integers(5, 200))
            g = random_graph(rng, n, p=float(rng.uniform(0.02, 0.5)))
            phat = estimate_p(g)
            est = ModelEstimate.constant(n, phat)
            ops = [
                centered_adjacency(g, est),
                normalized_adjacency(g, est),
                nb_operator(g),
                centered_nb_operator(g, est),
            ]
            ops.extend(rescaled_split(ops[3], est.alphahat))
            for op in ops:
                dense = op.dense()
                for _ in range(10):
                    v = rng.normal(size=op.shape[0])
                    err = np.linalg.norm(op.matvec(v) - dense @ v)
                    assert err <= 1e-10 * np.linalg.norm(v)
