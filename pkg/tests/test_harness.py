import pytest

from nbspec import (
    ParameterError,
    SweepConfig,
    fit_model,
    run_approx_gap,
    run_clustering_corr,
    run_null_scaling,
    run_power_sweep,
    run_vdv_growth,
    sample_er,
    y1hx1_gap,
)


def tiny_sweep(**overrides):
    base = dict(
        kind="balanced", n1=40, n2=40, p0=0.15, deltas=(0.0, 0.8),
        stats=("cnb", "tri"), alpha=0.1, reps=8, null_reps=60, seed=12,
    )
    base.update(overrides)
    return SweepConfig(**base)


class TestPowerSweep:
    def test_reps_one_power_binary(self):
        rows = run_power_sweep(tiny_sweep(reps=1))
        assert all(row["power"] in (0.0, 1.0) for row in rows)
        assert all(row["se"] == 0.0 for row in rows)

    def test_strong_signal_detected(self):
        rows = run_power_sweep(tiny_sweep(reps=10, deltas=(0.0, 0.9), p0=0.2))
        by_key = {(r["stat"], r["delta"]): r["power"] for r in rows}
        assert by_key[("cnb", 0.9)] == 1.0
        assert by_key[("cnb", 0.0)] <= 0.5

    def test_csv_byte_identical_across_jobs(self, tmp_path):
        cfg1 = tiny_sweep(n_jobs=1)
        cfg2 = tiny_sweep(n_jobs=2)
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        run_power_sweep(cfg1, out=p1)
        run_power_sweep(cfg2, out=p2)
        assert p1.read_bytes() == p2.read_bytes()
        text = p1.read_text()
        assert text.startswith("#")
        assert "stat,delta,power,se" in text

    def test_empty_grid_rejected(self):
        with pytest.raises(ParameterError):
            tiny_sweep(deltas=())

    def test_centered_power_monotone_trend(self):
        # trend check: power of the centered statistic never drops by more
        # than twice the binomial noise as delta grows
        cfg = tiny_sweep(
            p0=0.2, deltas=(0.0, 0.3, 0.6, 0.9), stats=("cnb",), reps=30,
            null_reps=120, seed=44,
        )
        rows = [r for r in run_power_sweep(cfg) if r["stat"] == "cnb"]
        rows.sort(key=lambda r: r["delta"])
        for prev, cur in zip(rows, rows[1:]):
            noise = 2.0 * (prev["se"] + cur["se"] + 1.0 / cfg.reps)
            assert cur["power"] >= prev["power"] - noise


class TestNullScaling:
    def test_reps_one_single_value_rows(self):
        rows = run_null_scaling([60], "fixed_degree", 3.0, ["tri"], reps=1, seed=4)
        assert len(rows) == 5  # one row per reported quantile
        scaled = {row["scaled"] for row in rows}
        assert len(scaled) == 1  # all quantiles of a single draw coincide

    def test_shift_column_value(self):
        rows = run_null_scaling([80], "fixed_p", 0.2, ["tri"], reps=5, seed=2)
        n, p = 80, 0.2
        for row in rows:
            assert row["shifted"] == pytest.approx(
                row["scaled"] - n ** (2 / 3) / (n * p)
            )

    def test_bad_mode(self):
        with pytest.raises(ParameterError):
            run_null_scaling([50], "fixed_everything", 1.0, ["tri"], reps=1)


class TestVdvGrowth:
    def test_rows_and_slope(self, tmp_path):
        out = tmp_path / "vdv.csv"
        rows = run_vdv_growth("n^-1", [64, 128], reps=6, seed=5, out=out)
        assert [row["n"] for row in rows] == [64, 128]
        assert all(row["q25"] <= row["median"] <= row["q75"] for row in rows)
        assert rows[0]["slope"] == rows[1]["slope"]
        header = out.read_text().splitlines()[0]
        assert header.startswith("# p_mode=")

    def test_p_modes(self):
        for mode, n, expected in [
            ("constant", 50, 0.1),
            ("n^-1/3", 64, 64 ** (-1 / 3)),
            ("n^-1/2", 64, 0.125),
            ("n^-1", 60, 0.05),
        ]:
            rows = run_vdv_growth(mode, [n], reps=1, seed=0)
            assert rows[0]["p"] == pytest.approx(expected)


class TestApproxGap:
    def test_gap_rows_and_triangle_inequality(self):
        rows = run_approx_gap("n^-1/3", [80, 160], reps=5, seed=8)
        assert len(rows) == 2
        for row in rows:
            assert row["gap_mu1_yhx"] >= 0 and row["gap_yhx_lam1"] >= 0
        # per-replicate the three gaps obey the triangle inequality exactly
        g = sample_er(120, 0.2, 3)
        gap = y1hx1_gap(g, fit_model(g, 1))
        assert abs(gap.mu1 - gap.lam1) <= (
            abs(gap.mu1 - gap.y1hx1_closed) + abs(gap.y1hx1_closed - gap.lam1) + 1e-12
        )


class TestClusteringCorr:
    def test_no_signal_then_signal(self):
        cfg = tiny_sweep(p0=0.2, deltas=(0.0, 0.9), reps=6)
        rows = run_clustering_corr(cfg)
        by_key = {(r["embedding"], r["delta"]): r["corr"] for r in rows}
        assert by_key[("cnb", 0.0)] < 0.35
        assert by_key[("cnb", 0.9)] > 0.8

    def test_deterministic(self, tmp_path):
        cfg = tiny_sweep(p0=0.2, deltas=(0.5,), reps=4)
        p1, p2 = tmp_path / "c1.csv", tmp_path / "c2.csv"
        run_clustering_corr(cfg, out=p1)
        run_clustering_corr(cfg, out=p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_three_block_rejected(self):
        cfg = tiny_sweep()
        cfg.kind = "three_block"
        cfg.n3 = 30
        with pytest.raises(ParameterError):
            run_clustering_corr(cfg)
