"""Batch experiments: power sweeps, null scaling, growth diagnostics.

Each runner is a pure function of its config: replicate i of grid cell c
draws from the stream (master, cell_tag, i), rows are emitted in grid order,
and floats are written with repr(), so rerunning with any worker count
reproduces the CSV byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ParameterError
from .estimate import fit_model
from .graphs import Graph, build_q_delta, sample_er, sample_sbm
from .eig import EigOptions, eig_leading, eigh_leading, leading_halfvector
from .operators import (
    ModelEstimate,
    centered_adjacency,
    centered_nb_operator,
    nb_operator,
)
from .rng import as_seed, derive_master
from .stats import (
    TestStatKind,
    _map_indexed,
    compute_statistic,
    simulate_null,
    v1_d_v1,
    y1hx1_gap,
)

DEFAULT_DELTA_GRID = tuple(np.round(np.arange(0.0, 1.0, 0.02), 10))


@dataclass
class SweepConfig:
    """Alternative-model sweep: family, sizes, density, grids and budgets."""

    kind: str = "balanced"
    n1: int = 250
    n2: int = 250
    n3: int | None = None
    p0: float = 0.01
    deltas: tuple = DEFAULT_DELTA_GRID
    stats: tuple = ("cnb", "nadj", "nb")
    alpha: float = 0.05
    reps: int = 1000
    null_reps: int = 2000
    seed: int = 0
    n_jobs: int = 1

    def __post_init__(self):
        if len(self.deltas) == 0 or len(self.stats) == 0:
            raise ParameterError("delta grid and statistic list must be nonempty")
        if self.reps < 1:
            raise ParameterError("reps must be >= 1")

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + (self.n3 or 0)

    def header(self) -> dict:
        out = {
            "family": self.kind, "n1": self.n1, "n2": self.n2, "p0": self.p0,
            "alpha": self.alpha, "reps": self.reps, "null_reps": self.null_reps,
            "seed": self.seed,
        }
        if self.n3 is not None:
            out["n3"] = self.n3
        return out


def write_csv(path, rows, columns, header: dict | None = None) -> None:
    """Write rows as CSV with a '#'-prefixed key=value header block."""
    with open(path, "wt", encoding="utf-8", newline="\n") as fh:
        for key, val in (header or {}).items():
            text = repr(float(val)) if isinstance(val, (float, np.floating)) else str(val)
            fh.write(f"# {key}={text}\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            cells = []
            for col in columns:
                v = row[col]
                cells.append(repr(float(v)) if isinstance(v, (float, np.floating)) else str(v))
            fh.write(",".join(cells) + "\n")


def _binomial_se(power: float, reps: int) -> float:
    return float(np.sqrt(power * (1.0 - power) / reps))


def run_power_sweep(cfg: SweepConfig, out=None):
    """Rejection rate of each statistic across the delta grid.

    Thresholds come from a Monte-Carlo null under G(n, p0) per statistic;
    each (stat, delta) cell then counts threshold exceedances over cfg.reps
    fresh alternatives. Rows: stat, delta, power, se.
    """
    master = as_seed(cfg.seed).master
    kinds = [TestStatKind.parse(s) for s in cfg.stats]
    thresholds = {}
    for kj, kind in enumerate(kinds):
        null = simulate_null(
            kind, cfg.n, cfg.p0, 1, reps=cfg.null_reps,
            seed=derive_master(master, 0x4E11, kj), n_jobs=cfg.n_jobs,
        )
        thresholds[kind.key()] = null.quantile(1.0 - cfg.alpha)

    rows = []
    for di, delta in enumerate(cfg.deltas):
        spec = build_q_delta(cfg.kind, cfg.n1, cfg.n2, cfg.n3, cfg.p0, float(delta))
        cell_master = derive_master(master, 0xA17, di)

        def one(i):
            gi = sample_sbm(spec, (cell_master, i))
            est = fit_model(gi, 1)
            return [compute_statistic(gi, est, kind, 1) for kind in kinds]

        values = np.asarray(_map_indexed(one, cfg.reps, cfg.n_jobs))
        for kj, kind in enumerate(kinds):
            power = float(np.mean(values[:, kj] > thresholds[kind.key()]))
            rows.append(
                {
                    "stat": kind.key(),
                    "delta": float(delta),
                    "power": power,
                    "se": _binomial_se(power, cfg.reps),
                }
            )
    if out is not None:
        write_csv(out, rows, ["stat", "delta", "power", "se"], cfg.header())
    return rows


NULL_QUANTILES = (0.05, 0.25, 0.5, 0.75, 0.95)


def run_null_scaling(ns, density_mode: str, density_value: float, stats,
                     reps: int = 2000, seed=0, n_jobs: int = 1, out=None):
    """Null distributions across n with the n^(2/3) edge scaling.

    density_mode 'fixed_degree' keeps (n-1) p = density_value; 'fixed_p'
    keeps p = density_value. Rows report empirical quantiles of
    n^(2/3) (stat - 2) and the same location after the (np)^-1 deterministic
    shift.
    """
    if density_mode not in ("fixed_degree", "fixed_p"):
        raise ParameterError("density_mode must be fixed_degree or fixed_p")
    master = as_seed(seed).master
    rows = []
    for ni, n in enumerate(ns):
        p = density_value / (n - 1.0) if density_mode == "fixed_degree" else density_value
        for kj, kind_key in enumerate(stats):
            kind = TestStatKind.parse(kind_key)
            null = simulate_null(
                kind, n, p, 1, reps=reps,
                seed=derive_master(master, ni, kj), n_jobs=n_jobs,
            )
            scaled = n ** (2.0 / 3.0) * (null.values - 2.0)
            shifted = scaled - n ** (2.0 / 3.0) / (n * p)
            for q in NULL_QUANTILES:
                rows.append(
                    {
                        "n": int(n),
                        "stat": kind.key(),
                        "quantile": q,
                        "scaled": float(np.quantile(scaled, q)),
                        "shifted": float(np.quantile(shifted, q)),
                    }
                )
    if out is not None:
        write_csv(
            out, rows, ["n", "stat", "quantile", "scaled", "shifted"],
            {"density_mode": density_mode, "density_value": density_value,
             "reps": reps, "seed": as_seed(seed).master},
        )
    return rows


_P_MODES = {
    "constant": lambda n: 0.1,
    "n^-1/3": lambda n: n ** (-1.0 / 3.0),
    "n^-1/2": lambda n: n ** (-1.0 / 2.0),
    "n^-1": lambda n: 3.0 / n,
}


def _p_of(mode: str, n: int) -> float:
    if mode not in _P_MODES:
        raise ParameterError(f"p mode must be one of {sorted(_P_MODES)}")
    return _P_MODES[mode](n)


def run_vdv_growth(p_mode: str, ns, reps: int = 50, seed=0, n_jobs: int = 1, out=None):
    """Growth of |v1' D-centered v1| across n for a density scaling mode.

    Rows carry the median and quartiles per n; the log-log slope of the
    median across the grid is reported in every row (column `slope`).
    """
    master = as_seed(seed).master
    rows = []
    medians = []
    for ni, n in enumerate(ns):
        p = _p_of(p_mode, n)
        cell = derive_master(master, 0xD7, ni)

        def one(i):
            gi = sample_er(n, p, (cell, i))
            est = fit_model(gi, 1)
            return abs(v1_d_v1(gi, est, centered=True))

        vals = np.asarray(_map_indexed(one, reps, n_jobs))
        q25, q50, q75 = np.quantile(vals, [0.25, 0.5, 0.75])
        medians.append(q50)
        rows.append(
            {"n": int(n), "p": float(p), "median": float(q50),
             "q25": float(q25), "q75": float(q75)}
        )
    if len(rows) >= 2:
        slope = float(
            np.polyfit(
                np.log(np.asarray(ns, float)), np.log(np.maximum(medians, 1e-300)), 1
            )[0]
        )
    else:
        slope = float("nan")
    for row in rows:
        row["slope"] = slope
    if out is not None:
        write_csv(
            out, rows, ["n", "p", "median", "q25", "q75", "slope"],
            {"p_mode": p_mode, "reps": reps, "seed": master},
        )
    return rows


def run_approx_gap(p_mode: str, ns, reps: int = 50, seed=0, n_jobs: int = 1, out=None):
    """Pairwise gaps between mu_1, its bilinear approximation, and lam_1.

    Per n: medians of |mu1 - y1'Hx1|, |y1'Hx1 - lam1| and |mu1 - lam1|.
    """
    master = as_seed(seed).master
    rows = []
    for ni, n in enumerate(ns):
        p = _p_of(p_mode, n)
        cell = derive_master(master, 0xAB, ni)

        def one(i):
            gi = sample_er(n, p, (cell, i))
            est = fit_model(gi, 1)
            gap = y1hx1_gap(gi, est)
            return (
                abs(gap.mu1 - gap.y1hx1_closed),
                abs(gap.y1hx1_closed - gap.lam1),
                abs(gap.mu1 - gap.lam1),
            )

        vals = np.asarray(_map_indexed(one, reps, n_jobs))
        med = np.median(vals, axis=0)
        rows.append(
            {"n": int(n), "p": float(p), "gap_mu1_yhx": float(med[0]),
             "gap_yhx_lam1": float(med[1]), "gap_mu1_lam1": float(med[2])}
        )
    if out is not None:
        write_csv(
            out, rows, ["n", "p", "gap_mu1_yhx", "gap_yhx_lam1", "gap_mu1_lam1"],
            {"p_mode": p_mode, "reps": reps, "seed": master},
        )
    return rows


EMBEDDING_KEYS = ("cadj", "nb", "cnb")


def _informative_vector(g: Graph, est: ModelEstimate, key: str,
                        opts: EigOptions) -> np.ndarray:
    if key == "cadj":
        spec = eigh_leading(centered_adjacency(g, est), opts)
        return spec.vectors[:, 0].real
    if key == "nb":
        spec = eig_leading(nb_operator(g), replace(opts, k=2))
        return leading_halfvector(spec, 1)
    if key == "cnb":
        spec = eig_leading(centered_nb_operator(g, est), opts)
        return leading_halfvector(spec, 0)
    raise ParameterError(f"unknown embedding key {key!r}")


def run_clustering_corr(cfg: SweepConfig, embeddings=EMBEDDING_KEYS, out=None):
    """Correlation of informative eigenvectors with the true binary label.

    For each delta and embedding: mean of |corr(vector, +-1 truth)| over
    cfg.reps replicates, with its standard error.
    """
    if cfg.kind == "three_block":
        raise ParameterError("clustering correlation is defined for two-block families")
    master = as_seed(cfg.seed).master
    opts = EigOptions(k=1)
    rows = []
    for di, delta in enumerate(cfg.deltas):
        spec = build_q_delta(cfg.kind, cfg.n1, cfg.n2, None, cfg.p0, float(delta))
        truth = np.where(spec.memberships == 1, -1.0, 1.0)
        cell = derive_master(master, 0xC0, di)

        def one(i):
            gi = sample_sbm(spec, (cell, i))
            est = fit_model(gi, 1)
            out_row = []
            for key in embeddings:
                vec = _informative_vector(gi, est, key, opts)
                sd = vec.std()
                corr = 0.0 if sd == 0 else abs(np.corrcoef(vec, truth)[0, 1])
                out_row.append(corr)
            return out_row

        vals = np.asarray(_map_indexed(one, cfg.reps, cfg.n_jobs))
        for kj, key in enumerate(embeddings):
            mean = float(vals[:, kj].mean())
            se = float(vals[:, kj].std(ddof=1) / np.sqrt(cfg.reps)) if cfg.reps > 1 else 0.0
            rows.append({"embedding": key, "delta": float(delta), "corr": mean, "se": se})
    if out is not None:
        write_csv(out, rows, ["embedding", "delta", "corr", "se"], cfg.header())
    return rows
