"""Model fitting, spectral clustering and community-count estimation.

The sequential estimator raises K0 until the test stops rejecting; the
recursive estimator bi-partitions on rejection and returns the resulting
dendrogram. Subproblems derive their random streams from a hash of their
node set, so recursion order and parallel scheduling cannot change results.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .eig import REAL_EIG_RTOL, EigOptions, eig_leading, eigh_leading, leading_halfvector
from .errors import ParameterError
from .graphs import Graph
from .operators import ModelEstimate, centered_nb_operator, nb_operator
from .rng import DEFAULT_FIT_SEED, as_seed, node_set_master, stream
from .stats import (
    FAST_EIG,
    NullDistribution,
    TestOutcome,
    TestStatKind,
    bootstrap_null,
    compute_statistic,
    gof_test,
    simulate_null,
)

_EMBEDDINGS = ("adjacency_topk", "centered_nb_half")


@dataclass(frozen=True)
class Labels:
    """Block assignment with 1-based ids 1..k."""

    values: np.ndarray
    k: int

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.int64)
        object.__setattr__(self, "values", vals)
        if vals.min(initial=1) < 1 or vals.max(initial=self.k) > self.k:
            raise ParameterError("label ids must lie in {1..k}")


def estimate_p(g: Graph) -> float:
    """Empirical edge density 2m / (n(n-1))."""
    if g.n < 2:
        raise ParameterError("density needs n >= 2")
    return 2.0 * g.m / (g.n * (g.n - 1.0))


def estimate_blocks(g: Graph, labels) -> ModelEstimate:
    """Profile MLE Q-hat given labels: block-wise edge frequencies O_ab / n_ab.

    Empty pair classes get the clamp floor (flagged on the estimate as
    `empty_pair_classes`).
    """
    values = labels.values if isinstance(labels, Labels) else np.asarray(labels, np.int64)
    k = int(values.max())
    from .stats import _block_counts  # same counts as the likelihood statistic

    o, pairs = _block_counts(g, values - 1, k)
    lo = 1.0 / (g.n * (g.n - 1.0))
    qhat = np.divide(o, pairs, out=np.full_like(o, lo), where=pairs > 0)
    est = ModelEstimate(g.n, estimate_p(g), labels=values, qhat=qhat)
    est.empty_pair_classes = int((pairs == 0).sum())
    return est


def fit_model(g: Graph, k0: int, seed: int = DEFAULT_FIT_SEED,
              embedding: str = "adjacency_topk") -> ModelEstimate:
    """Fit the null model of order k0 the way the tests expect it.

    k0 = 1 is the constant-density estimate; k0 > 1 clusters with
    spectral_labels and takes the profile MLE.
    """
    if k0 == 1:
        return ModelEstimate.constant(g.n, estimate_p(g))
    labels = spectral_labels(g, k0, embedding, seed=seed)
    return estimate_blocks(g, labels)


def _kmeans_once(x: np.ndarray, k: int, rng) -> np.ndarray:
    """One k-means run: k-means++ seeding, <=100 Lloyd iterations."""
    n = x.shape[0]
    centers = np.empty((k, x.shape[1]))
    centers[0] = x[rng.integers(n)]
    d2 = ((x - centers[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total <= 0:
            centers[j] = x[rng.integers(n)]
        else:
            centers[j] = x[rng.choice(n, p=d2 / total)]
        d2 = np.minimum(d2, ((x - centers[j]) ** 2).sum(axis=1))
    assign = np.zeros(n, dtype=np.int64)
    for _ in range(100):
        dist = ((x[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        new_assign = dist.argmin(axis=1)
        for j in range(k):
            mask = new_assign == j
            if mask.any():
                centers[j] = x[mask].mean(axis=0)
            else:
                # empty cluster: reseed at the point farthest from its center
                far = dist.min(axis=1).argmax()
                centers[j] = x[far]
                new_assign[far] = j
        if np.array_equal(new_assign, assign):
            break
        assign = new_assign
    return assign


def _kmeans(x: np.ndarray, k: int, seed: int, restarts: int = 20) -> np.ndarray:
    """Best of `restarts` k-means runs with fixed per-restart sub-seeds."""
    best, best_inertia = None, np.inf
    for r in range(restarts):
        assign = _kmeans_once(x, k, stream((seed, r)))
        inertia = 0.0
        for j in range(k):
            mask = assign == j
            if mask.any():
                c = x[mask].mean(axis=0)
                inertia += ((x[mask] - c) ** 2).sum()
        if inertia < best_inertia - 1e-12:
            best, best_inertia = assign, inertia
    return best


def spectral_labels(g: Graph, k: int, embedding: str = "adjacency_topk",
                    seed: int = 0, eig_opts: EigOptions | None = None) -> Labels:
    """Cluster nodes on a spectral embedding.

    adjacency_topk embeds into the top-k adjacency eigenvectors;
    centered_nb_half (k = 2 only) uses the first half of the top eigenvector
    of the centered non-backtracking operator under the constant-density fit.
    """
    if k < 2:
        raise ParameterError("spectral_labels needs K >= 2")
    if embedding not in _EMBEDDINGS:
        raise ParameterError(f"unknown embedding {embedding!r}")
    base = eig_opts or FAST_EIG
    if embedding == "centered_nb_half":
        if k != 2:
            raise ParameterError("centered_nb_half embedding is binary (K = 2)")
        est = ModelEstimate.constant(g.n, estimate_p(g))
        spec = eig_leading(centered_nb_operator(g, est), replace(base, k=1))
        mu1 = spec.values[0]
        if abs(mu1.imag) > REAL_EIG_RTOL * max(1.0, abs(mu1)):
            warnings.warn(
                "leading centered-NB eigenvalue is a complex pair; using the "
                "real part of its eigenvector for the binary split",
                stacklevel=2,
            )
        x = leading_halfvector(spec, 0)[:, None]
    else:
        spec = eigh_leading(g.adj, replace(base, k=k))
        x = spec.vectors[:, :k].real
    assign = _kmeans(x, k, seed)
    return Labels(values=assign + 1, k=k)


def label_correlation(labels, truth) -> float:
    """|Pearson correlation| of two binary labelings under a +-1 encoding."""
    a = labels.values if isinstance(labels, Labels) else np.asarray(labels)
    b = truth.values if isinstance(truth, Labels) else np.asarray(truth)
    if a.shape != b.shape:
        raise ParameterError("labelings must have equal length")
    out = []
    for v in (a, b):
        ids = np.unique(v)
        if ids.size != 2:
            raise ParameterError("label_correlation expects binary labelings")
        out.append(np.where(v == ids[0], -1.0, 1.0))
    x, y = out
    return float(abs(np.corrcoef(x, y)[0, 1]))


def _check_null_choice(null: str, stat: TestStatKind) -> None:
    if null not in ("tw", "mc"):
        raise ParameterError("null source must be 'tw' or 'mc'")
    if null == "tw" and stat.name not in ("centered_nb", "normalized_adj"):
        raise ParameterError(
            "the Tracy-Widom threshold only applies to the cnb and nadj statistics"
        )


@dataclass
class SequentialConfig:
    stat: TestStatKind = field(default_factory=lambda: TestStatKind("centered_nb"))
    alpha: float = 0.05
    null: str = "mc"  # 'tw' (K0=1 only) or 'mc'
    kmax: int = 10
    null_reps: int = 2000
    seed: int = 0
    n_jobs: int = 1


@dataclass
class SequentialResult:
    k: int
    outcomes: list
    truncated: bool = False


def estimate_k_sequential(g: Graph, cfg: SequentialConfig) -> SequentialResult:
    """Raise K0 from 1 until the first non-rejection (or kmax, flagged).

    K0 = 1 may use the Tracy-Widom null; K0 > 1 always uses the bootstrap
    null under the fitted model, since the limit law only covers K0 = 1.
    """
    if cfg.kmax < 1:
        raise ParameterError("kmax must be >= 1")
    _check_null_choice(cfg.null, cfg.stat)
    master = as_seed(cfg.seed).master
    outcomes = []
    for k0 in range(1, cfg.kmax + 1):
        est = fit_model(g, k0)
        value = compute_statistic(g, est, cfg.stat, k0)
        if k0 == 1 and cfg.null == "tw":
            null = NullDistribution.tw1_reference()
        elif k0 == 1:
            null = simulate_null(
                cfg.stat, g.n, est.phat, 1, reps=cfg.null_reps,
                seed=(master, k0), n_jobs=cfg.n_jobs,
            )
        else:
            null = bootstrap_null(
                g, est, cfg.stat, reps=cfg.null_reps,
                seed=(master, k0), n_jobs=cfg.n_jobs,
            )
        outcome = gof_test(value, null, cfg.alpha, g.n)
        outcome = replace(outcome, k0=k0)
        outcomes.append(outcome)
        if not outcome.reject:
            return SequentialResult(k=k0, outcomes=outcomes)
    return SequentialResult(k=cfg.kmax, outcomes=outcomes, truncated=True)


@dataclass
class DendroNode:
    """One node of the recursive bi-partitioning tree."""

    members: np.ndarray
    outcome: TestOutcome | None = None
    children: tuple = ()
    flag: str | None = None  # 'min_size' | 'degenerate' | None

    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list:
        if self.is_leaf():
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def to_dict(self) -> dict:
        out = {"members": [int(x) for x in self.members]}
        if self.outcome is not None:
            out["stat"] = self.outcome.statistic
            out["threshold"] = self.outcome.threshold
            out["reject"] = self.outcome.reject
        if self.flag:
            out["flag"] = self.flag
        out["children"] = [c.to_dict() for c in self.children]
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


@dataclass
class RecursiveConfig:
    stat: TestStatKind = field(default_factory=lambda: TestStatKind("centered_nb"))
    alpha: float = 0.001
    null: str = "mc"  # 'tw' or 'mc'
    min_size: int = 20
    null_reps: int = 2000
    embedding: str = "centered_nb_half"
    seed: int = 0
    n_jobs: int = 1


def estimate_k_recursive(g: Graph, cfg: RecursiveConfig) -> DendroNode:
    """Recursive bi-partitioning driven by the K0 = 1 goodness-of-fit test.

    Each subgraph is tested against its own null; on rejection the subgraph
    splits on the configured binary embedding and both sides recurse. Leaves
    are non-rejections, undersized node sets, or degenerate splits.
    """
    if cfg.min_size < 2:
        raise ParameterError("min_size must be >= 2")
    _check_null_choice(cfg.null, cfg.stat)
    master = as_seed(cfg.seed).master

    def visit(members: np.ndarray) -> DendroNode:
        if members.size < cfg.min_size:
            return DendroNode(members=members, flag="min_size")
        sub = g.subgraph(members)
        sub_master = node_set_master(master, members)
        est = fit_model(sub, 1)
        value = compute_statistic(sub, est, cfg.stat, 1)
        if cfg.null == "tw":
            null = NullDistribution.tw1_reference()
        else:
            null = simulate_null(
                cfg.stat, sub.n, est.phat, 1, reps=cfg.null_reps,
                seed=sub_master, n_jobs=cfg.n_jobs,
            )
        outcome = gof_test(value, null, cfg.alpha, sub.n)
        if not outcome.reject:
            return DendroNode(members=members, outcome=outcome)
        labels = spectral_labels(sub, 2, cfg.embedding, seed=sub_master)
        left = members[labels.values == 1]
        right = members[labels.values == 2]
        if left.size == 0 or right.size == 0:
            return DendroNode(members=members, outcome=outcome, flag="degenerate")
        return DendroNode(
            members=members, outcome=outcome, children=(visit(left), visit(right))
        )

    return visit(np.arange(g.n, dtype=np.int64))


def count_nb_informative(g: Graph, eig_opts: EigOptions | None = None) -> int:
    """Count communities from the real point spectrum of H outside the bulk.

    K-hat = 1 + #{ real mu above the bulk radius sqrt(mu_1(H)), excluding one
    copy of the largest }. On large graphs the leading-eigenvalue batch grows
    until it reaches below the bulk edge.
    """
    base = eig_opts or EigOptions()
    dim = 2 * g.n
    if dim <= base.dense_threshold:
        spec = eig_leading(nb_operator(g), replace(base, k=dim))
    else:
        k = min(8, dim - 3)
        kmax = min(dim - 3, 128)
        while True:
            spec = eig_leading(nb_operator(g), replace(base, k=k))
            radius = np.sqrt(max(spec.values[0].real, 0.0))
            if spec.values[-1].real < radius or k >= kmax:
                break
            k = min(2 * k, kmax)
    mu1 = spec.values[0].real
    radius = np.sqrt(max(mu1, 0.0))
    reals = np.sort(spec.real_values())[::-1]
    outside = reals[reals > radius]
    return 1 + max(outside.size - 1, 0)


@dataclass(frozen=True)
class ExpectationEigs:
    """Closed-form nontrivial eigenvalues of E[A] and E[A] - P0 (two-block model)."""

    lam1_ea: float
    lam2_ea: float
    lam1_centered: float
    lam2_centered: float


def expectation_eigs_closed_form(p: float, k: float, delta: float, n: int,
                                 p0: float) -> ExpectationEigs:
    """Nontrivial eigenvalues of the two-block mean matrix and its centering.

    The model has block fractions (p, 1-p), within-block probabilities
    p0 (1 + x delta) and p0 (1 + k x delta) with x = 2 p (1-p)/(p^2 + k (1-p)^2),
    and cross probability p0 (1 - delta); P0 is the constant p0 matrix.
    Diagonal entries are kept (no self-loop correction).
    """
    if not (0.0 < p < 1.0):
        raise ParameterError("block fraction p must lie in (0, 1)")
    if k < 0:
        raise ParameterError("k must be nonnegative")
    if not (0.0 <= delta < 1.0):
        raise ParameterError("delta must lie in [0, 1)")
    q = 1.0 - p
    x = 2.0 * p * q / (p * p + k * q * q)
    trace_term = 1.0 + delta * x * (p + k * q)
    disc = np.sqrt((p - q + (p - k * q) * x * delta) ** 2 + 4.0 * p * q * (1.0 - delta) ** 2)
    lam1_ea = 0.5 * n * p0 * (trace_term + disc)
    lam2_ea = 0.5 * n * p0 * (trace_term - disc)
    disc_c = np.sqrt(((p - k * q) * x) ** 2 + 4.0 * p * q)
    lam1_c = 0.5 * n * p0 * delta * (x * (p + k * q) + disc_c)
    lam2_c = 0.5 * n * p0 * delta * (x * (p + k * q) - disc_c)
    return ExpectationEigs(float(lam1_ea), float(lam2_ea), float(lam1_c), float(lam2_c))


@dataclass(frozen=True)
class BlockSpectrum:
    """Spectrum of a block-constant matrix: reduced eigenvalues + deflated multiplicities."""

    reduced: np.ndarray
    deflated: tuple  # ((value, multiplicity), ...)

    def full(self) -> np.ndarray:
        parts = [self.reduced]
        parts.extend(np.full(mult, val) for val, mult in self.deflated)
        return np.sort(np.concatenate(parts))[::-1]


def block_matrix_eigs(bvals, sizes, ell) -> BlockSpectrum:
    """Spectrum of the block matrix with blocks B_ab 1 1' and diagonal B_aa (1 1' - l_a I).

    K eigenvalues come from the K x K matrix with entries sqrt(n_a n_b) B_ab
    off the diagonal and B_aa (n_a - l_a) on it; the rest are -l_a B_aa with
    multiplicity n_a - 1.
    """
    b = np.asarray(bvals, dtype=float)
    sizes = np.asarray(sizes, dtype=np.int64)
    ell = np.asarray(ell, dtype=float)
    k = b.shape[0]
    if b.shape != (k, k) or not np.allclose(b, b.T, atol=1e-14):
        raise ParameterError("bvals must be symmetric KxK")
    if sizes.shape != (k,) or ell.shape != (k,):
        raise ParameterError("sizes and ell must have length K")
    if sizes.min() < 1:
        raise ParameterError("block sizes must be >= 1")
    root = np.sqrt(sizes.astype(float))
    reduced = np.outer(root, root) * b
    np.fill_diagonal(reduced, b.diagonal() * (sizes - ell))
    vals = np.linalg.eigvalsh(reduced)[::-1]
    deflated = tuple(
        (float(-ell[a] * b[a, a]), int(sizes[a] - 1)) for a in range(k) if sizes[a] > 1
    )
    return BlockSpectrum(reduced=vals, deflated=deflated)


def assemble_block_matrix(bvals, sizes, ell) -> np.ndarray:
    """Dense counterpart of block_matrix_eigs, for oracle cross-checks."""
    b = np.asarray(bvals, dtype=float)
    sizes = np.asarray(sizes, dtype=np.int64)
    ell = np.asarray(ell, dtype=float)
    n = int(sizes.sum())
    out = np.empty((n, n))
    offs = np.concatenate([[0], np.cumsum(sizes)])
    for a in range(len(sizes)):
        for c in range(len(sizes)):
            block = np.full((sizes[a], sizes[c]), b[a, c])
            if a == c:
                block -= ell[a] * b[a, a] * np.eye(sizes[a])
            out[offs[a]:offs[a + 1], offs[c]:offs[c + 1]] = block
    return out
