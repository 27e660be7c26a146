"""Test statistics, reference null distributions and the decision rule.

Every statistic is oriented so that large values are evidence against the
null (the Bethe-Hessian eigenvalue is negated for this reason), and every
statistic is a deterministic, seed-free function of (graph, estimate).

Monte-Carlo nulls assign replicate i the Philox stream (master, i), so the
empirical distribution is identical for any worker count.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
import scipy.sparse as sp

from .eig import EigOptions, eig_leading, eigh_leading, eigh_smallest
from .errors import ParameterError, ParseError
from .graphs import BlockModelSpec, Graph, sample_er, sample_sbm
from .operators import (
    CenteredAdjacency,
    ModelEstimate,
    bethe_hessian,
    bh_r_a,
    bh_r_m,
    centered_adjacency,
    centered_nb_operator,
    nb_operator,
    normalized_adjacency,
    rescaled_split,
)
from .rng import DEFAULT_FIT_SEED, as_seed
from .tw1 import tw1_quantile

# Monte-Carlo statistic paths switch to Krylov well below the public
# dense_threshold default: a dense nonsymmetric solve at dim 600 costs ~100x
# one ARPACK leading-pair solve, which dominates null simulations otherwise.
FAST_EIG = EigOptions(dense_threshold=128)
_STAT_NAMES = (
    "centered_nb",
    "normalized_adj",
    "nb_plain",
    "bethe_hessian",
    "likelihood_ratio",
    "triangle",
)
_KEY_TO_NAME = {
    "cnb": "centered_nb",
    "nadj": "normalized_adj",
    "nb": "nb_plain",
    "lr": "likelihood_ratio",
    "tri": "triangle",
}
_NAME_TO_KEY = {v: k for k, v in _KEY_TO_NAME.items()}


@dataclass(frozen=True)
class TestStatKind:
    """One of the six test statistics; Bethe-Hessian carries its scale choice."""

    __test__ = False  # not a pytest collectable despite the Test* name

    name: str
    r_choice: str = ""  # 'ra' | 'rm' | 'user', for bethe_hessian only
    r_value: float | None = None

    def __post_init__(self):
        if self.name not in _STAT_NAMES:
            raise ParameterError(f"unknown statistic {self.name!r}")
        if self.name == "bethe_hessian":
            if self.r_choice not in ("ra", "rm", "user"):
                raise ParameterError("bethe_hessian needs r_choice in {ra, rm, user}")
            if (self.r_choice == "user") != (self.r_value is not None):
                raise ParameterError("r_value must be given exactly for r_choice='user'")
        elif self.r_choice or self.r_value is not None:
            raise ParameterError(f"{self.name} takes no r parameters")

    @classmethod
    def parse(cls, key: str) -> "TestStatKind":
        """Parse a CLI key: cnb, nadj, nb, bh:ra, bh:rm, bh:r=<value>, lr, tri."""
        key = key.strip()
        if key in _KEY_TO_NAME:
            return cls(_KEY_TO_NAME[key])
        if key.startswith("bh:"):
            tail = key[3:]
            if tail in ("ra", "rm"):
                return cls("bethe_hessian", r_choice=tail)
            if tail.startswith("r="):
                try:
                    return cls("bethe_hessian", r_choice="user", r_value=float(tail[2:]))
                except ValueError as exc:
                    raise ParameterError(f"bad r value in {key!r}") from exc
        raise ParameterError(f"unknown statistic key {key!r}")

    def key(self) -> str:
        if self.name != "bethe_hessian":
            return _NAME_TO_KEY[self.name]
        if self.r_choice == "user":
            return f"bh:r={self.r_value:g}"
        return f"bh:{self.r_choice}"

    def resolve_r(self, g: Graph) -> float:
        if self.r_choice == "ra":
            return bh_r_a(g)
        if self.r_choice == "rm":
            return bh_r_m(g)
        return float(self.r_value)


def _density_denominator(est: ModelEstimate) -> float:
    lo, hi = est.clamp_bounds()
    p = min(max(est.phat, lo), hi)
    return np.sqrt((est.n - 1.0) * p * (1.0 - p))


def compute_statistic(g: Graph, est: ModelEstimate, kind: TestStatKind, k0: int = 1,
                      eig_opts: EigOptions | None = None) -> float:
    """Evaluate one goodness-of-fit statistic for H0: K = k0.

    centered_nb   Re mu_1(centered H) / sqrt((n-1) p (1-p))
    normalized_adj lambda_1 of the normalized adjacency
    nb_plain      Re mu_{k0+1}(H) / sqrt(mu_1(H))  (bulk-radius scaling)
    bethe_hessian -(k0+1)-th smallest eigenvalue of H(r)
    likelihood_ratio  L_{k0, k0+1} at profile MLEs
    triangle      sqrt(triangle frequency) - sqrt(p^3)
    """
    if est.k0 != k0:
        raise ParameterError(f"estimate was fitted for K0={est.k0}, not {k0}")
    base = eig_opts or FAST_EIG
    if kind.name == "centered_nb":
        spec = eig_leading(centered_nb_operator(g, est), replace(base, k=1))
        return float(spec.values[0].real) / _density_denominator(est)
    if kind.name == "normalized_adj":
        spec = eigh_leading(normalized_adjacency(g, est), replace(base, k=1))
        return float(spec.values[0].real)
    if kind.name == "nb_plain":
        spec = eig_leading(nb_operator(g), replace(base, k=k0 + 1))
        mu1 = max(float(spec.values[0].real), 1e-12)
        return float(spec.values[k0].real) / np.sqrt(mu1)
    if kind.name == "bethe_hessian":
        r = kind.resolve_r(g)
        spec = eigh_smallest(bethe_hessian(g, r), replace(base, k=k0 + 1))
        return -float(spec.values[k0].real)
    if kind.name == "likelihood_ratio":
        from .estimate import spectral_labels  # deferred: estimate imports stats

        labels0 = est.labels if est.labels is not None else np.ones(g.n, dtype=np.int64)
        labels1 = spectral_labels(g, k0 + 1, "adjacency_topk", seed=DEFAULT_FIT_SEED).values
        return likelihood_ratio(g, labels0, labels1)
    if kind.name == "triangle":
        return triangle_statistic(g)
    raise ParameterError(f"unhandled statistic {kind.name!r}")


def triangle_statistic(g: Graph) -> float:
    """sqrt of the empirical triangle frequency minus sqrt(p-hat^3).

    The frequency is tr(A^3) / (6 C(n,3)); tr(A^3) is exact (integer counts
    in float64).
    """
    n = g.n
    if n < 3:
        raise ParameterError("triangle statistic needs n >= 3")
    tr_a3 = float(((g.adj @ g.adj) * g.adj).sum())
    t_hat = tr_a3 / (6.0 * (n * (n - 1) * (n - 2) / 6.0))
    phat = 2.0 * g.m / (n * (n - 1.0))
    return float(np.sqrt(t_hat) - np.sqrt(phat**3))


def _block_counts(g: Graph, labels0: np.ndarray, k: int):
    """Ordered-pair edge counts O_ab and pair counts n_ab for a labeling."""
    n = g.n
    member = sp.csr_array((np.ones(n), (np.arange(n), labels0)), shape=(n, k))
    o = (member.T @ g.adj @ member).toarray()
    sizes = np.bincount(labels0, minlength=k).astype(float)
    pairs = np.outer(sizes, sizes) - np.diag(sizes)
    return o, pairs


def _half_log_lik(g: Graph, labels, k: int, clamp_lo: float, clamp_hi: float):
    labels0 = np.asarray(labels, dtype=np.int64) - 1
    if labels0.size != g.n or labels0.min() < 0 or labels0.max() >= k:
        raise ParameterError("labels must cover the node set with ids in {1..K}")
    o, pairs = _block_counts(g, labels0, k)
    qhat = np.divide(o, pairs, out=np.zeros_like(o), where=pairs > 0)
    empty = int((pairs == 0).sum())
    qc = np.clip(qhat, clamp_lo, clamp_hi)
    # 0*log0 = 0 by convention: empty pair classes contribute nothing
    terms = np.where(
        pairs > 0, o * np.log(qc) + (pairs - o) * np.log1p(-qc), 0.0
    )
    return 0.5 * terms.sum(), empty


def likelihood_ratio(g: Graph, labels0, labels1, details: bool = False):
    """Log likelihood ratio of a (K0+1)-block fit over a K0-block fit.

    Both likelihoods are evaluated at their profile MLEs Q-hat = O_ab / n_ab
    (clamped), with the square-root exponent that reduces the ordered-pair
    product to the usual Bernoulli likelihood over unordered pairs.
    """
    labels0 = np.asarray(labels0, dtype=np.int64)
    labels1 = np.asarray(labels1, dtype=np.int64)
    k0, k1 = int(labels0.max()), int(labels1.max())
    lo = 1.0 / (g.n * (g.n - 1.0))
    ll0, empty0 = _half_log_lik(g, labels0, k0, lo, 1.0 - lo)
    ll1, empty1 = _half_log_lik(g, labels1, k1, lo, 1.0 - lo)
    value = float(ll1 - ll0)
    if details:
        return value, {"empty_pair_classes": empty0 + empty1}
    return value


@dataclass
class NullDistribution:
    """Reference distribution of a statistic under the null.

    kind 'tw1' is the Tracy-Widom limit (no stored sample); 'empirical' holds
    the sorted Monte-Carlo sample.
    """

    kind: str
    values: np.ndarray | None = None
    reps: int = 0
    seed: int | None = None
    stat: str | None = None
    n: int | None = None
    p: float | None = None
    k0: int = 1
    low_reps: bool = False

    @classmethod
    def tw1_reference(cls) -> "NullDistribution":
        return cls(kind="tw1")

    @classmethod
    def from_sample(cls, sample, **meta) -> "NullDistribution":
        values = np.sort(np.asarray(sample, dtype=float))
        return cls(
            kind="empirical",
            values=values,
            reps=values.size,
            low_reps=values.size < 100,
            **meta,
        )

    def quantile(self, q: float) -> float:
        if self.kind == "tw1":
            return tw1_quantile(q)
        if self.values is None or self.values.size == 0:
            raise ParameterError("empirical null has no sample")
        return float(np.quantile(self.values, q))

    def to_csv(self, path) -> None:
        if self.kind != "empirical":
            raise ParameterError("only empirical nulls are serialized")
        with open(path, "wt", encoding="utf-8", newline="\n") as fh:
            fh.write("# kind,n,p,K0,reps,seed\n")
            p_repr = "None" if self.p is None else repr(float(self.p))
            fh.write(
                f"# {self.stat},{self.n},{p_repr},{self.k0},{self.reps},{self.seed}\n"
            )
            for v in self.values:
                fh.write(f"{float(v)!r}\n")

    @classmethod
    def from_csv(cls, path) -> "NullDistribution":
        with open(path, "rt", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        if len(lines) < 2 or not lines[0].startswith("#") or not lines[1].startswith("#"):
            raise ParseError("missing null-distribution header lines", 1)
        fields = [x.strip() for x in lines[1][1:].split(",")]
        if len(fields) != 6:
            raise ParseError("header must carry kind,n,p,K0,reps,seed", 2)
        stat, n, p, k0, reps, seed = fields
        values = np.array([float(x) for x in lines[2:] if x.strip()])
        out = cls.from_sample(
            values,
            stat=stat or None,
            n=int(n) if n != "None" else None,
            p=float(p) if p != "None" else None,
            k0=int(k0),
            seed=int(seed) if seed != "None" else None,
        )
        if out.reps != int(reps):
            raise ParseError(f"header says {reps} values, file has {out.reps}")
        return out


@dataclass(frozen=True)
class TestOutcome:
    """Result of one goodness-of-fit test; reject iff statistic > threshold."""

    statistic: float
    threshold: float
    alpha: float
    reject: bool
    null_kind: str
    k0: int = 1


def gof_test(value: float, null: NullDistribution, alpha: float, n: int,
             shift: float = 0.0) -> TestOutcome:
    """Apply the one-sided decision rule at level alpha.

    For the tw1 null the threshold is 2 + shift + n^(-2/3) q_TW1(1 - alpha)
    (shift carries the optional (np)^-1 finite-size correction); empirical
    nulls use their (1 - alpha) quantile directly. Rejection is strict.
    """
    if not (0.0 < alpha < 1.0):
        raise ParameterError("alpha must lie in (0, 1)")
    if null.kind == "tw1":
        threshold = 2.0 + shift + n ** (-2.0 / 3.0) * tw1_quantile(1.0 - alpha)
    else:
        threshold = null.quantile(1.0 - alpha)
    return TestOutcome(
        statistic=float(value),
        threshold=float(threshold),
        alpha=alpha,
        reject=bool(value > threshold),
        null_kind=null.kind,
        k0=null.k0,
    )


def _map_indexed(fn, count: int, n_jobs: int):
    if n_jobs == 1 or count <= 1:
        return [fn(i) for i in range(count)]
    from joblib import Parallel, delayed

    return Parallel(n_jobs=n_jobs)(delayed(fn)(i) for i in range(count))


def _fit_for_test(g: Graph, k0: int) -> ModelEstimate:
    from .estimate import fit_model  # deferred: estimate imports stats

    return fit_model(g, k0)


def simulate_null(kind: TestStatKind, n: int, p: float, k0: int = 1,
                  reps: int = 2000, seed=0, spec: BlockModelSpec | None = None,
                  n_jobs: int = 1) -> NullDistribution:
    """Monte-Carlo null distribution of a statistic.

    k0 = 1 samples Erdos-Renyi G(n, p); k0 > 1 requires an explicit
    BlockModelSpec for the null model. The model is re-fitted on every
    replicate exactly as at test time.
    """
    if reps < 1:
        raise ParameterError("reps must be >= 1")
    if k0 > 1 and spec is None:
        raise ParameterError(
            "simulate_null with K0 > 1 needs a BlockModelSpec; see bootstrap_null"
        )
    master = as_seed(seed).master

    def one(i):
        if k0 == 1:
            gi = sample_er(n, p, (master, i))
        else:
            gi = sample_sbm(spec, (master, i))
        est = _fit_for_test(gi, k0)
        return compute_statistic(gi, est, kind, k0)

    values = _map_indexed(one, reps, n_jobs)
    return NullDistribution.from_sample(
        values, seed=master, stat=kind.key(), n=n, p=p, k0=k0
    )


def bootstrap_null(g: Graph, est: ModelEstimate, kind: TestStatKind,
                   reps: int = 2000, seed=0, n_jobs: int = 1) -> NullDistribution:
    """Bootstrap null: resample networks from the fitted P-hat.

    Each replicate samples an SBM with the estimate's labels and raw Q-hat,
    then re-fits a model of the same order before computing the statistic.
    """
    if reps < 1:
        raise ParameterError("reps must be >= 1")
    labels = est.labels if est.labels is not None else np.ones(est.n, dtype=np.int64)
    spec = BlockModelSpec(labels, np.clip(est.qhat, 0.0, 1.0))
    # same stream layout as simulate_null: a constant-P bootstrap is then
    # draw-for-draw identical to the K0=1 Monte-Carlo null
    master = as_seed(seed).master

    def one(i):
        gi = sample_sbm(spec, (master, i))
        ei = _fit_for_test(gi, est.k0)
        return compute_statistic(gi, ei, kind, est.k0)

    values = _map_indexed(one, reps, n_jobs)
    return NullDistribution.from_sample(
        values, seed=master, stat=kind.key(), n=est.n, p=est.phat, k0=est.k0
    )


def v1_d_v1(g: Graph, est: ModelEstimate, centered: bool = False,
            eig_opts: EigOptions | None = None) -> float:
    """Quadratic form of the degree matrix in the top centered-adjacency eigenvector.

    With centered=True uses the centered degrees (row sums of A - P-hat)
    instead of the raw ones.
    """
    spec = eigh_leading(centered_adjacency(g, est), replace(eig_opts or FAST_EIG, k=1))
    v1 = spec.vectors[:, 0].real
    d = g.degrees() - (est.p_rowsums() if centered else 0.0)
    return float(v1 @ (d * v1))


@dataclass(frozen=True)
class ApproxGap:
    """Leading-eigenvalue approximation diagnostics of the rescaled operator."""

    mu1: float
    y1hx1_closed: float
    y1hx1_bilinear: float
    lam1: float


def y1hx1_gap(g: Graph, est: ModelEstimate,
              eig_opts: EigOptions | None = None) -> ApproxGap:
    """Compare mu_1 of the rescaled operator with its bilinear approximation.

    Returns mu_1(H-tilde), the closed form
    lam_1 + lam_1^-1 (1 - v' D v / alpha), the same quantity evaluated as an
    explicit bilinear product (an exact identity, used as a self-check), and
    lam_1 of the scaled centered adjacency.
    """
    base = eig_opts or FAST_EIG
    alpha = est.alphahat
    scaled = eigh_leading(
        CenteredAdjacency(g, est, scale=1.0 / np.sqrt(alpha)), replace(base, k=1)
    )
    lam1 = float(scaled.values[0].real)
    v1 = scaled.vectors[:, 0].real
    d = g.degrees()
    closed = lam1 + (1.0 - (v1 @ (d * v1)) / alpha) / lam1

    h_tilde, _, _ = rescaled_split(centered_nb_operator(g, est), alpha)
    x1 = np.concatenate([v1, v1 / lam1])
    y1 = np.concatenate([v1, np.zeros(g.n)])
    bilinear = float(y1 @ h_tilde.matvec(x1))

    mu1 = float(eig_leading(h_tilde, replace(base, k=1)).values[0].real)
    return ApproxGap(mu1=mu1, y1hx1_closed=float(closed),
                     y1hx1_bilinear=bilinear, lam1=lam1)
