"""Matrix operators built from a graph and a fitted block model.

All 2n x 2n block operators are applied matrix-free at O(m + n*K0) per
matvec; `dense()` materializes the explicit matrix for validation-scale
cross-checks. Operators are immutable and safe to share across threads.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .errors import ParameterError, ResourceError
from .graphs import Graph

EDGE_MATRIX_CAP = 40  # n above which the dense n(n-1) edge matrix is refused


class ModelEstimate:
    """Fitted null model: block labels (optional), Q-hat, and the global density.

    Stores raw probabilities; `q_clamped()` restricts entries to
    [1/(n(n-1)), 1 - 1/(n(n-1))] so that normalized-adjacency denominators
    and likelihood logs stay finite. Centered operators use the raw values.
    """

    def __init__(self, n: int, phat: float, labels=None, qhat=None):
        if n < 2:
            raise ParameterError("model estimate needs n >= 2")
        self.n = int(n)
        self.phat = float(phat)
        if labels is None:
            self.labels = None
            self.qhat = np.array([[self.phat]]) if qhat is None else np.asarray(qhat, float)
        else:
            labels = np.asarray(labels, dtype=np.int64)
            if labels.size != n:
                raise ParameterError("labels length must equal n")
            if qhat is None:
                raise ParameterError("qhat required when labels are given")
            self.labels = labels
            self.qhat = np.asarray(qhat, dtype=float)
        k = self.qhat.shape[0]
        if self.qhat.shape != (k, k):
            raise ParameterError("qhat must be square")
        self.k0 = k
        if self.labels is not None and (self.labels.min() < 1 or self.labels.max() > k):
            raise ParameterError("labels must lie in {1..K0}")

    @classmethod
    def constant(cls, n: int, p: float) -> "ModelEstimate":
        """K0 = 1 estimate with constant off-diagonal probability p."""
        return cls(n, p)

    @property
    def alphahat(self) -> float:
        """(n-1) * phat + 1."""
        return (self.n - 1) * self.phat + 1.0

    def clamp_bounds(self):
        lo = 1.0 / (self.n * (self.n - 1.0))
        return lo, 1.0 - lo

    def q_clamped(self) -> np.ndarray:
        lo, hi = self.clamp_bounds()
        return np.clip(self.qhat, lo, hi)

    def _labels0(self) -> np.ndarray:
        if self.labels is None:
            return np.zeros(self.n, dtype=np.int64)
        return self.labels - 1

    def membership_matrix(self) -> sp.csr_array:
        """One-hot n x K0 indicator of the block assignment."""
        g0 = self._labels0()
        return sp.csr_array(
            (np.ones(self.n), (np.arange(self.n), g0)), shape=(self.n, self.k0)
        )

    def p_matvec(self, x, q=None):
        """Apply P-hat (zero diagonal) to a vector: G Q G^T x - diag(Q_gg) x."""
        q = self.qhat if q is None else q
        g0 = self._labels0()
        if self.k0 == 1:
            s = q[0, 0]
            return s * (x.sum() - x)
        sums = np.zeros(self.k0, dtype=x.dtype)
        np.add.at(sums, g0, x)
        return q[g0] @ sums - q[g0, g0] * x

    def p_rowsums(self, q=None) -> np.ndarray:
        """Row sums of P-hat (zero diagonal)."""
        return self.p_matvec(np.ones(self.n), q=q)

    def p_dense(self, q=None) -> np.ndarray:
        q = self.qhat if q is None else q
        g0 = self._labels0()
        p = q[np.ix_(g0, g0)].astype(float)
        np.fill_diagonal(p, 0.0)
        return p

    def __repr__(self):
        return f"ModelEstimate(n={self.n}, K0={self.k0}, phat={self.phat:.6g})"


class _Operator:
    """Minimal matrix-free operator protocol used by the eig module."""

    role = "operator"
    shape: tuple
    dtype = np.dtype(float)

    def matvec(self, x):
        raise NotImplementedError

    def dense(self) -> np.ndarray:
        n = self.shape[0]
        out = np.empty((n, n))
        e = np.zeros(n)
        for j in range(n):
            e[j] = 1.0
            out[:, j] = self.matvec(e)
            e[j] = 0.0
        return out

    @property
    def dim(self) -> int:
        return self.shape[0]

    def __matmul__(self, x):
        return self.matvec(x)


class CenteredAdjacency(_Operator):
    """A - P-hat with zero diagonal (symmetric, rank-structured)."""

    role = "centered_adjacency"

    def __init__(self, g: Graph, est: ModelEstimate, scale: float = 1.0):
        if est.n != g.n:
            raise ParameterError("estimate and graph sizes differ")
        self.graph = g
        self.est = est
        self.scale = scale
        self.shape = (g.n, g.n)

    def matvec(self, x):
        x = np.asarray(x)
        return self.scale * (self.graph.adj @ x - self.est.p_matvec(x))

    def dense(self):
        return self.scale * (self.graph.adj.toarray() - self.est.p_dense())


class NormalizedAdjacency(_Operator):
    """(A - P-hat) / sqrt((n-1) P-hat (1 - P-hat)), zero diagonal, symmetric.

    Uses the clamped P-hat so every denominator is finite. Because P-hat is
    block-constant, the entrywise weight is too, and the operator splits into
    a reweighted CSR part plus a rank-K0 part.
    """

    role = "normalized_adjacency"

    def __init__(self, g: Graph, est: ModelEstimate):
        if est.n != g.n:
            raise ParameterError("estimate and graph sizes differ")
        self.graph = g
        self.est = est
        self.shape = (g.n, g.n)
        qc = est.q_clamped()
        self._w = 1.0 / np.sqrt((g.n - 1.0) * qc * (1.0 - qc))
        self._qw = qc * self._w
        g0 = est._labels0()
        coo = g.adj.tocoo()
        data = self._w[g0[coo.row], g0[coo.col]]
        self._wa = sp.csr_array((data, (coo.row, coo.col)), shape=(g.n, g.n))

    def matvec(self, x):
        x = np.asarray(x)
        return self._wa @ x - self.est.p_matvec(x, q=self._qw)

    def dense(self):
        g0 = self.est._labels0()
        w = self._w[np.ix_(g0, g0)]
        out = w * (self.graph.adj.toarray() - self.est.p_dense(q=self.est.q_clamped()))
        np.fill_diagonal(out, 0.0)
        return out


def centered_adjacency(g: Graph, est: ModelEstimate) -> CenteredAdjacency:
    return CenteredAdjacency(g, est)


def normalized_adjacency(g: Graph, est: ModelEstimate) -> NormalizedAdjacency:
    return NormalizedAdjacency(g, est)


class BlockOperator(_Operator):
    """2n x 2n operator [[T, C],[I, 0]] with T a symmetric operator, C diagonal.

    Covers H (plain), H-centered, the rescaled conjugation and its split
    parts; `top` is None for the E part (whose top-left block is zero).
    """

    def __init__(self, role, top, cdiag, n, graph=None, est=None):
        self.role = role
        self.top = top
        self.cdiag = np.asarray(cdiag, dtype=float)
        self.graph = graph
        self.est = est
        self.shape = (2 * n, 2 * n)
        self._n = n
        self._identity_lower = role != "E_part"

    def matvec(self, z):
        z = np.asarray(z)
        n = self._n
        x, y = z[:n], z[n:]
        upper = self.cdiag * y
        if self.top is not None:
            upper = upper + self.top.matvec(x)
        lower = x if self._identity_lower else np.zeros_like(x)
        return np.concatenate([upper, lower])

    def dense(self):
        n = self._n
        out = np.zeros((2 * n, 2 * n))
        if self.top is not None:
            out[:n, :n] = self.top.dense()
        out[:n, n:] = np.diag(self.cdiag)
        if self._identity_lower:
            out[n:, :n] = np.eye(n)
        return out

    def norm(self) -> float:
        """Operator 2-norm; exact for the E part (block-diagonal structure)."""
        if self.role == "E_part":
            return float(np.abs(self.cdiag).max()) if self._n else 0.0
        raise ParameterError("norm() is only closed-form for the E part")


class _SparseTop:
    """Adapter so BlockOperator.top can be a plain sparse matrix."""

    def __init__(self, mat):
        self.mat = sp.csr_array(mat)

    def matvec(self, x):
        return self.mat @ x

    def dense(self):
        return self.mat.toarray()


def nb_operator(g: Graph) -> BlockOperator:
    """Non-backtracking spectrum operator H = [[A, I - D], [I, 0]]."""
    return BlockOperator("H", _SparseTop(g.adj), 1.0 - g.degrees(), g.n, graph=g)


def centered_nb_operator(g: Graph, est: ModelEstimate) -> BlockOperator:
    """Centered analogue of H, with A replaced by A - P-hat and D by its row sums."""
    cadj = CenteredAdjacency(g, est)
    d_centered = g.degrees() - est.p_rowsums()
    return BlockOperator("centered_H", cadj, 1.0 - d_centered, g.n, graph=g, est=est)


def rescaled_split(op: BlockOperator, alpha: float):
    """Split the rescaled conjugation of a centered operator into H-tilde = H0 + E.

    spec(H-tilde) = spec(op) / sqrt(alpha); H0 = [[T/sqrt(alpha), 0], [I, 0]]
    carries the centered adjacency part and E = [[0, C/alpha], [0, 0]] the
    diagonal coupling (equal to I - D/alpha when alpha matches the estimate).
    """
    if alpha <= 0:
        raise ParameterError("alpha must be positive")
    if op.role != "centered_H" or op.graph is None or op.est is None:
        raise ParameterError("rescaled_split expects a centered non-backtracking operator")
    n = op.graph.n
    scaled_top = CenteredAdjacency(op.graph, op.est, scale=1.0 / np.sqrt(alpha))
    h_tilde = BlockOperator(
        "rescaled_H", scaled_top, op.cdiag / alpha, n, graph=op.graph, est=op.est
    )
    h0 = BlockOperator(
        "rescaled_H0", scaled_top, np.zeros(n), n, graph=op.graph, est=op.est
    )
    e_part = BlockOperator("E_part", None, op.cdiag / alpha, n, graph=op.graph, est=op.est)
    return h_tilde, h0, e_part


def bethe_hessian(g: Graph, r: float) -> sp.csr_array:
    """Bethe-Hessian matrix (r^2 - 1) I - r A + D, explicit sparse symmetric."""
    n = g.n
    shift = sp.diags_array((r * r - 1.0) + g.degrees(), format="csr")
    return sp.csr_array(shift - r * g.adj)


def bh_r_a(g: Graph) -> float:
    """Square root of the average degree."""
    return float(np.sqrt(g.degrees().mean()))


def bh_r_m(g: Graph) -> float:
    """sqrt(sum d_i^2 / sum d_i - 1), a degree-moment scale choice."""
    d = g.degrees()
    total = d.sum()
    if total == 0:
        raise ParameterError("r_m undefined on an empty graph")
    return float(np.sqrt((d * d).sum() / total - 1.0))


def directed_edges(g: Graph) -> np.ndarray:
    """(2m, 2) array of directed edges, lexicographically sorted by (tail, head)."""
    coo = g.adj.tocoo()
    order = np.lexsort((coo.col, coo.row))
    return np.column_stack([coo.row[order], coo.col[order]]).astype(np.int64)


def edge_nb_matrix(g: Graph):
    """Edge non-backtracking matrix B over the graph's 2m directed edges.

    B[(i->j), (k->l)] = 1 iff j == k and l != i.

    Returns:
        (B as CSR, the directed edge array indexing it)
    """
    de = directed_edges(g)
    ne = de.shape[0]
    # edges grouped by tail: start[t]..start[t+1] are the edges leaving t
    start = np.searchsorted(de[:, 0], np.arange(g.n + 1))
    rows, cols = [], []
    for e in range(ne):
        i, j = de[e]
        for f in range(start[j], start[j + 1]):
            if de[f, 1] != i:
                rows.append(e)
                cols.append(f)
    data = np.ones(len(rows))
    return sp.csr_array((data, (rows, cols)), shape=(ne, ne)), de


def complete_directed_pairs(n: int) -> np.ndarray:
    """All n(n-1) ordered pairs (u, v), u != v, sorted by (u, v)."""
    u, v = np.nonzero(~np.eye(n, dtype=bool))
    return np.column_stack([u, v]).astype(np.int64)


def centered_edge_matrix(g: Graph, est: ModelEstimate, allow_large: bool = False):
    """Centered edge matrix over all n(n-1) ordered pairs of the complete graph.

    Row edge (v->u), column edge (w->z): zero unless w == u, in which case
    the entry is Abar[u, z], minus 1 when z == v (the backtracking pair).
    Quadratic in n; refused above EDGE_MATRIX_CAP nodes unless allow_large.

    Returns:
        (dense matrix, the ordered pair array indexing it)
    """
    n = g.n
    if n > EDGE_MATRIX_CAP and not allow_large:
        raise ResourceError(
            f"centered edge matrix is {n * (n - 1)}^2; pass allow_large=True to override"
        )
    abar = g.adj.toarray() - est.p_dense()
    pairs = complete_directed_pairs(n)
    ne = pairs.shape[0]
    index = {(int(a), int(b)): k for k, (a, b) in enumerate(pairs)}
    mat = np.zeros((ne, ne))
    for r, (v, u) in enumerate(pairs):
        for z in range(n):
            if z == u:
                continue
            c = index[(int(u), int(z))]
            mat[r, c] = abar[u, z] - (1.0 if z == v else 0.0)
    return mat, pairs
