"""Graph representation, block-model sampling and edge-list I/O.

Graphs are simple, undirected and unweighted, stored in CSR form with both
directions of every edge present. Sampling is a pure function of the model
parameters and an RngSeed, so identical seeds give identical graphs on any
machine and under any parallel schedule.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .errors import ParameterError, ParseError
from .rng import stream


class Graph:
    """Undirected simple graph on nodes 0..n-1.

    Attributes:
        n: node count.
        m: undirected edge count.
        adj: symmetric n x n CSR adjacency with 0/1 float entries, zero diagonal.
    """

    __slots__ = ("n", "m", "adj", "_degrees")

    def __init__(self, adj: sp.csr_array):
        adj = sp.csr_array(adj)
        n = adj.shape[0]
        if adj.shape[0] != adj.shape[1]:
            raise ParameterError("adjacency must be square")
        if adj.nnz:
            if adj.diagonal().any():
                raise ParameterError("self-loops are not allowed")
            if (adj != adj.T).nnz != 0:
                raise ParameterError("adjacency must be symmetric")
            if not np.all(adj.data == 1.0):
                raise ParameterError("adjacency entries must be 0/1")
        self.adj = adj
        self.n = n
        self.m = adj.nnz // 2
        self._degrees = None

    @classmethod
    def from_edges(cls, n: int, u, v) -> "Graph":
        """Build a graph from endpoint arrays; duplicates and self-loops dropped."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.size and (u.min() < 0 or v.min() < 0 or u.max() >= n or v.max() >= n):
            raise ParameterError("edge endpoint out of range")
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        keep = lo < hi
        lo, hi = lo[keep], hi[keep]
        key = np.unique(lo * n + hi)
        lo, hi = key // n, key % n
        data = np.ones(2 * lo.size)
        adj = sp.csr_array(
            (data, (np.concatenate([lo, hi]), np.concatenate([hi, lo]))), shape=(n, n)
        )
        return cls(adj)

    def degrees(self) -> np.ndarray:
        """Degree sequence; sums to 2m."""
        if self._degrees is None:
            self._degrees = np.asarray(self.adj.sum(axis=1)).ravel()
        return self._degrees

    def edge_list(self) -> np.ndarray:
        """Canonical (m, 2) array of edges with u < v, sorted lexicographically."""
        coo = sp.triu(self.adj, k=1).tocoo()
        order = np.lexsort((coo.col, coo.row))
        return np.column_stack([coo.row[order], coo.col[order]]).astype(np.int64)

    def subgraph(self, nodes) -> "Graph":
        """Node-induced subgraph, nodes relabeled by position in `nodes`."""
        idx = np.asarray(nodes, dtype=np.int64)
        sub = self.adj[np.ix_(idx, idx)]
        return Graph(sp.csr_array(sub))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BlockModelSpec:
    """SBM parameters: 1-based memberships and a symmetric K x K probability matrix."""

    memberships: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.memberships, dtype=np.int64)
        q = np.asarray(self.q, dtype=float)
        object.__setattr__(self, "memberships", g)
        object.__setattr__(self, "q", q)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ParameterError("Q must be square")
        k = q.shape[0]
        if not np.allclose(q, q.T, atol=1e-15):
            raise ParameterError("Q must be symmetric")
        if np.any(q < 0) or np.any(q > 1):
            bad = np.argwhere((q < 0) | (q > 1))[0]
            raise ParameterError(
                f"Q[{bad[0] + 1},{bad[1] + 1}] = {q[bad[0], bad[1]]} outside [0, 1]"
            )
        if g.size == 0:
            raise ParameterError("memberships must be nonempty")
        if set(np.unique(g)) != set(range(1, k + 1)):
            raise ParameterError("labels must cover {1..K}")

    @property
    def n(self) -> int:
        return self.memberships.size

    @property
    def k(self) -> int:
        return self.q.shape[0]

    def block_sizes(self) -> np.ndarray:
        return np.bincount(self.memberships - 1, minlength=self.k)

    def expected_density(self) -> float:
        """(1/(n(n-1))) * sum_{i != j} P_ij."""
        sizes = self.block_sizes().astype(float)
        pair_counts = np.outer(sizes, sizes) - np.diag(sizes)
        n = self.n
        return float((pair_counts * self.q).sum() / (n * (n - 1)))


def _sample_pair_indices(rng, total: int, count: int) -> np.ndarray:
    """Uniform `count`-subset of range(total), by rejection on a single stream."""
    if count < 0 or count > total:
        raise ParameterError("edge count out of range")
    if count == 0:
        return np.empty(0, dtype=np.int64)
    invert = count > total // 2
    want = total - count if invert else count
    if want == 0:
        chosen = np.empty(0, dtype=np.int64)
    else:
        # Batched rejection: keep the first `want` distinct values of an
        # i.i.d. uniform sequence, which is a uniform `want`-subset.
        taken = np.zeros(total, dtype=bool)
        got = 0
        picks = []
        while got < want:
            batch = rng.integers(0, total, size=max(2 * (want - got), 64))
            batch = batch[~taken[batch]]
            _, first = np.unique(batch, return_index=True)
            fresh = batch[np.sort(first)][: want - got]
            taken[fresh] = True
            picks.append(fresh)
            got += fresh.size
        chosen = np.concatenate(picks)
    if invert:
        mask = np.ones(total, dtype=bool)
        mask[chosen] = False
        return np.nonzero(mask)[0].astype(np.int64)
    return np.sort(chosen)


def _decode_triangular(k: np.ndarray, n: int):
    """Map linear indices over {(i,j): i<j<n} (row-major) to (i, j)."""
    k = np.asarray(k, dtype=np.int64)
    i = np.floor((2 * n - 1 - np.sqrt((2 * n - 1.0) ** 2 - 8.0 * (k + 1))) / 2).astype(
        np.int64
    )
    base = i * (2 * n - i - 1) // 2
    i[base > k] -= 1
    base = i * (2 * n - i - 1) // 2
    j = k - base + i + 1
    return i, j


def _bernoulli_within(rng, nodes: np.ndarray, p: float):
    """Edges of a G(|nodes|, p) block, as global endpoint arrays."""
    nn = nodes.size
    total = nn * (nn - 1) // 2
    if total == 0 or p == 0.0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    count = int(rng.binomial(total, p))
    lin = _sample_pair_indices(rng, total, count)
    i, j = _decode_triangular(lin, nn)
    return nodes[i], nodes[j]


def _bernoulli_between(rng, a: np.ndarray, b: np.ndarray, p: float):
    """Edges of a Bernoulli(p) bipartite block between disjoint node sets."""
    total = a.size * b.size
    if total == 0 or p == 0.0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    count = int(rng.binomial(total, p))
    lin = _sample_pair_indices(rng, total, count)
    return a[lin // b.size], b[lin % b.size]


def sample_sbm(spec: BlockModelSpec, seed) -> Graph:
    """Sample an SBM graph: pair {i,j} is an edge with probability Q[g_i, g_j]."""
    rng = stream(seed)
    g0 = spec.memberships - 1
    blocks = [np.nonzero(g0 == a)[0] for a in range(spec.k)]
    us, vs = [], []
    for a in range(spec.k):
        for b in range(a, spec.k):
            if a == b:
                u, v = _bernoulli_within(rng, blocks[a], spec.q[a, a])
            else:
                u, v = _bernoulli_between(rng, blocks[a], blocks[b], spec.q[a, b])
            us.append(u)
            vs.append(v)
    return Graph.from_edges(spec.n, np.concatenate(us), np.concatenate(vs))


def sample_er(n: int, p: float, seed) -> Graph:
    """Sample an Erdos-Renyi G(n, p) graph."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if not (0.0 <= p <= 1.0):
        raise ParameterError("p must lie in [0, 1]")
    spec = BlockModelSpec(np.ones(n, dtype=np.int64), np.array([[p]]))
    return sample_sbm(spec, seed)


def degrees(g: Graph) -> np.ndarray:
    return g.degrees()


_QDELTA_KINDS = ("balanced", "unbalanced", "equal_degree", "three_block")


def build_q_delta(kind, n1, n2, n3=None, p0=0.01, delta=0.0) -> BlockModelSpec:
    """Assemble the parameterized two- or three-block alternatives.

    All two-block kinds share Q12 = p0*(1-delta) and keep the average expected
    density over ordered pairs equal to p0:
      balanced:     Q11 = Q22 = p0*(1 + (2*n1*n2 / (n1*(n1-1) + n2*(n2-1))) * delta)
      unbalanced:   Q11 = p0,  Q22 = p0*(1 + (2*n1/(n2-1)) * delta)
      equal_degree: Q11 = p0*(1 + (n2/(n1-1)) * delta),
                    Q22 = p0*(1 + (n1/(n2-1)) * delta)
                    (every node then has expected degree (n-1)*p0)
    three_block appends a third block with Q13 = Q23 = 0.3*p0 and Q33 = p0 on
    top of the balanced two-block core; at delta=0 it collapses to K=2.
    """
    if kind not in _QDELTA_KINDS:
        raise ParameterError(f"unknown family kind {kind!r}")
    if not (0.0 <= delta < 1.0):
        raise ParameterError("delta must lie in [0, 1)")
    if (kind == "three_block") != (n3 is not None):
        raise ParameterError("n3 must be given exactly when kind='three_block'")
    if n1 < 2 or n2 < 2 or (n3 is not None and n3 < 2):
        raise ParameterError("block sizes must be >= 2")

    q12 = p0 * (1.0 - delta)
    if kind == "unbalanced":
        q11 = p0
        q22 = p0 * (1.0 + (2.0 * n1 / (n2 - 1.0)) * delta)
    elif kind == "equal_degree":
        q11 = p0 * (1.0 + (n2 / (n1 - 1.0)) * delta)
        q22 = p0 * (1.0 + (n1 / (n2 - 1.0)) * delta)
    else:  # balanced core, also used by three_block
        c = 2.0 * n1 * n2 / (n1 * (n1 - 1.0) + n2 * (n2 - 1.0))
        q11 = q22 = p0 * (1.0 + c * delta)

    if kind == "three_block":
        q = np.array(
            [
                [q11, q12, 0.3 * p0],
                [q12, q22, 0.3 * p0],
                [0.3 * p0, 0.3 * p0, p0],
            ]
        )
        sizes = (n1, n2, n3)
    else:
        q = np.array([[q11, q12], [q12, q22]])
        sizes = (n1, n2)

    names = [("Q11", q[0, 0]), ("Q22", q[1, 1]), ("Q12", q[0, 1])]
    for name, val in names:
        if not (0.0 <= val <= 1.0):
            raise ParameterError(f"{name} = {val} outside [0, 1]")

    memberships = np.concatenate(
        [np.full(sz, a + 1, dtype=np.int64) for a, sz in enumerate(sizes)]
    )
    return BlockModelSpec(memberships, q)


@dataclass
class ReadReport:
    """What the edge-list reader dropped or remapped."""

    duplicates: int = 0
    self_loops: int = 0
    index_map: np.ndarray | None = None  # new index -> original id, when relabeled


def read_edge_list(path):
    """Read a whitespace-separated edge list.

    '#' starts a comment. A leading '# n=<count>' directive fixes the node
    count (gaps are then isolated nodes); without it, node ids are relabeled
    densely and the mapping is reported.

    Returns:
        (Graph, ReadReport)
    """
    us, vs = [], []
    declared_n = None
    with open(path, "rt", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("n=") and declared_n is None and not us:
                    try:
                        declared_n = int(body[2:])
                    except ValueError as exc:
                        raise ParseError(f"bad node-count directive {body!r}", lineno) from exc
                continue
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected two fields, got {len(parts)}", lineno)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError as exc:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from exc
            if a < 0 or b < 0:
                raise ParseError("negative node index", lineno)
            us.append(a)
            vs.append(b)

    u = np.asarray(us, dtype=np.int64)
    v = np.asarray(vs, dtype=np.int64)
    report = ReadReport()

    loops = u == v
    report.self_loops = int(loops.sum())
    u, v = u[~loops], v[~loops]

    if declared_n is not None:
        n = declared_n
        if u.size and max(u.max(), v.max()) >= n:
            raise ParseError(f"node index exceeds declared n={n}")
    else:
        ids = np.unique(np.concatenate([u, v])) if u.size else np.empty(0, np.int64)
        n = ids.size
        if n and (ids[0] != 0 or ids[-1] != n - 1):
            report.index_map = ids
            remap = {orig: new for new, orig in enumerate(ids)}
            u = np.array([remap[x] for x in u], dtype=np.int64)
            v = np.array([remap[x] for x in v], dtype=np.int64)

    lo, hi = np.minimum(u, v), np.maximum(u, v)
    distinct = np.unique(lo * max(n, 1) + hi).size if lo.size else 0
    report.duplicates = int(lo.size - distinct)

    return Graph.from_edges(n, u, v), report


def write_edge_list(g: Graph, path) -> None:
    """Write the canonical form: '# n=<n>' then ascending 'u v' lines, LF-terminated."""
    edges = g.edge_list()
    with open(path, "wt", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# n={g.n}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")


def largest_connected_component(g: Graph):
    """Largest connected component as a node-induced subgraph.

    Ties between equal-size components go to the one containing the smallest
    original node index. Returns (subgraph, index_map) with index_map mapping
    new indices to original ones.
    """
    if g.n == 0:
        return g, np.empty(0, dtype=np.int64)
    ncomp, labels = connected_components(g.adj, directed=False)
    sizes = np.bincount(labels, minlength=ncomp)
    best = max(range(ncomp), key=lambda c: (sizes[c], -int(np.argmax(labels == c))))
    index_map = np.nonzero(labels == best)[0].astype(np.int64)
    return g.subgraph(index_map), index_map
