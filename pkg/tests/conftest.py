import numpy as np
import pytest
import scipy.sparse as sp
from scipy.optimize import linear_sum_assignment

from nbspec import Graph


def strip_pm1(values, tol=1e-8):
    """Drop every eigenvalue within tol of +1 or -1."""
    values = np.asarray(values)
    keep = (np.abs(values - 1.0) >= tol) & (np.abs(values + 1.0) >= tol)
    return values[keep]


def multiset_close(a, b, tol=1e-8):
    """True when two complex multisets match under an optimal pairing."""
    a, b = np.asarray(a, complex), np.asarray(b, complex)
    if a.size != b.size:
        return False
    if a.size == 0:
        return True
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return bool(cost[rows, cols].max() < tol)


def _cluster_ids(points, radius):
    """Single-linkage clusters of complex points at the given radius."""
    n = points.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    order = np.argsort(points.real, kind="stable")
    for a in range(n):
        i = order[a]
        for b in range(a + 1, n):
            j = order[b]
            if points[j].real - points[i].real > radius:
                break
            if abs(points[i] - points[j]) <= radius:
                parent[find(i)] = find(j)
    return np.array([find(i) for i in range(n)])


def spectra_equivalent_mod_pm1(ev_a, ev_b, surplus_b, tol=1e-8, radius=2e-3):
    """Check multiset equality of two spectra modulo +-1 multiplicity.

    Defective eigenvalues are computed with eps^(1/k) forward error, so the
    comparison runs on cluster-linear statistics, which are accurate: within
    each cluster of the pooled spectra, side b may exceed side a by exactly
    `surplus_b` members in the clusters containing +1 and -1 (negative
    surplus means side a has the extras), counts must otherwise agree, and
    cluster sums must match to tol per member after removing the surplus.
    """
    ev_a, ev_b = np.asarray(ev_a, complex), np.asarray(ev_b, complex)
    if ev_b.size - ev_a.size != 2 * surplus_b:
        return False
    pooled = np.concatenate([ev_a, ev_b, [1.0 + 0j, -1.0 + 0j]])
    side = np.concatenate(
        [np.zeros(ev_a.size, int), np.ones(ev_b.size, int), [2, 2]]
    )
    ids = _cluster_ids(pooled, radius)
    plus_cluster = ids[-2]
    minus_cluster = ids[-1]
    for cid in np.unique(ids):
        members = ids == cid
        in_a = members & (side == 0)
        in_b = members & (side == 1)
        count_a, count_b = int(in_a.sum()), int(in_b.sum())
        anchor = 0.0
        expected_surplus = 0
        if cid == plus_cluster:
            anchor, expected_surplus = 1.0, surplus_b
        if cid == minus_cluster:
            # when the +-1 clusters merge this nets out to anchor 0, 2x surplus
            anchor, expected_surplus = anchor - 1.0, expected_surplus + surplus_b
        if count_b - count_a != expected_surplus:
            return False
        gap = pooled[in_b].sum() - pooled[in_a].sum() - expected_surplus * anchor
        if abs(gap) > tol * max(count_a, count_b, 1):
            return False
    return True


def complete_graph(n):
    adj = np.ones((n, n)) - np.eye(n)
    return Graph(sp.csr_array(adj))


def disjoint_cliques(*sizes):
    n = sum(sizes)
    adj = np.zeros((n, n))
    at = 0
    for size in sizes:
        adj[at : at + size, at : at + size] = 1.0
        at += size
    np.fill_diagonal(adj, 0.0)
    return Graph(sp.csr_array(adj))


def path_graph(n):
    u = np.arange(n - 1)
    return Graph.from_edges(n, u, u + 1)


def permute_graph(g, perm):
    perm = np.asarray(perm)
    return Graph(sp.csr_array(g.adj.toarray()[np.ix_(perm, perm)]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
