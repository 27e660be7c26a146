"""Eigenvalue computation: dense decompositions at validation scale and
matrix-free restarted Arnoldi (ARPACK) for leading pairs of the large
nonsymmetric block operators.

Eigenvalues are always reported in descending real part, ties broken by
descending |imaginary part|, then positive imaginary part first. Eigenvectors
are unit norm with the first nonvanishing coordinate rotated positive real,
so results are reproducible bit-for-bit across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigs, eigsh

from .errors import ContractError, ConvergenceError, ParameterError

REAL_EIG_RTOL = 1e-6  # |Im| <= REAL_EIG_RTOL * max(1, |mu|) counts as real


@dataclass
class EigOptions:
    """Options for eig_leading."""

    k: int = 1
    tol: float = 1e-10
    max_restarts: int | None = None
    subspace: int | None = None  # Krylov subspace size; default max(2k+8, 20)
    dense_threshold: int = 600

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError("k must be >= 1")
        if self.tol <= 0:
            raise ParameterError("tol must be positive")


@dataclass
class Spectrum:
    """Eigenvalues in canonical order, with optional matching eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray | None = None  # column i pairs with values[i]

    def real_values(self, rtol: float = REAL_EIG_RTOL) -> np.ndarray:
        """Real parts of the eigenvalues that count as real at tolerance rtol."""
        mask = np.abs(self.values.imag) <= rtol * np.maximum(1.0, np.abs(self.values))
        return self.values.real[mask]


def _sort_order(values: np.ndarray) -> np.ndarray:
    # lexsort uses the last key as primary
    return np.lexsort((-values.imag, -np.abs(values.imag), -values.real))


def _normalize_columns(vectors: np.ndarray) -> np.ndarray:
    out = vectors.astype(complex, copy=True)
    for j in range(out.shape[1]):
        v = out[:, j]
        norm = np.linalg.norm(v)
        if norm == 0:
            continue
        v /= norm
        nz = np.nonzero(np.abs(v) > 1e-12)[0]
        if nz.size:
            pivot = v[nz[0]]
            v *= np.conj(pivot) / np.abs(pivot)
        out[:, j] = v
    return out


def _as_matvec(op):
    """(dim, matvec, dense_fn) for ndarray / sparse / package operators."""
    if isinstance(op, np.ndarray):
        return op.shape[0], lambda x: op @ x, lambda: op
    if sp.issparse(op):
        return op.shape[0], lambda x: op @ x, lambda: op.toarray()
    if hasattr(op, "matvec") and hasattr(op, "shape"):
        dense = op.dense if hasattr(op, "dense") else None
        return op.shape[0], op.matvec, dense
    raise ParameterError(f"cannot interpret {type(op)!r} as an operator")


def _residuals(matvec, values, vectors):
    res = np.empty(values.size)
    for j, lam in enumerate(values):
        v = vectors[:, j]
        res[j] = np.linalg.norm(matvec(v) - lam * v)
    return res


def eig_dense_sym(mat) -> Spectrum:
    """Full spectrum of a symmetric matrix, descending, with orthonormal vectors."""
    mat = mat.toarray() if sp.issparse(mat) else np.asarray(mat, dtype=float)
    scale = max(1.0, np.abs(mat).max()) if mat.size else 1.0
    if not np.allclose(mat, mat.T, atol=1e-12 * scale):
        raise ContractError("matrix is not symmetric")
    vals, vecs = np.linalg.eigh(mat)
    order = np.argsort(-vals, kind="stable")
    return Spectrum(
        vals[order].astype(complex), _normalize_columns(vecs[:, order])
    )


def _dense_leading(dense, matvec, k, tol):
    vals, vecs = sla.eig(np.asarray(dense, dtype=float))
    order = _sort_order(vals)[:k]
    values = vals[order]
    vectors = _normalize_columns(vecs[:, order])
    res = _residuals(matvec, values, vectors)
    bound = tol * np.maximum(1.0, np.abs(values))
    if np.any(res > bound):
        raise ConvergenceError(
            "dense eigensolve residual above tolerance", best_residual=float(res.max())
        )
    return Spectrum(values, vectors)


def eig_leading(op, opts: EigOptions | None = None) -> Spectrum:
    """Leading k eigenpairs (by real part) of a square operator.

    Small operators (dim <= opts.dense_threshold) go through a dense
    Hessenberg-QR solve; larger ones use implicitly restarted Arnoldi with a
    fixed starting vector, so results are deterministic for fixed inputs.

    Raises:
        ConvergenceError: ARPACK ran out of restarts; carries the best residual.
    """
    opts = opts or EigOptions()
    dim, matvec, dense_fn = _as_matvec(op)
    if opts.k > dim:
        raise ParameterError(f"k={opts.k} exceeds operator dimension {dim}")
    use_dense = dim <= opts.dense_threshold or opts.k > dim - 3
    if use_dense:
        if dense_fn is None:
            raise ParameterError("operator lacks a dense form below dense_threshold")
        return _dense_leading(dense_fn(), matvec, opts.k, opts.tol)

    # ask for one extra pair so a conjugate pair never straddles the cutoff
    k_arp = min(opts.k + 1, dim - 2)
    ncv = opts.subspace or max(2 * opts.k + 8, 20)
    ncv = min(dim, max(ncv, k_arp + 2))
    linop = LinearOperator((dim, dim), matvec=lambda x: matvec(np.ravel(x)), dtype=float)
    v0 = np.full(dim, 1.0 / np.sqrt(dim))
    kwargs = dict(k=k_arp, which="LR", v0=v0, ncv=ncv, tol=opts.tol)
    if opts.max_restarts is not None:
        kwargs["maxiter"] = opts.max_restarts
    try:
        vals, vecs = eigs(linop, **kwargs)
    except ArpackNoConvergence as exc:
        best = None
        if exc.eigenvalues is not None and exc.eigenvalues.size:
            best = float(
                _residuals(matvec, exc.eigenvalues, exc.eigenvectors).min()
            )
        raise ConvergenceError(
            f"ARPACK did not converge for k={opts.k} (dim={dim})", best_residual=best
        ) from exc
    order = _sort_order(vals)[: opts.k]
    values = vals[order]
    vectors = _normalize_columns(vecs[:, order])
    res = _residuals(matvec, values, vectors)
    bound = opts.tol * np.maximum(1.0, np.abs(values))
    if np.any(res > bound):
        # one deterministic retry with a larger subspace before giving up
        retry = EigOptions(
            k=opts.k,
            tol=opts.tol,
            max_restarts=opts.max_restarts,
            subspace=2 * ncv,
            dense_threshold=opts.dense_threshold,
        )
        if 2 * ncv < dim:
            return eig_leading(op, retry)
        raise ConvergenceError(
            "ARPACK residual above tolerance", best_residual=float(res.max())
        )
    return Spectrum(values, vectors)


def _check_sym_residuals(matvec, values, vectors, tol):
    res = _residuals(matvec, values.astype(complex), vectors.astype(complex))
    bound = tol * np.maximum(1.0, np.abs(values))
    if np.any(res > bound):
        raise ConvergenceError(
            "symmetric eigensolve residual above tolerance",
            best_residual=float(res.max()),
        )


def _eigh_extreme(op, opts: EigOptions, largest: bool) -> Spectrum:
    """Shared path for the extreme eigenpairs of a symmetric operator."""
    opts = opts or EigOptions()
    dim, matvec, dense_fn = _as_matvec(op)
    if opts.k > dim:
        raise ParameterError(f"k={opts.k} exceeds operator dimension {dim}")
    if dim <= opts.dense_threshold or opts.k > dim - 2:
        if dense_fn is None:
            raise ParameterError("operator lacks a dense form below dense_threshold")
        full = eig_dense_sym(dense_fn())
        idx = (
            np.arange(opts.k)
            if largest
            else np.arange(dim - 1, dim - 1 - opts.k, -1)
        )
        return Spectrum(full.values[idx], full.vectors[:, idx])
    ncv = opts.subspace or max(2 * opts.k + 8, 20)
    ncv = min(dim, max(ncv, opts.k + 1))
    linop = LinearOperator((dim, dim), matvec=lambda x: matvec(np.ravel(x)), dtype=float)
    v0 = np.full(dim, 1.0 / np.sqrt(dim))
    kwargs = dict(k=opts.k, which="LA" if largest else "SA", v0=v0, ncv=ncv, tol=opts.tol)
    if opts.max_restarts is not None:
        kwargs["maxiter"] = opts.max_restarts
    try:
        vals, vecs = eigsh(linop, **kwargs)
    except ArpackNoConvergence as exc:
        best = None
        if exc.eigenvalues is not None and exc.eigenvalues.size:
            best = float(_residuals(matvec, exc.eigenvalues.astype(complex), exc.eigenvectors.astype(complex)).min())
        raise ConvergenceError(
            f"ARPACK (symmetric) did not converge for k={opts.k} (dim={dim})",
            best_residual=best,
        ) from exc
    order = np.argsort(-vals if largest else vals, kind="stable")
    values = vals[order]
    vectors = _normalize_columns(vecs[:, order])
    _check_sym_residuals(matvec, values, vectors, opts.tol)
    return Spectrum(values.astype(complex), vectors)


def eigh_leading(op, opts: EigOptions | None = None) -> Spectrum:
    """Largest-algebraic eigenpairs of a symmetric operator (descending)."""
    return _eigh_extreme(op, opts or EigOptions(), largest=True)


def eigh_smallest(op, opts: EigOptions | None = None) -> Spectrum:
    """Smallest-algebraic eigenpairs of a symmetric operator (ascending)."""
    return _eigh_extreme(op, opts or EigOptions(), largest=False)


def leading_halfvector(spectrum: Spectrum, which: int = 0) -> np.ndarray:
    """First half of eigenvector `which` of a 2n x 2n block operator.

    The phase is already normalized; for a complex pair the real part is
    taken after that normalization.
    """
    if spectrum.vectors is None:
        raise ContractError("spectrum carries no eigenvectors")
    dim = spectrum.vectors.shape[0]
    if dim % 2:
        raise ParameterError("operator dimension is not 2n")
    if not (0 <= which < spectrum.vectors.shape[1]):
        raise ParameterError("eigenvector index out of range")
    return np.real(spectrum.vectors[: dim // 2, which]).copy()
