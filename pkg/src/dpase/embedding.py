"""Symmetric eigendecomposition, spectral embedding, and Procrustes alignment.

The embedding of a symmetric matrix M is built from the d eigenpairs of
largest eigenvalue magnitude: each vertex i maps to row i of
``V * sqrt(|w|)``. Scaling by the magnitude square root keeps positions
real when the retained set contains negative eigenvalues, and reduces to
the usual square root when all retained eigenvalues are positive.

Embeddings are only identified up to an orthogonal transform, so any
comparison between two embeddings must go through
:func:`procrustes_align` rather than raw entrywise differences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

INPUT_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class EigenPairs:
    """Eigenvalues sorted by descending magnitude with matching unit vectors.

    ``values`` has shape (d,), ``vectors`` has shape (n, d) with column i
    the eigenvector of ``values[i]``.
    """

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class AlignmentResult:
    """Best orthogonal map of one point set onto another.

    ``rotation`` is the d x d orthogonal matrix Q minimizing
    ``||X @ Q - Y||_F``; ``aligned_distance`` is that minimum.
    """

    rotation: np.ndarray
    aligned_distance: float


def _check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    if np.abs(M - M.T).max(initial=0.0) > INPUT_SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")
    return M


def top_d_eigen(M: np.ndarray, d: int) -> EigenPairs:
    """Eigenpairs of a symmetric matrix with the d largest |eigenvalues|.

    Uses a full dense symmetric decomposition and truncates. Ties in
    magnitude rank the positive eigenvalue first, then fall back to the
    ascending position in the full ascending-eigenvalue decomposition,
    so results are deterministic. Within numerically degenerate
    eigenspaces any orthonormal basis may be returned.
    """
    M = _check_symmetric(M)
    n = M.shape[0]
    if not 1 <= d <= n:
        raise ValueError(f"embedding dimension must satisfy 1 <= d <= {n}, got {d}")
    w, V = np.linalg.eigh(M)
    order = sorted(range(n), key=lambda i: (-abs(w[i]), w[i] < 0, i))[:d]
    return EigenPairs(values=w[order], vectors=V[:, order])


def ase(M: np.ndarray, d: int) -> np.ndarray:
    """Adjacency spectral embedding of a symmetric matrix.

    Returns the (n, d) matrix of estimated latent positions
    ``V * sqrt(|w|)`` built from the top-d eigenpairs by magnitude.
    """
    pairs = top_d_eigen(M, d)
    return pairs.vectors * np.sqrt(np.abs(pairs.values))


def procrustes_align(X: np.ndarray, Y: np.ndarray) -> AlignmentResult:
    """Solve the orthogonal Procrustes problem for two point sets.

    Finds the orthogonal Q minimizing ``||X @ Q - Y||_F`` via the
    singular value decomposition of ``X.T @ Y`` and reports the
    minimized Frobenius distance.
    """
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if X.ndim != 2 or X.shape != Y.shape:
        raise ValueError(f"shape mismatch: {X.shape} vs {Y.shape}")
    U, _, Vt = np.linalg.svd(X.T @ Y)
    rotation = U @ Vt
    aligned_distance = float(np.linalg.norm(X @ rotation - Y))
    return AlignmentResult(rotation=rotation, aligned_distance=aligned_distance)


def frobenius_distance(X: np.ndarray, Y: np.ndarray) -> float:
    """Frobenius norm of X - Y."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if X.shape != Y.shape:
        raise ValueError(f"shape mismatch: {X.shape} vs {Y.shape}")
    return float(np.linalg.norm(X - Y))
