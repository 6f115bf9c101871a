"""Stochastic blockmodel sampling and graph file ingestion.

An undirected simple graph on n vertices is represented as a plain numpy
array: an n x n symmetric, hollow (zero-diagonal) 0/1 matrix of dtype
float64. Block/class labels are 1-based integer vectors with values in
1..K.

File formats
------------
Edge list: ASCII, one ``u v`` pair of integer vertex ids per line,
whitespace separated. Lines starting with ``#`` and blank lines are
skipped. Ids may be 0-based or 1-based; the base is auto-detected from
the minimum id seen (0 anywhere means 0-based).

Labels: one integer class id per line, one line per vertex. Arbitrary
ids are remapped to contiguous 1..K in order of first appearance.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
PI_SUM_TOL = 1e-12


class EdgeListError(ValueError):
    """Raised when an edge-list or label file cannot be ingested."""


@dataclass(frozen=True)
class SbmParams:
    """Parameters of a K-block stochastic blockmodel.

    Parameters
    ----------
    B : (K, K) array
        Symmetric matrix of between-block edge probabilities in [0, 1].
    pi : (K,) array
        Block membership prior; nonnegative, sums to 1.
    """

    B: np.ndarray
    pi: np.ndarray

    def __post_init__(self):
        B = np.asarray(self.B, dtype=float)
        pi = np.asarray(self.pi, dtype=float)
        if B.ndim != 2 or B.shape[0] != B.shape[1]:
            raise ValueError(f"B must be a square matrix, got shape {B.shape}")
        if pi.ndim != 1 or len(pi) != B.shape[0]:
            raise ValueError(
                f"pi length {pi.shape} does not match B dimension {B.shape[0]}"
            )
        if len(pi) < 1:
            raise ValueError("block count must be at least 1")
        if np.abs(B - B.T).max() > SYMMETRY_TOL:
            raise ValueError("B must be symmetric")
        if B.min() < 0.0 or B.max() > 1.0:
            raise ValueError("B entries must lie in [0, 1]")
        if pi.min() < 0.0:
            raise ValueError("pi entries must be nonnegative")
        if abs(pi.sum() - 1.0) > PI_SUM_TOL:
            raise ValueError(f"pi must sum to 1, got {pi.sum()!r}")
        B.setflags(write=False)
        pi.setflags(write=False)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "pi", pi)

    @property
    def K(self) -> int:
        return len(self.pi)


@dataclass(frozen=True)
class LabeledGraph:
    """An adjacency matrix together with 1-based block labels."""

    adjacency: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        adjacency = validate_adjacency(self.adjacency)
        labels = np.asarray(self.labels, dtype=int)
        if labels.ndim != 1 or len(labels) != adjacency.shape[0]:
            raise ValueError("labels length must equal the vertex count")
        if labels.min(initial=1) < 1:
            raise ValueError("labels must be 1-based positive class ids")
        adjacency.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]


def validate_adjacency(A: np.ndarray) -> np.ndarray:
    """Check that A is a symmetric, hollow 0/1 matrix; return it as float64.

    Symmetry and hollowness must hold exactly (entrywise), not merely
    within tolerance.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ValueError("adjacency matrix must be exactly symmetric")
    if np.any(np.diagonal(A) != 0.0):
        raise ValueError("adjacency matrix must have a zero diagonal")
    if not np.all((A == 0.0) | (A == 1.0)):
        raise ValueError("adjacency entries must be 0 or 1")
    return A


def sample_block_labels(params: SbmParams, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw n i.i.d. 1-based block labels from the membership prior."""
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    return rng.choice(params.K, size=n, p=params.pi) + 1


def sample_sbm(params: SbmParams, n: int, rng: np.random.Generator) -> LabeledGraph:
    """Sample a graph from a stochastic blockmodel.

    Labels are drawn i.i.d. from ``params.pi``; for each vertex pair
    i < j an edge is present independently with probability
    ``B[label_i, label_j]``. The matrix is symmetrized from the upper
    triangle and the diagonal is zero. Two calls with an identically
    seeded ``rng`` produce bit-identical graphs.
    """
    labels = sample_block_labels(params, n, rng)
    idx = labels - 1
    A = np.zeros((n, n))
    # Row-chunked upper-triangle sampling keeps peak memory at O(n) beyond A.
    for i in range(n - 1):
        probs = params.B[idx[i], idx[i + 1:]]
        A[i, i + 1:] = rng.random(n - 1 - i) < probs
    A = A + A.T
    return LabeledGraph(adjacency=A, labels=labels)


def _parse_id(token: str, lineno: int, path: str, noun: str = "vertex id") -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListError(
            f"{path}:{lineno}: non-integer {noun} {token!r}"
        ) from None


def load_edge_list(path, n_hint: int | None = None) -> np.ndarray:
    """Read a whitespace-separated edge list into an adjacency matrix.

    Duplicate edges collapse to a single edge and self-loops are dropped
    (a warning with the count is logged). When ``n_hint`` is given it
    fixes the vertex count and any id outside the valid range is an
    error; otherwise the count is inferred from the largest id.
    """
    edges: list[tuple[int, int, int]] = []
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                tokens = line.split()
                if len(tokens) != 2:
                    raise EdgeListError(
                        f"{path}:{lineno}: expected 'u v', got {line!r}"
                    )
                u = _parse_id(tokens[0], lineno, str(path))
                v = _parse_id(tokens[1], lineno, str(path))
                if u < 0 or v < 0:
                    raise EdgeListError(f"{path}:{lineno}: negative vertex id")
                edges.append((lineno, u, v))
    except OSError as exc:
        raise EdgeListError(f"cannot read edge list {path}: {exc}") from exc

    if not edges:
        if n_hint is None:
            raise EdgeListError(f"{path}: no edges and no vertex-count hint")
        return np.zeros((n_hint, n_hint))

    min_id = min(min(u, v) for _, u, v in edges)
    offset = 0 if min_id == 0 else 1
    if min_id == 1:
        log.info("%s: minimum vertex id is 1 and 0 never appears; treating ids as 1-based", path)

    max_id = max(max(u, v) for _, u, v in edges)
    n = n_hint if n_hint is not None else max_id + 1 - offset
    A = np.zeros((n, n))
    self_loops = 0
    for lineno, u, v in edges:
        u -= offset
        v -= offset
        if u >= n or v >= n or u < 0 or v < 0:
            raise EdgeListError(
                f"{path}:{lineno}: vertex id exceeds declared count {n}"
            )
        if u == v:
            self_loops += 1
            continue
        A[u, v] = 1.0
        A[v, u] = 1.0
    if self_loops:
        log.warning("%s: dropped %d self-loop(s)", path, self_loops)
    return validate_adjacency(A)


def write_edge_list(A: np.ndarray, path) -> None:
    """Write the upper-triangle edges of an adjacency matrix, 0-based."""
    A = validate_adjacency(A)
    rows, cols = np.nonzero(np.triu(A, k=1))
    with open(path, "w", newline="\n") as fh:
        for u, v in zip(rows, cols):
            fh.write(f"{u} {v}\n")


def load_labels(path, n: int) -> np.ndarray:
    """Read one class id per line and remap ids to contiguous 1..K.

    Remapping preserves first-appearance order, so the first distinct id
    in the file becomes class 1. The file must contain exactly ``n``
    non-blank, non-comment lines.
    """
    raw: list[int] = []
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                raw.append(_parse_id(line, lineno, str(path), noun="class id"))
    except OSError as exc:
        raise EdgeListError(f"cannot read labels {path}: {exc}") from exc
    if not raw:
        raise EdgeListError(f"{path}: empty label file")
    if len(raw) != n:
        raise EdgeListError(f"{path}: expected {n} labels, got {len(raw)}")
    remap: dict[int, int] = {}
    for value in raw:
        if value not in remap:
            remap[value] = len(remap) + 1
    return np.array([remap[value] for value in raw], dtype=int)
