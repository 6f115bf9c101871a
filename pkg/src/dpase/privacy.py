"""Gaussian-perturbation mechanism for private spectral embeddings.

The release works in three steps: calibrate a per-entry Gaussian
variance from the privacy budget, add a symmetric noise matrix to the
adjacency matrix, and spectrally embed the perturbed matrix. Each call
is a standalone (alpha, delta) release; composition across repeated
queries is not accounted for here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .embedding import ase
from .graphs import validate_adjacency


class CalibrationError(ValueError):
    """Raised when a privacy budget cannot be turned into a noise scale."""


@dataclass(frozen=True)
class PrivacyBudget:
    """An (alpha, delta) privacy budget; smaller values mean more noise."""

    alpha: float
    delta: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")


@dataclass(frozen=True)
class NoiseScale:
    """Per-entry Gaussian variance calibrated for an n x n matrix at dim d."""

    beta_sq: float
    n: int
    d: int


def calibrate_noise(n: int, d: int, budget: PrivacyBudget) -> NoiseScale:
    """Per-entry noise variance for an (alpha, delta)-private embedding.

    Computes ``8 d^2 ln^2(d/delta) / (n^2 alpha^2)`` with the natural
    logarithm. Requires ``d/delta > 1`` so the variance is strictly
    positive.
    """
    if n < 1:
        raise CalibrationError(f"matrix size must be at least 1, got {n}")
    if not 1 <= d <= n:
        raise CalibrationError(f"dimension must satisfy 1 <= d <= {n}, got {d}")
    ratio = d / budget.delta
    if ratio <= 1.0:
        raise CalibrationError(
            f"d/delta must exceed 1 for a positive noise scale, got {ratio!r}"
        )
    beta_sq = 8.0 * d * d * math.log(ratio) ** 2 / (n * n * budget.alpha * budget.alpha)
    return NoiseScale(beta_sq=beta_sq, n=n, d=d)


def sample_symmetric_noise(
    n: int, scale: NoiseScale | float, rng: np.random.Generator
) -> np.ndarray:
    """Symmetric n x n Gaussian noise with per-entry variance beta_sq.

    The upper triangle including the diagonal is drawn i.i.d. from
    N(0, beta_sq) and mirrored, so every entry keeps variance exactly
    beta_sq (averaging two independent draws would halve it).
    """
    beta_sq = scale.beta_sq if isinstance(scale, NoiseScale) else float(scale)
    if not beta_sq > 0:
        raise ValueError(f"noise variance must be positive, got {beta_sq}")
    if n < 1:
        raise ValueError(f"matrix size must be at least 1, got {n}")
    rows, cols = np.triu_indices(n)
    draws = rng.normal(0.0, math.sqrt(beta_sq), size=rows.size)
    E = np.zeros((n, n))
    E[rows, cols] = draws
    E[cols, rows] = draws
    return E


def dp_ase(
    A: np.ndarray, d: int, budget: PrivacyBudget, rng: np.random.Generator
) -> np.ndarray:
    """Differentially private spectral embedding of an adjacency matrix.

    Perturbs the whole matrix, diagonal included, and embeds the result.
    The perturbed matrix is used as-is: entries are neither clipped back
    to [0, 1] nor re-binarized, and the diagonal is not re-zeroed, since
    any such post-processing would change the released object.
    """
    A = validate_adjacency(A)
    n = A.shape[0]
    scale = calibrate_noise(n, d, budget)
    E = sample_symmetric_noise(n, scale, rng)
    return ase(A + E, d)
