"""AU label encoding and class-imbalance weights."""

from __future__ import annotations

import numpy as np


def compute_au_weights(occurrence_rates: np.ndarray) -> np.ndarray:
    """Inverse-frequency weights w_i = (1/r_i) * n / sum_j(1/r_j).

    The weights sum to n, so the weighted losses keep the scale of their
    unweighted counterparts while emphasizing rare AUs.
    """
    r = np.asarray(occurrence_rates, dtype=np.float64)
    if r.ndim != 1 or r.size == 0:
        raise ValueError("occurrence_rates must be a non-empty vector")
    if np.any(r <= 0):
        raise ValueError("occurrence rates must be positive")
    inv = 1.0 / r
    return inv * r.size / inv.sum()


def binarize_intensities(intensities: np.ndarray, threshold: int = 2) -> np.ndarray:
    """Map 0..5 intensity codes to occurrence labels: 1 iff intensity >= threshold."""
    arr = np.asarray(intensities)
    if arr.size and (arr.min() < 0 or arr.max() > 5):
        raise ValueError("intensities must lie in 0..5")
    return (arr >= threshold).astype(np.uint8)
