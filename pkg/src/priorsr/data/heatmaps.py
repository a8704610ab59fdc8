"""Gaussian keypoint heatmap rendering."""

from __future__ import annotations

import numpy as np

HEATMAP_SIZE = 64
HEATMAP_SIGMA = 1.5


def render_heatmaps(
    landmarks: np.ndarray,
    out_size: int = HEATMAP_SIZE,
    sigma: float = HEATMAP_SIGMA,
    frame_size: int = 128,
) -> np.ndarray:
    """Render one unnormalized Gaussian per landmark.

    Each of the K points (x, y in the frame_size frame) is scaled by
    out_size/frame_size and rendered as exp(-((x-cx)^2+(y-cy)^2)/(2 sigma^2))
    on the integer grid. A point exactly on a grid cell peaks at 1.0; points
    outside the frame simply produce near-zero maps.

    Returns (K, out_size, out_size) float32.
    """
    if out_size <= 0 or sigma <= 0:
        raise ValueError("out_size and sigma must be positive")
    pts = np.asarray(landmarks, dtype=np.float64) * (out_size / frame_size)
    grid = np.arange(out_size, dtype=np.float64)
    dx2 = (grid[None, None, :] - pts[:, 0, None, None]) ** 2
    dy2 = (grid[None, :, None] - pts[:, 1, None, None]) ** 2
    maps = np.exp(-(dx2 + dy2) / (2.0 * sigma * sigma))
    return maps.astype(np.float32)
