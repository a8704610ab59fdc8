"""Bicubic resampling with the Keys a=-0.5 kernel.

Half-pixel-centers convention throughout; when downscaling, the kernel is
stretched by the scale factor (antialiasing prefilter) so high frequencies
are attenuated before subsampling. Edge taps clamp to the border and each
output row of weights is renormalized to sum 1, so constants are preserved
exactly.
"""

from __future__ import annotations

import numpy as np

KEYS_A = -0.5


def cubic_kernel(x: np.ndarray, a: float = KEYS_A) -> np.ndarray:
    """Keys piecewise-cubic kernel, support (-2, 2)."""
    x = np.abs(np.asarray(x, dtype=np.float64))
    out = np.zeros_like(x)
    near = x <= 1.0
    far = (x > 1.0) & (x < 2.0)
    xn, xf = x[near], x[far]
    out[near] = (a + 2.0) * xn**3 - (a + 3.0) * xn**2 + 1.0
    out[far] = a * xf**3 - 5.0 * a * xf**2 + 8.0 * a * xf - 4.0 * a
    return out


def resample_matrix(in_size: int, out_size: int, antialias: bool = True) -> np.ndarray:
    """Dense (out_size, in_size) matrix applying 1-D bicubic resampling."""
    scale = out_size / in_size
    kernel_scale = min(scale, 1.0) if (antialias and scale < 1.0) else 1.0
    support = 2.0 / kernel_scale
    centers = (np.arange(out_size) + 0.5) / scale - 0.5
    left = np.floor(centers - support).astype(np.int64) + 1
    n_taps = int(np.ceil(2.0 * support)) + 2
    taps = left[:, None] + np.arange(n_taps)[None, :]
    weights = cubic_kernel((taps - centers[:, None]) * kernel_scale)
    weights /= weights.sum(axis=1, keepdims=True)
    clamped = np.clip(taps, 0, in_size - 1)
    matrix = np.zeros((out_size, in_size), dtype=np.float64)
    for i in range(out_size):
        np.add.at(matrix[i], clamped[i], weights[i])
    return matrix


def resize_bicubic(image: np.ndarray, out_h: int, out_w: int, antialias: bool = True) -> np.ndarray:
    """Resize an HxW or HxWxC image; returns float64, unclamped."""
    img = np.asarray(image, dtype=np.float64)
    squeeze = img.ndim == 2
    if squeeze:
        img = img[:, :, None]
    h, w = img.shape[:2]
    rows = resample_matrix(h, out_h, antialias)
    cols = resample_matrix(w, out_w, antialias)
    out = np.einsum("ij,jwc->iwc", rows, img)
    out = np.einsum("kw,hwc->hkc", cols, out)
    return out[:, :, 0] if squeeze else out


def bicubic_downsample(image: np.ndarray, factor: int) -> np.ndarray:
    """Downscale by an integer factor with antialiasing; output clamped to [0, 1]."""
    img = np.asarray(image, dtype=np.float64)
    h, w = img.shape[:2]
    if factor < 1 or h % factor or w % factor:
        raise ValueError(f"image dims {h}x{w} not divisible by factor {factor}")
    out = resize_bicubic(img, h // factor, w // factor, antialias=True)
    return np.clip(out, 0.0, 1.0)


def bicubic_upsample(image: np.ndarray, factor: int) -> np.ndarray:
    """Upscale by an integer factor; output clamped to [0, 1]."""
    img = np.asarray(image, dtype=np.float64)
    h, w = img.shape[:2]
    out = resize_bicubic(img, h * factor, w * factor, antialias=False)
    return np.clip(out, 0.0, 1.0)
