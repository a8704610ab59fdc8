"""Procedural face-like image generator.

Stands in for restricted face datasets: each sample is a drawn face whose
geometry comes from a jittered 68-point template and whose AU occurrence
labels control both local geometry (raised mouth corners, lowered brows, ...)
and local texture strokes (wrinkles, dimples, blush), so the labels are in
principle recoverable from pixels.

Frames are emitted at 144x144 (the aligned pre-crop size); the landmark
template keeps every point inside [16, 128) so any 128x128 crop of the frame
retains all landmarks.
"""

from __future__ import annotations

import numpy as np
from PIL import Image, ImageDraw, ImageFilter

from .dataset import Sample

FRAME_SIZE = 144
CROP_SIZE = 128

AU_IDS_12 = (1, 2, 4, 6, 7, 10, 12, 14, 15, 17, 23, 24)
AU_IDS_8 = (1, 2, 4, 6, 9, 12, 25, 26)


def au_ids_for_mode(n_au: int) -> tuple[int, ...]:
    """AU identities for a label vector of length n_au."""
    if n_au == 12:
        return AU_IDS_12
    if n_au == 8:
        return AU_IDS_8
    pool = AU_IDS_12 + tuple(a for a in AU_IDS_8 if a not in AU_IDS_12)
    if n_au < 1 or n_au > len(pool):
        raise ValueError(f"unsupported n_au={n_au}")
    return pool[:n_au]


def base_occurrence_rates(n_au: int) -> np.ndarray:
    """Per-AU Bernoulli rates used by the generator (deliberately imbalanced)."""
    idx = np.arange(n_au)
    return 0.25 + 0.35 * (idx % 4) / 3.0


def _template() -> np.ndarray:
    """Canonical 68-point layout in unit coordinates (x right, y down)."""
    pts = np.zeros((68, 2), dtype=np.float64)
    t = np.pi * np.arange(17) / 16.0
    pts[0:17, 0] = 0.5 - 0.31 * np.cos(t)
    pts[0:17, 1] = 0.37 + 0.44 * np.sin(t)
    bx = np.linspace(0.25, 0.42, 5)
    by = 0.30 - 0.025 * np.sin(np.pi * np.arange(5) / 4.0)
    pts[17:22] = np.stack([bx, by], axis=1)
    pts[22:27] = np.stack([1.0 - bx[::-1], by[::-1]], axis=1)
    pts[27:31] = [(0.5, 0.36), (0.5, 0.425), (0.5, 0.49), (0.5, 0.555)]
    pts[31:36] = [(0.42, 0.615), (0.46, 0.625), (0.5, 0.63), (0.54, 0.625), (0.58, 0.615)]
    pts[36:42] = [(0.28, 0.385), (0.315, 0.363), (0.355, 0.363),
                  (0.39, 0.385), (0.355, 0.407), (0.315, 0.407)]
    pts[42:48] = [(0.61, 0.385), (0.645, 0.363), (0.685, 0.363),
                  (0.72, 0.385), (0.685, 0.407), (0.645, 0.407)]
    pts[48:60] = [(0.37, 0.73), (0.415, 0.705), (0.46, 0.695), (0.5, 0.70),
                  (0.54, 0.695), (0.585, 0.705), (0.63, 0.73), (0.585, 0.755),
                  (0.54, 0.77), (0.5, 0.775), (0.46, 0.77), (0.415, 0.755)]
    pts[60:68] = [(0.40, 0.73), (0.46, 0.718), (0.5, 0.72), (0.54, 0.718),
                  (0.60, 0.73), (0.54, 0.742), (0.5, 0.745), (0.46, 0.742)]
    return pts


def _px(v: float) -> float:
    return v / FRAME_SIZE


def _apply_au_geometry(pts: np.ndarray, active: dict[int, bool]) -> None:
    """Deform landmark geometry in place according to active AUs."""
    if active.get(1):
        pts[[20, 21, 22, 23], 1] -= _px(2.5)
    if active.get(2):
        pts[[17, 18, 25, 26], 1] -= _px(2.5)
    if active.get(4):
        pts[17:27, 1] += _px(2.0)
        pts[[20, 21, 22, 23], 1] += _px(1.0)
    if active.get(6):
        pts[[40, 41, 46, 47], 1] -= _px(1.0)
    if active.get(7):
        pts[[37, 38, 43, 44], 1] += _px(1.2)
    if active.get(9):
        pts[31:36, 1] -= _px(2.0)
    if active.get(10):
        pts[[49, 50, 51, 52, 53], 1] -= _px(1.5)
        pts[[61, 62, 63], 1] -= _px(1.0)
    if active.get(12):
        pts[[48, 54], 1] -= _px(3.0)
        pts[48, 0] -= _px(2.0)
        pts[54, 0] += _px(2.0)
        pts[[49, 53], 1] -= _px(1.5)
    if active.get(14):
        pts[48, 0] -= _px(1.5)
        pts[54, 0] += _px(1.5)
    if active.get(15):
        pts[[48, 54], 1] += _px(2.5)
        pts[[49, 53], 1] += _px(1.2)
    if active.get(17):
        pts[57, 1] -= _px(1.0)
        pts[[56, 58], 1] -= _px(0.6)
    if active.get(23):
        pts[[50, 51, 52], 1] += _px(0.8)
        pts[[56, 57, 58], 1] -= _px(0.8)
    if active.get(24):
        mid = pts[[62, 66], 1].mean()
        pts[[61, 62, 63, 65, 66, 67], 1] = mid
    if active.get(25):
        pts[[61, 62, 63], 1] -= _px(1.5)
        pts[[65, 66, 67], 1] += _px(1.5)
        pts[[56, 57, 58], 1] += _px(1.0)
    if active.get(26):
        pts[[61, 62, 63], 1] -= _px(1.5)
        pts[[65, 66, 67], 1] += _px(3.0)
        pts[[55, 56, 57, 58, 59], 1] += _px(3.0)
        pts[6:11, 1] += _px(3.0)


def _blend(c1, c2, t):
    return tuple(int(round(a + (b - a) * t)) for a, b in zip(c1, c2))


def _xy(pts: np.ndarray, idx) -> list[tuple[float, float]]:
    sel = pts[idx] if not np.isscalar(idx) else pts[idx: idx + 1]
    return [(float(x), float(y)) for x, y in sel]


def _draw_face(pix: np.ndarray, active: dict[int, bool], rng_geo: np.random.Generator) -> np.ndarray:
    """Rasterize the face for landmark set `pix` (pixel coords, 144-frame)."""
    bg = tuple(int(round(255 * (0.36 + 0.05 * v))) for v in rng_geo.uniform(-1, 1, 3))
    skin = tuple(int(round(255 * c)) for c in (
        0.78 + 0.07 * rng_geo.uniform(-1, 1),
        0.63 + 0.07 * rng_geo.uniform(-1, 1),
        0.52 + 0.06 * rng_geo.uniform(-1, 1),
    ))
    iris = tuple(int(round(255 * c)) for c in (
        0.25 + 0.15 * rng_geo.uniform(0, 1),
        0.30 + 0.25 * rng_geo.uniform(0, 1),
        0.35 + 0.30 * rng_geo.uniform(0, 1),
    ))
    dark = _blend(skin, (20, 10, 10), 0.75)
    lip = _blend(skin, (165, 55, 60), 0.65)

    img = Image.new("RGB", (FRAME_SIZE, FRAME_SIZE), bg)
    draw = ImageDraw.Draw(img)

    jaw = pix[0:17]
    chin_y = float(jaw[:, 1].max())
    brow_y = float(pix[17:27, 1].min())
    top = brow_y - 0.45 * (chin_y - brow_y)
    left = float(jaw[:, 0].min()) - 2.0
    right = float(jaw[:, 0].max()) + 2.0
    draw.ellipse([left, top, right, chin_y + 2.0], fill=skin)

    if active.get(6):
        blush = _blend(skin, (205, 110, 105), 0.45)
        for i in (41, 46):
            cx, cy = pix[i, 0], pix[i, 1] + 11.0
            draw.ellipse([cx - 7, cy - 4.5, cx + 7, cy + 4.5], fill=blush)

    for sl in (slice(17, 22), slice(22, 27)):
        draw.line(_xy(pix, sl), fill=dark, width=3)
    if active.get(4):
        gx = float(pix[[21, 22], 0].mean())
        gy = float(pix[[21, 22], 1].mean())
        for dx in (-2.5, 2.5):
            draw.line([(gx + dx, gy - 1.0), (gx + dx, gy + 5.0)], fill=dark, width=1)

    for eye, lid in ((slice(36, 42), (37, 38)), (slice(42, 48), (43, 44))):
        draw.polygon(_xy(pix, eye), fill=(245, 245, 245), outline=dark)
        pts = pix[eye]
        cx, cy = pts[:, 0].mean(), pts[:, 1].mean()
        r = 0.30 * (pts[:, 0].max() - pts[:, 0].min())
        draw.ellipse([cx - r, cy - r, cx + r, cy + r], fill=iris)
        draw.ellipse([cx - 1.4, cy - 1.4, cx + 1.4, cy + 1.4], fill=(10, 10, 10))
        if active.get(7):
            draw.line(_xy(pix, list(lid)), fill=dark, width=2)

    nose = _blend(skin, (60, 35, 30), 0.4)
    draw.line(_xy(pix, slice(27, 31)), fill=nose, width=2)
    draw.line(_xy(pix, slice(31, 36)), fill=nose, width=2)
    if active.get(9):
        bx, by = float(pix[28, 0]), float(pix[28, 1])
        for dy in (-2.0, 2.0):
            draw.line([(bx - 5.0, by + dy), (bx + 5.0, by + dy)], fill=dark, width=1)

    draw.polygon(_xy(pix, slice(48, 60)), fill=lip)
    inner_gap = float(pix[65:68, 1].mean() - pix[61:64, 1].mean())
    if inner_gap > 1.2:
        draw.polygon(_xy(pix, slice(60, 68)), fill=(45, 15, 20))
    else:
        draw.line(_xy(pix, [60, 61, 62, 63, 64]), fill=_blend(lip, (0, 0, 0), 0.5), width=1)
    if active.get(14):
        for i, dx in ((48, -5.0), (54, 5.0)):
            cx, cy = pix[i, 0] + dx, pix[i, 1]
            draw.ellipse([cx - 1.5, cy - 1.5, cx + 1.5, cy + 1.5], fill=dark)
    if active.get(17):
        cx = float(pix[57, 0])
        cy = float(pix[57, 1]) + 6.0
        draw.line([(cx - 8.0, cy), (cx, cy + 2.5), (cx + 8.0, cy)], fill=nose, width=2)

    img = img.filter(ImageFilter.GaussianBlur(0.8))
    return np.asarray(img, dtype=np.float64) / 255.0


def generate_synthetic_sample(
    seed: int,
    n_au: int,
    subject_key: int | None = None,
    subject_id: str | None = None,
) -> Sample:
    """Deterministically generate one 144x144 pre-crop sample.

    `seed` drives frame-level variation (labels, expression jitter, noise);
    `subject_key` (default: the seed itself) drives per-subject geometry and
    coloring so multiple frames can share an identity.
    """
    if seed < 0:
        raise ValueError("seed must be >= 0")
    au_ids = au_ids_for_mode(n_au)
    if subject_key is None:
        subject_key = seed
    if subject_id is None:
        subject_id = f"synth{subject_key:06d}"

    rng_geo = np.random.default_rng([subject_key, 7919])
    rng = np.random.default_rng([seed, 104729])

    labels = (rng.random(n_au) < base_occurrence_rates(n_au)).astype(np.uint8)
    active = {au: bool(v) for au, v in zip(au_ids, labels)}

    pts = _template()
    pivot = np.array([0.5, 0.55])
    scale = 1.0 + 0.05 * rng_geo.uniform(-1, 1)
    pts = pivot + (pts - pivot) * scale
    jaw_w = 1.0 + 0.04 * rng_geo.uniform(-1, 1)
    pts[0:17, 0] = 0.5 + (pts[0:17, 0] - 0.5) * jaw_w
    eye_sp = 1.0 + 0.05 * rng_geo.uniform(-1, 1)
    eye_idx = list(range(17, 27)) + list(range(36, 48))
    pts[eye_idx, 0] = 0.5 + (pts[eye_idx, 0] - 0.5) * eye_sp
    mouth_w = 1.0 + 0.08 * rng_geo.uniform(-1, 1)
    mouth_cx = pts[48:68, 0].mean()
    pts[48:68, 0] = mouth_cx + (pts[48:68, 0] - mouth_cx) * mouth_w

    _apply_au_geometry(pts, active)
    pts += rng.normal(0.0, 0.002, size=pts.shape)
    pts += rng.uniform(-1.5, 1.5, size=2) / FRAME_SIZE

    pix = pts * FRAME_SIZE
    if pix.min() < 16.0 or pix.max() >= CROP_SIZE:
        raise RuntimeError("generated landmarks left the crop-safe region")

    image = _draw_face(pix, active, rng_geo)
    image = np.clip(image + rng.normal(0.0, 0.012, size=image.shape), 0.0, 1.0)
    return Sample(
        image=image.astype(np.float32),
        landmarks=pix,
        au_labels=labels,
        subject_id=subject_id,
    )
