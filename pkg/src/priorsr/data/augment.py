"""Crop/flip augmentation with landmark-consistent transforms."""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

from .dataset import Sample

CROP_SIZE = 128


def _load_flip_permutation() -> np.ndarray:
    with resources.files("priorsr.resources").joinpath("flip_pairs_68.json").open() as fh:
        pairs = json.load(fh)["pairs"]
    perm = np.arange(68)
    for i, j in pairs:
        perm[i], perm[j] = j, i
    return perm


FLIP_PERMUTATION = _load_flip_permutation()


def flip_landmarks(landmarks: np.ndarray, width: int) -> np.ndarray:
    """Mirror x coords and remap left/right point indices."""
    out = landmarks.copy()
    out[:, 0] = (width - 1) - out[:, 0]
    return out[FLIP_PERMUTATION]


def flip_image(image: np.ndarray) -> np.ndarray:
    return image[:, ::-1].copy()


def align_and_augment(sample: Sample, train_mode: bool, rng: np.random.Generator) -> Sample:
    """Crop a 144-frame (or larger) sample to 128x128.

    Training mode takes a uniformly random crop and flips horizontally with
    probability 0.5; eval mode center-crops. Landmarks follow the same
    transform. The rng is consumed in a fixed order (crop y, crop x, flip)
    so runs are reproducible.
    """
    h, w = sample.image.shape[:2]
    if h < CROP_SIZE or w < CROP_SIZE:
        raise ValueError(f"input {h}x{w} smaller than {CROP_SIZE}x{CROP_SIZE}")
    if train_mode:
        oy = int(rng.integers(0, h - CROP_SIZE + 1))
        ox = int(rng.integers(0, w - CROP_SIZE + 1))
        do_flip = bool(rng.random() < 0.5)
    else:
        oy, ox = (h - CROP_SIZE) // 2, (w - CROP_SIZE) // 2
        do_flip = False

    image = sample.image[oy:oy + CROP_SIZE, ox:ox + CROP_SIZE].copy()
    landmarks = sample.landmarks - np.array([ox, oy], dtype=np.float64)
    if do_flip:
        image = flip_image(image)
        landmarks = flip_landmarks(landmarks, CROP_SIZE)
    return Sample(image=image, landmarks=landmarks,
                  au_labels=sample.au_labels.copy(), subject_id=sample.subject_id)
