"""Sample container, dataset directory layout, and fold handling.

Directory layout:
    images/<subject>/<frame>.png      144x144 aligned frames
    landmarks/<subject>/<frame>.txt   68 lines "x y" (pixel coords in the frame)
    au_labels.csv                     path, then one binary column per AU
    folds.json                        {"subject": fold_index, ...}
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image


@dataclass
class Sample:
    """One face: image in [0,1], 68 landmarks (x, y), binary AU labels."""

    image: np.ndarray
    landmarks: np.ndarray
    au_labels: np.ndarray
    subject_id: str

    def validate(self) -> None:
        h, w = self.image.shape[:2]
        if self.image.ndim != 3 or self.image.shape[2] != 3:
            raise ValueError("image must be HxWx3")
        if float(self.image.min()) < 0.0 or float(self.image.max()) > 1.0:
            raise ValueError("pixel values must lie in [0, 1]")
        if self.landmarks.shape != (68, 2):
            raise ValueError("landmarks must be (68, 2)")
        if self.landmarks.min() < 0 or self.landmarks[:, 0].max() >= w or self.landmarks[:, 1].max() >= h:
            raise ValueError("landmarks out of image bounds")
        if not np.isin(self.au_labels, (0, 1)).all():
            raise ValueError("au_labels must be binary")


@dataclass
class DatasetSpec:
    """Where samples come from and how they are split and weighted."""

    source: str  # "synthetic" | "directory"
    n_au: int
    fold_assignment: dict[str, int] = field(default_factory=dict)
    occurrence_rates: np.ndarray | None = None

    def validate(self) -> None:
        if self.source not in ("synthetic", "directory"):
            raise ValueError(f"unknown source {self.source!r}")
        if self.occurrence_rates is not None:
            r = np.asarray(self.occurrence_rates)
            if r.shape != (self.n_au,) or np.any(r <= 0) or np.any(r > 1):
                raise ValueError("occurrence_rates must be n_au values in (0, 1]")


def compute_occurrence_rates(labels: np.ndarray, floor: float | None = None) -> np.ndarray:
    """Per-AU occurrence rates over a (samples, n_au) label matrix.

    Rates are floored away from zero (default 0.5/n_samples) so the
    inverse-frequency weights stay finite on small splits.
    """
    mat = np.asarray(labels, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] == 0:
        raise ValueError("labels must be a non-empty (samples, n_au) matrix")
    if floor is None:
        floor = 0.5 / mat.shape[0]
    return np.clip(mat.mean(axis=0), floor, 1.0)


def check_subject_exclusive(fold_assignment: dict[str, int]) -> None:
    """folds.json maps each subject to exactly one fold, so exclusivity is
    structural; this guards against degenerate fold sets."""
    if fold_assignment and len(set(fold_assignment.values())) < 1:
        raise ValueError("fold assignment is empty")


def subjects_in_fold(fold_assignment: dict[str, int], fold: int) -> set[str]:
    return {s for s, f in fold_assignment.items() if f == fold}


def split_by_fold(samples: list[Sample], fold_assignment: dict[str, int], test_fold: int):
    """Subject-exclusive split: samples of `test_fold` subjects vs the rest."""
    test_subjects = subjects_in_fold(fold_assignment, test_fold)
    train = [s for s in samples if s.subject_id not in test_subjects]
    test = [s for s in samples if s.subject_id in test_subjects]
    return train, test


def save_dataset(root: str | Path, samples: list[Sample], spec: DatasetSpec) -> None:
    root = Path(root)
    (root / "images").mkdir(parents=True, exist_ok=True)
    (root / "landmarks").mkdir(parents=True, exist_ok=True)
    counters: dict[str, int] = {}
    rows = []
    for s in samples:
        idx = counters.get(s.subject_id, 0)
        counters[s.subject_id] = idx + 1
        img_dir = root / "images" / s.subject_id
        lm_dir = root / "landmarks" / s.subject_id
        img_dir.mkdir(parents=True, exist_ok=True)
        lm_dir.mkdir(parents=True, exist_ok=True)
        name = f"{idx:05d}"
        arr = np.clip(np.round(s.image * 255.0), 0, 255).astype(np.uint8)
        Image.fromarray(arr).save(img_dir / f"{name}.png")
        np.savetxt(lm_dir / f"{name}.txt", s.landmarks, fmt="%.4f")
        rel = f"images/{s.subject_id}/{name}.png"
        rows.append([rel] + [int(v) for v in s.au_labels])

    from .synthetic import au_ids_for_mode

    header = ["path"] + [f"AU{k}" for k in au_ids_for_mode(spec.n_au)]
    with open(root / "au_labels.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    with open(root / "folds.json", "w") as fh:
        json.dump(spec.fold_assignment, fh, indent=1, sort_keys=True)


def load_dataset(root: str | Path) -> tuple[list[Sample], DatasetSpec]:
    root = Path(root)
    labels_path = root / "au_labels.csv"
    folds_path = root / "folds.json"
    if not labels_path.exists() or not folds_path.exists():
        raise FileNotFoundError(f"{root} lacks au_labels.csv or folds.json")
    with open(folds_path) as fh:
        fold_assignment = {str(k): int(v) for k, v in json.load(fh).items()}
    check_subject_exclusive(fold_assignment)

    samples = []
    n_au = None
    with open(labels_path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        n_au = len(header) - 1
        for row in reader:
            rel = row[0]
            labels = np.array([int(v) for v in row[1:]], dtype=np.uint8)
            img_path = root / rel
            subject = img_path.parent.name
            lm_path = root / "landmarks" / subject / (img_path.stem + ".txt")
            image = np.asarray(Image.open(img_path).convert("RGB"), dtype=np.float32) / 255.0
            landmarks = np.loadtxt(lm_path, dtype=np.float64).reshape(68, 2)
            if min(image.shape[:2]) < 128:
                raise ValueError(f"{rel}: images must be at least 128x128")
            samples.append(Sample(image=image, landmarks=landmarks,
                                  au_labels=labels, subject_id=subject))
    spec = DatasetSpec(source="directory", n_au=n_au, fold_assignment=fold_assignment)
    spec.validate()
    return samples, spec


def build_synthetic_dataset(subjects: int, frames: int, n_au: int, seed: int,
                            n_folds: int = 3) -> tuple[list[Sample], DatasetSpec]:
    """Generate subjects*frames samples with a round-robin fold assignment."""
    from .synthetic import generate_synthetic_sample

    samples = []
    fold_assignment = {}
    for s in range(subjects):
        sid = f"s{s:03d}"
        fold_assignment[sid] = s % n_folds
        for f in range(frames):
            samples.append(generate_synthetic_sample(
                seed=seed + s * 100003 + f, n_au=n_au,
                subject_key=seed + s, subject_id=sid))
    labels = np.stack([s.au_labels for s in samples])
    spec = DatasetSpec(source="synthetic", n_au=n_au, fold_assignment=fold_assignment,
                       occurrence_rates=compute_occurrence_rates(labels))
    spec.validate()
    return samples, spec
