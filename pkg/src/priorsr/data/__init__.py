from .augment import align_and_augment, flip_image, flip_landmarks, FLIP_PERMUTATION
from .dataset import (
    DatasetSpec,
    Sample,
    build_synthetic_dataset,
    compute_occurrence_rates,
    load_dataset,
    save_dataset,
    split_by_fold,
    subjects_in_fold,
)
from .heatmaps import HEATMAP_SIGMA, HEATMAP_SIZE, render_heatmaps
from .labels import binarize_intensities, compute_au_weights
from .resize import bicubic_downsample, bicubic_upsample, cubic_kernel, resize_bicubic
from .synthetic import (
    AU_IDS_12,
    AU_IDS_8,
    CROP_SIZE,
    FRAME_SIZE,
    au_ids_for_mode,
    base_occurrence_rates,
    generate_synthetic_sample,
)

__all__ = [
    "AU_IDS_12", "AU_IDS_8", "CROP_SIZE", "FRAME_SIZE", "FLIP_PERMUTATION",
    "DatasetSpec", "HEATMAP_SIGMA", "HEATMAP_SIZE", "Sample",
    "align_and_augment", "au_ids_for_mode", "base_occurrence_rates",
    "bicubic_downsample", "bicubic_upsample", "binarize_intensities",
    "build_synthetic_dataset", "compute_au_weights", "compute_occurrence_rates",
    "cubic_kernel", "flip_image", "flip_landmarks", "generate_synthetic_sample",
    "load_dataset", "render_heatmaps", "resize_bicubic", "save_dataset",
    "split_by_fold", "subjects_in_fold",
]
