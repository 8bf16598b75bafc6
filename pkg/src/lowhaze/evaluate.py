"""Batch evaluation of restored images against ground truth."""

import os

from .io import list_images, read_image
from .metrics import evaluate_pair


def evaluate_directories(test_dir, reference_dir):
    """Score every image in `test_dir` against its same-named reference.

    Returns (per_image, summary) where per_image maps file stem to metric
    dict and summary holds the means.
    """
    refs = {os.path.splitext(os.path.basename(p))[0]: p
            for p in list_images(reference_dir)}
    per_image = {}
    for path in list_images(test_dir):
        stem = os.path.splitext(os.path.basename(path))[0]
        if stem not in refs:
            raise ValueError(f"no reference image for {stem!r}")
        per_image[stem] = evaluate_pair(read_image(refs[stem]), read_image(path))
    if not per_image:
        raise ValueError(f"no images found in {test_dir}")

    summary = {
        metric: sum(scores[metric] for scores in per_image.values()) / len(per_image)
        for metric in ("psnr", "ssim")
    }
    return per_image, summary
