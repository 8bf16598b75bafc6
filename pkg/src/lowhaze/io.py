"""Image I/O helpers. All in-memory images are float64 RGB in [0, 1]."""

import os

import cv2
import numpy as np

IMAGE_EXTENSIONS = (".png", ".jpg", ".jpeg", ".bmp", ".tiff", ".tif", ".webp")


def read_image(path):
    """Load an image as float64 RGB in [0, 1]. Raises IOError if unreadable."""
    bgr = cv2.imread(str(path), cv2.IMREAD_COLOR)
    if bgr is None:
        raise IOError(f"cannot read image: {path}")
    rgb = cv2.cvtColor(bgr, cv2.COLOR_BGR2RGB)
    return rgb.astype(np.float64) / 255.0


def write_image(path, image):
    """Save a float RGB image in [0, 1] as an 8-bit file."""
    arr = np.clip(np.asarray(image, dtype=np.float64), 0.0, 1.0)
    bgr = cv2.cvtColor((arr * 255.0).round().astype(np.uint8), cv2.COLOR_RGB2BGR)
    if not cv2.imwrite(str(path), bgr):
        raise IOError(f"cannot write image: {path}")


def list_images(directory):
    """Sorted list of image file paths directly inside `directory`."""
    names = sorted(
        f for f in os.listdir(directory)
        if f.lower().endswith(IMAGE_EXTENSIONS)
    )
    return [os.path.join(directory, f) for f in names]
