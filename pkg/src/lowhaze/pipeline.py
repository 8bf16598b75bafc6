"""Two-path visibility restoration for low-light hazy images.

A degraded image can be recovered along two routes: brighten first then
dehaze, or dehaze first then brighten. Physically the order of the two
phenomena does not matter, so both routes target the same clean image and
their outputs are fused into the final result.
"""

import numpy as np

from .dehaze import dehaze
from .enhance import enhance
from .lowlight import restore_exposure


def enhance_then_dehaze(image, params=None, denoise=False):
    bright = enhance(image, params=params, denoise=denoise)
    restored, _, _ = dehaze(bright)
    return restored


def dehaze_then_enhance(image, params=None, denoise=False):
    clean, _, _ = dehaze(image)
    return enhance(clean, params=params, denoise=denoise)


def fuse(a, b):
    """Combine the outputs of the two restoration paths."""
    return np.clip((np.asarray(a, dtype=np.float64) + np.asarray(b)) / 2.0, 0.0, 1.0)


def restore(image, params=None, denoise=False):
    """Full two-path restoration of a low-light hazy image."""
    path_ed = enhance_then_dehaze(image, params=params, denoise=denoise)
    path_de = dehaze_then_enhance(image, params=params, denoise=denoise)
    return fuse(path_ed, path_de)


def invert_ideal(image, params, transmission, atmos_light):
    """Invert the noiseless degradation model with known parameters.

    Verification helper: when transmission, atmospheric light and the
    exposure parameters are the exact values used during simulation, the
    clear image is recovered up to clipping.
    """
    image = np.asarray(image, dtype=np.float64)
    t = np.asarray(transmission, dtype=np.float64)[..., np.newaxis]
    a = np.asarray(atmos_light, dtype=np.float64).reshape(1, 1, -1)

    low = np.clip((image - a * (1.0 - t)) / t, 0.0, 1.0)
    return restore_exposure(low, params.lowlight)
