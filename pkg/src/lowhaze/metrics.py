"""Full-reference quality metrics (PSNR, SSIM) and an exposure measure.

SSIM follows Wang et al.'s structural similarity with an 11-tap Gaussian
window (sigma 1.5) and the standard stabilising constants K1=0.01,
K2=0.03. Colour images are scored per channel and averaged.
"""

import math

import numpy as np
from scipy.ndimage import gaussian_filter

SSIM_K1 = 0.01
SSIM_K2 = 0.03
SSIM_SIGMA = 1.5
SSIM_WIN = 11

WELL_EXPOSED_LEVEL = 0.6
EXPOSURE_PATCH = 16


def psnr(reference, test, data_range=1.0):
    """Peak signal-to-noise ratio in dB. Identical images give +inf."""
    reference = np.asarray(reference, dtype=np.float64)
    test = np.asarray(test, dtype=np.float64)
    if reference.shape != test.shape:
        raise ValueError("shape mismatch")
    mse = np.mean((reference - test) ** 2)
    if mse == 0:
        return math.inf
    return 10.0 * math.log10(data_range**2 / mse)


def _ssim_channel(x, y, data_range):
    c1 = (SSIM_K1 * data_range) ** 2
    c2 = (SSIM_K2 * data_range) ** 2

    # Truncate the Gaussian so the effective window is SSIM_WIN taps wide.
    radius = (SSIM_WIN - 1) // 2
    truncate = radius / SSIM_SIGMA

    def smooth(a):
        return gaussian_filter(a, SSIM_SIGMA, truncate=truncate)

    ux, uy = smooth(x), smooth(y)
    uxx, uyy, uxy = smooth(x * x), smooth(y * y), smooth(x * y)
    vx = uxx - ux * ux
    vy = uyy - uy * uy
    vxy = uxy - ux * uy

    num = (2 * ux * uy + c1) * (2 * vxy + c2)
    den = (ux**2 + uy**2 + c1) * (vx + vy + c2)
    ssim_map = num / den

    # Border pixels see partially reflected windows; exclude them.
    return ssim_map[radius:-radius, radius:-radius].mean()


def ssim(reference, test, data_range=1.0):
    """Mean structural similarity between two images.

    Accepts (H, W) or (H, W, C) arrays; channels are averaged.
    """
    reference = np.asarray(reference, dtype=np.float64)
    test = np.asarray(test, dtype=np.float64)
    if reference.shape != test.shape:
        raise ValueError("shape mismatch")
    if min(reference.shape[:2]) < SSIM_WIN:
        raise ValueError(f"images must be at least {SSIM_WIN} pixels on a side")
    if reference.ndim == 2:
        return float(_ssim_channel(reference, test, data_range))
    return float(np.mean([
        _ssim_channel(reference[..., c], test[..., c], data_range)
        for c in range(reference.shape[-1])
    ]))


def exposure_error(image, level=WELL_EXPOSED_LEVEL, patch=EXPOSURE_PATCH):
    """Distance of local average intensity from a well-exposed level.

    The image is reduced to intensity, cut into non-overlapping
    patch x patch blocks (remainders dropped), and the mean absolute
    deviation of block means from `level` is returned. Lower is better
    exposed.
    """
    image = np.asarray(image, dtype=np.float64)
    gray = image.mean(axis=-1) if image.ndim == 3 else image
    h, w = gray.shape
    nh, nw = h // patch, w // patch
    if nh == 0 or nw == 0:
        raise ValueError(f"image smaller than one {patch}x{patch} patch")
    blocks = gray[: nh * patch, : nw * patch].reshape(nh, patch, nw, patch)
    block_means = blocks.mean(axis=(1, 3))
    return float(np.abs(block_means - level).mean())


def evaluate_pair(reference, test, data_range=1.0):
    return {
        "psnr": psnr(reference, test, data_range),
        "ssim": ssim(reference, test, data_range),
    }
