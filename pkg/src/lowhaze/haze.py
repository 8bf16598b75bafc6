"""Haze synthesis with the atmospheric scattering model.

    I_hazy(x) = J(x) * t(x) + A * (1 - t(x))

where t(x) = exp(-beta * d(x)) is the transmission derived from scene depth
and A is the global atmospheric light. Since A depends on the ambient
illumination, it is estimated from the brightest pixels of the image being
hazed, so darkening must happen before haze generation.
"""

from dataclasses import dataclass

import cv2
import numpy as np

SCATTERING_RANGE = (0.1, 0.2)

# Synthetic depth spans this many distance units so that scattering
# coefficients in SCATTERING_RANGE produce a visible haze gradient.
DEFAULT_MAX_DEPTH = 15.0

DEPTH_MODES = ("linear", "radial", "turbulent")


@dataclass(frozen=True)
class HazeParams:
    scattering: float
    depth_mode: str = "turbulent"
    max_depth: float = DEFAULT_MAX_DEPTH
    light_fraction: float = 0.001


def sample_haze_params(rng):
    """Draw a scattering coefficient and a random synthetic depth layout."""
    return HazeParams(
        scattering=float(rng.uniform(*SCATTERING_RANGE)),
        depth_mode=str(rng.choice(DEPTH_MODES)),
    )


def synthetic_depth(shape, rng, mode="turbulent", max_depth=DEFAULT_MAX_DEPTH):
    """Build a plausible smooth depth map for an image without depth data.

    Modes:
        linear:    top of frame is far, bottom is near (outdoor horizon).
        radial:    image borders are far, center is near.
        turbulent: multi-scale smooth noise, for patchy haze.

    Returns a (H, W) float map in [0, max_depth].
    """
    h, w = shape
    if mode == "linear":
        depth = np.tile(np.linspace(1.0, 0.05, h).reshape(h, 1), (1, w))
        sway = np.linspace(0.85, 1.15, w).reshape(1, w)
        depth = depth * sway
    elif mode == "radial":
        yy, xx = np.mgrid[0:h, 0:w]
        cy, cx = (h - 1) / 2.0, (w - 1) / 2.0
        r = np.hypot((yy - cy) / max(cy, 1.0), (xx - cx) / max(cx, 1.0))
        depth = np.clip(r, 0.0, None)
    elif mode == "turbulent":
        depth = np.zeros((h, w), dtype=np.float64)
        for scale in (8, 16, 32, 64):
            coarse = rng.standard_normal((max(1, h // scale), max(1, w // scale)))
            depth += cv2.resize(coarse, (w, h), interpolation=cv2.INTER_CUBIC) / scale
    else:
        raise ValueError(f"unknown depth mode: {mode!r}")

    lo, hi = depth.min(), depth.max()
    if hi - lo < 1e-12:
        return np.full((h, w), max_depth / 2.0)
    return (depth - lo) / (hi - lo) * max_depth


def transmission_from_depth(depth, scattering):
    """t(x) = exp(-beta * d(x)). Depth must be non-negative."""
    depth = np.asarray(depth, dtype=np.float64)
    if scattering < 0:
        raise ValueError("scattering coefficient must be non-negative")
    if np.any(depth < 0):
        raise ValueError("depth must be non-negative")
    return np.exp(-scattering * depth)


def estimate_atmospheric_light(image, fraction=0.001):
    """Global atmospheric light from the brightest pixels of `image`.

    Pixels are ranked by channel-mean intensity; A is the mean RGB of the
    top `fraction` of them (at least one pixel).
    """
    image = np.asarray(image, dtype=np.float64)
    flat = image.reshape(-1, image.shape[-1])
    intensity = flat.mean(axis=1)
    count = max(1, int(round(fraction * flat.shape[0])))
    idx = np.argpartition(intensity, -count)[-count:]
    return flat[idx].mean(axis=0)


def apply_haze(image, transmission, atmospheric_light):
    """Blend scene radiance with airlight using the scattering model."""
    image = np.asarray(image, dtype=np.float64)
    t = np.asarray(transmission, dtype=np.float64)
    if t.ndim == image.ndim - 1:
        t = t[..., np.newaxis]
    a = np.asarray(atmospheric_light, dtype=np.float64).reshape(
        (1,) * (image.ndim - 1) + (-1,)
    )
    return np.clip(image * t + a * (1.0 - t), 0.0, 1.0)
