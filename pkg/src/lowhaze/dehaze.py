"""Single-image dehazing with the dark channel prior.

Classical reference restorer: estimates atmospheric light from the
brightest dark-channel pixels, derives a transmission map, refines it with
a guided filter, and inverts the scattering model.
"""

import cv2
import numpy as np


def dark_channel(image, window=15):
    """Min over channels followed by a min filter of size `window`."""
    image = np.asarray(image, dtype=np.float64)
    mins = image.min(axis=2)
    kernel = cv2.getStructuringElement(cv2.MORPH_RECT, (window, window))
    return cv2.erode(mins, kernel)


def atmospheric_light_dcp(image, dark, fraction=0.001):
    """Mean colour of the brightest pixels within the haziest regions."""
    image = np.asarray(image, dtype=np.float64)
    flat_img = image.reshape(-1, 3)
    flat_dark = dark.reshape(-1)
    count = max(1, int(round(fraction * flat_dark.size)))
    idx = np.argpartition(flat_dark, -count)[-count:]
    brightest = idx[np.argsort(flat_img[idx].mean(axis=1))[-count:]]
    return flat_img[brightest].mean(axis=0)


def _box(a, r):
    return cv2.blur(a, (r, r))


def guided_filter(guide, src, radius=60, eps=1e-4):
    """Edge-preserving smoothing of `src` guided by the grayscale `guide`."""
    mean_g = _box(guide, radius)
    mean_s = _box(src, radius)
    corr_gs = _box(guide * src, radius)
    corr_gg = _box(guide * guide, radius)

    cov_gs = corr_gs - mean_g * mean_s
    var_g = corr_gg - mean_g * mean_g

    a = cov_gs / (var_g + eps)
    b = mean_s - a * mean_g
    return _box(a, radius) * guide + _box(b, radius)


def estimate_transmission(image, atmos, omega=0.95, window=15):
    """Dark-channel transmission estimate; omega keeps a trace of haze."""
    normalized = np.asarray(image, dtype=np.float64) / np.maximum(atmos, 1e-6)
    return 1.0 - omega * dark_channel(normalized, window)


def dehaze(image, omega=0.95, t_min=0.1, window=15, fraction=0.001):
    """Remove haze from a float RGB image in [0, 1].

    Returns (dehazed, transmission, atmospheric_light).
    """
    image = np.clip(np.asarray(image, dtype=np.float64), 0.0, 1.0)
    dark = dark_channel(image, window)
    atmos = atmospheric_light_dcp(image, dark, fraction)

    t = estimate_transmission(image, atmos, omega, window)
    gray = image.mean(axis=2)
    t = guided_filter(gray, t)
    t = np.clip(t, t_min, 1.0)

    radiance = (image - atmos) / t[..., np.newaxis] + atmos
    return np.clip(radiance, 0.0, 1.0), t, atmos
