"""Signal-dependent sensor noise for under-exposed captures.

Follows the realistic camera noise model used for blind denoising: in the
linear irradiance domain the noise is heteroscedastic Gaussian,

    n(L) ~ N(0, sigma(L)),   sigma(L)^2 = L * sigma_s^2 + sigma_c^2,

where the L-proportional term approximates photon shot noise and the
constant term covers read-out noise. The ISP is modelled with a gamma
camera response function: the sRGB-like input is linearised, corrupted,
then mapped back through the CRF.
"""

from dataclasses import dataclass

import numpy as np

SIGMA_S_RANGE = (0.0, 0.16)
SIGMA_C_RANGE = (0.0, 0.06)

CRF_GAMMA = 2.2


@dataclass(frozen=True)
class NoiseParams:
    sigma_s: float
    sigma_c: float


def sample_noise_params(rng):
    return NoiseParams(
        sigma_s=float(rng.uniform(*SIGMA_S_RANGE)),
        sigma_c=float(rng.uniform(*SIGMA_C_RANGE)),
    )


def noise_std(linear_signal, params):
    """Per-pixel noise standard deviation in the linear domain."""
    linear_signal = np.asarray(linear_signal, dtype=np.float64)
    return np.sqrt(
        np.clip(linear_signal, 0.0, None) * params.sigma_s**2 + params.sigma_c**2
    )


def add_sensor_noise(image, params, rng, crf_gamma=CRF_GAMMA):
    """Corrupt a float RGB image in [0, 1] with ISP-aware sensor noise.

    With crf_gamma=1.0 the noise is injected directly in the image domain,
    which is useful for verifying the variance law.
    """
    image = np.clip(np.asarray(image, dtype=np.float64), 0.0, 1.0)
    linear = np.power(image, crf_gamma)
    noisy = linear + rng.standard_normal(linear.shape) * noise_std(linear, params)
    noisy = np.clip(noisy, 0.0, None)
    return np.clip(np.power(noisy, 1.0 / crf_gamma), 0.0, 1.0)
