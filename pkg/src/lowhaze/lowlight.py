"""Low-light rendering based on the Retinex imaging model.

A well-exposed image I is darkened through a combination of linear
attenuation and gamma adjustment:

    I_low = beta * (alpha * I) ** gamma

which approximates the per-pixel illumination drop of an under-exposed
capture. Sensor noise is modelled separately (see `lowhaze.noise`).
"""

from dataclasses import dataclass

import numpy as np

# Value ranges fitted against real scenes at different exposure levels.
ALPHA_RANGE = (0.9, 1.0)
BETA_RANGE = (0.5, 0.7)
GAMMA_RANGE = (1.5, 2.5)


@dataclass(frozen=True)
class LowLightParams:
    alpha: float
    beta: float
    gamma: float


def sample_lowlight_params(rng):
    """Draw exposure-adjustment parameters uniformly from their ranges."""
    return LowLightParams(
        alpha=float(rng.uniform(*ALPHA_RANGE)),
        beta=float(rng.uniform(*BETA_RANGE)),
        gamma=float(rng.uniform(*GAMMA_RANGE)),
    )


def render_low_light(image, params):
    """Darken a well-exposed image.

    Args:
        image: float RGB array in [0, 1].
        params: LowLightParams.

    Returns:
        Under-exposed image, same shape, clipped to [0, 1].
    """
    image = np.asarray(image, dtype=np.float64)
    low = params.beta * np.power(params.alpha * image, params.gamma)
    return np.clip(low, 0.0, 1.0)


def restore_exposure(low, params):
    """Invert `render_low_light` for known parameters.

    Exact up to clipping: pixels saturated during rendering cannot be
    recovered.
    """
    low = np.asarray(low, dtype=np.float64)
    lifted = np.power(np.clip(low, 0.0, 1.0) / params.beta, 1.0 / params.gamma)
    return np.clip(lifted / params.alpha, 0.0, 1.0)
