"""Classical low-light enhancement.

Inverts the linear-plus-gamma darkening model. When the true rendering
parameters are unknown, an automatic gamma is chosen so that the mean
intensity lands on a well-exposed target level, followed by optional
denoising (under-exposed captures carry amplified sensor noise).
"""

import cv2
import numpy as np

from .lowlight import LowLightParams, restore_exposure
from .metrics import WELL_EXPOSED_LEVEL


def auto_gamma(image, target=WELL_EXPOSED_LEVEL):
    """Gamma that maps the image's mean intensity onto `target`."""
    mean = float(np.clip(np.asarray(image, dtype=np.float64).mean(), 1e-4, 1.0 - 1e-4))
    return np.log(target) / np.log(mean)


def enhance(image, params=None, target=WELL_EXPOSED_LEVEL, denoise=False):
    """Brighten an under-exposed float RGB image in [0, 1].

    With `params` (known LowLightParams) the darkening model is inverted
    exactly; otherwise a global auto-gamma correction is applied.
    """
    image = np.clip(np.asarray(image, dtype=np.float64), 0.0, 1.0)
    if params is not None:
        out = restore_exposure(image, params)
    else:
        out = np.power(image, auto_gamma(image, target))

    if denoise:
        as_u8 = (np.clip(out, 0.0, 1.0) * 255.0).round().astype(np.uint8)
        out = cv2.fastNlMeansDenoisingColored(as_u8, None, 5, 5, 7, 21) / 255.0
    return np.clip(out, 0.0, 1.0)
