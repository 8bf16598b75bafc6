import numpy as np
import pytest
from scipy.ndimage import gaussian_filter


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def photo(rng):
    """Smooth, natural-looking RGB test image in [0.05, 0.95]."""
    raw = rng.random((96, 128, 3))
    smooth = gaussian_filter(raw, sigma=(6, 6, 0))
    lo, hi = smooth.min(), smooth.max()
    return 0.05 + 0.9 * (smooth - lo) / (hi - lo)


@pytest.fixture
def depth(rng):
    d = gaussian_filter(rng.random((96, 128)), sigma=8)
    return (d - d.min()) / (d.max() - d.min()) * 15.0
