import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from skimage.metrics import peak_signal_noise_ratio, structural_similarity

from lowhaze.metrics import evaluate_pair, exposure_error, psnr, ssim


class TestPSNR:
    def test_identical_images_are_infinite(self, photo):
        assert psnr(photo, photo) == math.inf

    def test_closed_form(self):
        x = np.zeros((16, 16))
        y = np.full((16, 16), 0.1)
        # MSE = 0.01 -> 10 * log10(1 / 0.01) = 20 dB
        assert psnr(x, y) == pytest.approx(20.0, abs=1e-9)

    def test_matches_skimage(self, photo, rng):
        noisy = np.clip(photo + rng.normal(0, 0.05, photo.shape), 0, 1)
        assert psnr(photo, noisy) == pytest.approx(
            peak_signal_noise_ratio(photo, noisy, data_range=1.0), abs=1e-9
        )

    def test_shape_mismatch_raises(self):
        with pytest.raises(ValueError):
            psnr(np.zeros((4, 4)), np.zeros((5, 4)))

    @settings(max_examples=30, deadline=None)
    @given(sigma=st.floats(0.01, 0.3))
    def test_symmetry(self, sigma):
        r = np.random.default_rng(7)
        x = r.random((24, 24))
        y = np.clip(x + r.normal(0, sigma, x.shape), 0, 1)
        assert psnr(x, y) == pytest.approx(psnr(y, x), abs=1e-12)


class TestSSIM:
    def test_identical_images_score_one(self, photo):
        assert ssim(photo, photo) == pytest.approx(1.0, abs=1e-12)

    def test_matches_skimage_grayscale(self, rng):
        x = rng.random((80, 70))
        y = np.clip(x + rng.normal(0, 0.1, x.shape), 0, 1)
        ref = structural_similarity(
            x, y, data_range=1.0, gaussian_weights=True, sigma=1.5,
            use_sample_covariance=False,
        )
        assert ssim(x, y) == pytest.approx(ref, abs=1e-10)

    def test_matches_skimage_color(self, photo, rng):
        noisy = np.clip(photo + rng.normal(0, 0.08, photo.shape), 0, 1)
        ref = structural_similarity(
            photo, noisy, data_range=1.0, gaussian_weights=True, sigma=1.5,
            use_sample_covariance=False, channel_axis=2,
        )
        assert ssim(photo, noisy) == pytest.approx(ref, abs=1e-10)

    def test_degradation_lowers_score(self, photo, rng):
        mild = np.clip(photo + rng.normal(0, 0.02, photo.shape), 0, 1)
        harsh = np.clip(photo + rng.normal(0, 0.2, photo.shape), 0, 1)
        assert ssim(photo, harsh) < ssim(photo, mild) < 1.0

    def test_tiny_image_raises(self):
        with pytest.raises(ValueError):
            ssim(np.zeros((8, 8)), np.zeros((8, 8)))


class TestExposureError:
    def test_matches_patch_loop_oracle(self, photo):
        # Oracle: explicit double loop over non-overlapping 16x16 patches.
        gray = photo.mean(axis=-1)
        h, w = gray.shape
        deviations = []
        for i in range(0, h - h % 16, 16):
            for j in range(0, w - w % 16, 16):
                deviations.append(abs(gray[i:i + 16, j:j + 16].mean() - 0.6))
        expected = float(np.mean(deviations))
        assert exposure_error(photo) == pytest.approx(expected, abs=1e-12)

    def test_perfectly_exposed_image_scores_zero(self):
        assert exposure_error(np.full((32, 32, 3), 0.6)) == pytest.approx(0.0, abs=1e-12)

    def test_darker_is_worse(self, photo):
        well = 0.6 / max(photo.mean(), 1e-6) * photo
        assert exposure_error(np.clip(well, 0, 1)) < exposure_error(photo * 0.1)

    def test_too_small_raises(self):
        with pytest.raises(ValueError):
            exposure_error(np.zeros((8, 8, 3)))


def test_evaluate_pair_keys(photo, rng):
    noisy = np.clip(photo + rng.normal(0, 0.05, photo.shape), 0, 1)
    scores = evaluate_pair(photo, noisy)
    assert set(scores) == {"psnr", "ssim"}
    assert 0 < scores["ssim"] < 1 and scores["psnr"] > 0
