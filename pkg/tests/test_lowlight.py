import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowhaze.lowlight import (
    ALPHA_RANGE,
    BETA_RANGE,
    GAMMA_RANGE,
    LowLightParams,
    render_low_light,
    restore_exposure,
    sample_lowlight_params,
)


def test_rendering_formula_matches_model(photo):
    params = LowLightParams(alpha=0.95, beta=0.6, gamma=2.0)
    out = render_low_light(photo, params)
    expected = 0.6 * (0.95 * photo) ** 2.0
    np.testing.assert_allclose(out, expected, atol=1e-12)


def test_rendering_darkens(photo):
    params = LowLightParams(alpha=0.95, beta=0.6, gamma=2.0)
    out = render_low_light(photo, params)
    assert out.mean() < photo.mean()
    assert np.all(out <= photo + 1e-12)


def test_sampled_params_within_ranges(rng):
    for _ in range(1000):
        p = sample_lowlight_params(rng)
        assert ALPHA_RANGE[0] <= p.alpha <= ALPHA_RANGE[1]
        assert BETA_RANGE[0] <= p.beta <= BETA_RANGE[1]
        assert GAMMA_RANGE[0] <= p.gamma <= GAMMA_RANGE[1]


def test_restore_inverts_rendering(photo, rng):
    params = sample_lowlight_params(rng)
    low = render_low_light(photo, params)
    np.testing.assert_allclose(restore_exposure(low, params), photo, atol=1e-9)


@settings(max_examples=50, deadline=None)
@given(
    alpha=st.floats(*ALPHA_RANGE),
    beta=st.floats(*BETA_RANGE),
    gamma=st.floats(*GAMMA_RANGE),
    value=st.floats(0.0, 1.0),
)
def test_rendering_stays_in_unit_range(alpha, beta, gamma, value):
    params = LowLightParams(alpha=alpha, beta=beta, gamma=gamma)
    out = render_low_light(np.full((4, 4, 3), value), params)
    assert np.all(out >= 0.0) and np.all(out <= 1.0)


@pytest.mark.parametrize("gamma", [1.5, 2.0, 2.5])
def test_rendering_monotone_in_input(gamma):
    params = LowLightParams(alpha=0.95, beta=0.6, gamma=gamma)
    ramp = np.linspace(0, 1, 256).reshape(1, -1, 1)
    out = render_low_light(ramp, params).ravel()
    assert np.all(np.diff(out) >= 0)
