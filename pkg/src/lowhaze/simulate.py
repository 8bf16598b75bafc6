"""End-to-end simulation of paired low-light hazy scenes.

From one clear, well-exposed image the pipeline produces the four aligned
variants used for supervised training:

    clear     well-exposed, haze-free (the ground truth)
    low       under-exposed, haze-free, with sensor noise
    hazy      well-exposed with haze
    low_hazy  under-exposed with haze and sensor noise (the real-world input)

The phases run in physical order: darken first, then generate haze (the
atmospheric light tracks the ambient illumination), then add noise.
"""

from dataclasses import dataclass, field, asdict

import numpy as np

from . import haze, lowlight, noise


@dataclass(frozen=True)
class SimulationParams:
    lowlight: lowlight.LowLightParams
    haze: haze.HazeParams
    noise: noise.NoiseParams

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        return cls(
            lowlight=lowlight.LowLightParams(**d["lowlight"]),
            haze=haze.HazeParams(**d["haze"]),
            noise=noise.NoiseParams(**d["noise"]),
        )


def sample_simulation_params(rng):
    return SimulationParams(
        lowlight=lowlight.sample_lowlight_params(rng),
        haze=haze.sample_haze_params(rng),
        noise=noise.sample_noise_params(rng),
    )


@dataclass
class SimulatedScene:
    clear: np.ndarray
    low: np.ndarray
    hazy: np.ndarray
    low_hazy: np.ndarray
    transmission: np.ndarray
    atmos_light_low: np.ndarray
    atmos_light_normal: np.ndarray
    params: SimulationParams = field(repr=False, default=None)


def simulate_scene(clear, params, rng, depth=None, add_noise=True):
    """Render the four-image group for one clear input.

    Args:
        clear: float RGB image in [0, 1].
        params: SimulationParams.
        rng: numpy Generator; drives depth synthesis and noise draws.
        depth: optional (H, W) depth map; synthesised when absent.
        add_noise: disable to get the noiseless physical model, e.g. for
            verification.

    Returns:
        SimulatedScene with all four variants plus the intermediates.
    """
    clear = np.clip(np.asarray(clear, dtype=np.float64), 0.0, 1.0)
    if depth is None:
        depth = haze.synthetic_depth(
            clear.shape[:2], rng,
            mode=params.haze.depth_mode,
            max_depth=params.haze.max_depth,
        )
    t = haze.transmission_from_depth(depth, params.haze.scattering)

    low_clean = lowlight.render_low_light(clear, params.lowlight)

    a_low = haze.estimate_atmospheric_light(low_clean, params.haze.light_fraction)
    a_normal = haze.estimate_atmospheric_light(clear, params.haze.light_fraction)

    hazy = haze.apply_haze(clear, t, a_normal)
    low_hazy_clean = haze.apply_haze(low_clean, t, a_low)

    if add_noise:
        low = noise.add_sensor_noise(low_clean, params.noise, rng)
        low_hazy = noise.add_sensor_noise(low_hazy_clean, params.noise, rng)
    else:
        low, low_hazy = low_clean, low_hazy_clean

    return SimulatedScene(
        clear=clear,
        low=low,
        hazy=hazy,
        low_hazy=low_hazy,
        transmission=t,
        atmos_light_low=a_low,
        atmos_light_normal=a_normal,
        params=params,
    )
