"""Simulation, restoration and evaluation toolkit for low-light hazy scenes."""

from .dataset import build_dataset, load_manifest, validate_manifest
from .dehaze import dehaze
from .enhance import enhance
from .evaluate import evaluate_directories
from .haze import (
    apply_haze,
    estimate_atmospheric_light,
    sample_haze_params,
    synthetic_depth,
    transmission_from_depth,
)
from .lowlight import render_low_light, restore_exposure, sample_lowlight_params
from .metrics import exposure_error, psnr, ssim
from .noise import add_sensor_noise, sample_noise_params
from .pipeline import dehaze_then_enhance, enhance_then_dehaze, restore
from .simulate import sample_simulation_params, simulate_scene

__version__ = "0.1.0"

__all__ = [
    "add_sensor_noise",
    "apply_haze",
    "build_dataset",
    "dehaze",
    "dehaze_then_enhance",
    "enhance",
    "enhance_then_dehaze",
    "estimate_atmospheric_light",
    "evaluate_directories",
    "exposure_error",
    "load_manifest",
    "psnr",
    "render_low_light",
    "restore",
    "restore_exposure",
    "sample_haze_params",
    "sample_lowlight_params",
    "sample_noise_params",
    "sample_simulation_params",
    "simulate_scene",
    "ssim",
    "synthetic_depth",
    "transmission_from_depth",
    "validate_manifest",
]
