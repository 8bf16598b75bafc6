"""Paired dataset construction with a JSON manifest.

Given a directory of clear images, every image is expanded into the four
aligned groups (clear / low / hazy / low_hazy) under the output directory:

    out/
      clear/<name>.png      well-exposed haze-free ground truth
      low/<name>.png        under-exposed + noise
      hazy/<name>.png       well-exposed + haze
      low_hazy/<name>.png   under-exposed + haze + noise
      manifest.json

The manifest records per-image simulation parameters, the train/test
split, and the master seed, so the build is fully reproducible: the same
inputs and seed produce byte-identical outputs.
"""

import json
import os
from dataclasses import dataclass

import cv2
import numpy as np

from .io import list_images, read_image, write_image
from .simulate import SimulationParams, sample_simulation_params, simulate_scene

GROUPS = ("clear", "low", "hazy", "low_hazy")

MANIFEST_VERSION = 1

# Train share of the published split (8073 of 8970 simulated scenes).
DEFAULT_TRAIN_FRACTION = 8073 / 8970


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    split: str
    seed: int
    params: SimulationParams
    atmos_light_low: tuple
    atmos_light_normal: tuple

    def to_dict(self):
        return {
            "name": self.name,
            "split": self.split,
            "seed": self.seed,
            "params": self.params.to_dict(),
            "atmos_light_low": list(self.atmos_light_low),
            "atmos_light_normal": list(self.atmos_light_normal),
            "paths": {g: f"{g}/{self.name}.png" for g in GROUPS},
        }


def _assign_splits(count, train_fraction, rng):
    n_train = int(round(count * train_fraction))
    order = rng.permutation(count)
    splits = np.empty(count, dtype=object)
    splits[order[:n_train]] = "train"
    splits[order[n_train:]] = "test"
    return list(splits)


def build_dataset(input_dir, output_dir, seed=0,
                  train_fraction=DEFAULT_TRAIN_FRACTION,
                  resize=None, progress=None):
    """Simulate the four-group dataset for every image in `input_dir`.

    Args:
        input_dir: directory of clear source images.
        output_dir: destination root; group subdirectories are created.
        seed: master seed; per-image generators are spawned from it.
        train_fraction: share of images assigned to the train split.
        resize: optional (width, height) applied to sources before
            simulation.
        progress: optional callable invoked with (index, total, name).

    Returns the manifest dict (also written to manifest.json).
    """
    files = list_images(input_dir)
    if not files:
        raise ValueError(f"no images found in {input_dir}")

    os.makedirs(output_dir, exist_ok=True)
    for group in GROUPS:
        os.makedirs(os.path.join(output_dir, group), exist_ok=True)

    master = np.random.SeedSequence(seed)
    split_rng = np.random.default_rng(master.spawn(1)[0])
    splits = _assign_splits(len(files), train_fraction, split_rng)
    child_seqs = master.spawn(len(files))

    entries = []
    for i, (path, split, seq) in enumerate(zip(files, splits, child_seqs)):
        name = os.path.splitext(os.path.basename(path))[0]
        if progress:
            progress(i, len(files), name)

        clear = read_image(path)
        if resize is not None:
            clear = cv2.resize(clear, tuple(resize), interpolation=cv2.INTER_AREA)

        rng = np.random.default_rng(seq)
        params = sample_simulation_params(rng)
        scene = simulate_scene(clear, params, rng)

        for group in GROUPS:
            write_image(
                os.path.join(output_dir, group, f"{name}.png"),
                getattr(scene, group),
            )

        entries.append(ManifestEntry(
            name=name,
            split=split,
            seed=int(seq.generate_state(1)[0]),
            params=params,
            atmos_light_low=tuple(scene.atmos_light_low),
            atmos_light_normal=tuple(scene.atmos_light_normal),
        ))

    manifest = {
        "version": MANIFEST_VERSION,
        "master_seed": seed,
        "train_fraction": train_fraction,
        "groups": list(GROUPS),
        "counts": {
            "total": len(entries),
            "train": sum(e.split == "train" for e in entries),
            "test": sum(e.split == "test" for e in entries),
        },
        "images": [e.to_dict() for e in entries],
    }
    with open(os.path.join(output_dir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
    return manifest


def load_manifest(path):
    """Read and validate a manifest.json produced by `build_dataset`."""
    with open(path) as fh:
        manifest = json.load(fh)
    validate_manifest(manifest)
    return manifest


def validate_manifest(manifest):
    """Raise ValueError when the manifest violates its schema."""
    for key in ("version", "master_seed", "train_fraction", "groups",
                "counts", "images"):
        if key not in manifest:
            raise ValueError(f"manifest missing key: {key}")
    if manifest["version"] != MANIFEST_VERSION:
        raise ValueError(f"unsupported manifest version: {manifest['version']}")
    if list(manifest["groups"]) != list(GROUPS):
        raise ValueError("manifest groups mismatch")
    counts = manifest["counts"]
    if counts["train"] + counts["test"] != counts["total"]:
        raise ValueError("split counts do not add up")
    if counts["total"] != len(manifest["images"]):
        raise ValueError("image count mismatch")
    for entry in manifest["images"]:
        for key in ("name", "split", "seed", "params", "paths"):
            if key not in entry:
                raise ValueError(f"manifest entry missing key: {key}")
        if entry["split"] not in ("train", "test"):
            raise ValueError(f"bad split value: {entry['split']}")
        if set(entry["paths"]) != set(GROUPS):
            raise ValueError("entry paths must cover all groups")
        SimulationParams.from_dict(entry["params"])
