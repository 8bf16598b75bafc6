import json
import os

import numpy as np
import pytest
from scipy.ndimage import gaussian_filter

from lowhaze.cli import main
from lowhaze.io import read_image, write_image


@pytest.fixture
def source_dir(tmp_path, rng):
    src = tmp_path / "clear"
    src.mkdir()
    for i in range(3):
        img = gaussian_filter(rng.random((48, 64, 3)), sigma=(4, 4, 0))
        img = (img - img.min()) / (img.max() - img.min())
        write_image(src / f"img_{i}.png", img)
    return src


def test_build_dataset_command(source_dir, tmp_path, capsys):
    out = tmp_path / "ds"
    assert main(["build-dataset", str(source_dir), str(out),
                 "--seed", "7", "--quiet"]) == 0
    assert (out / "manifest.json").exists()
    assert "3 scenes" in capsys.readouterr().out


def test_simulate_command(source_dir, tmp_path):
    out = tmp_path / "sim"
    assert main(["simulate", str(source_dir / "img_0.png"), str(out)]) == 0
    names = sorted(os.listdir(out))
    assert names == ["img_0_clear.png", "img_0_hazy.png",
                     "img_0_low.png", "img_0_low_hazy.png"]


def test_restore_command_single_image(source_dir, tmp_path):
    degraded_dir = tmp_path / "sim"
    main(["simulate", str(source_dir / "img_0.png"), str(degraded_dir)])
    out = tmp_path / "restored.png"
    assert main(["restore", str(degraded_dir / "img_0_low_hazy.png"),
                 str(out)]) == 0
    restored = read_image(out)
    degraded = read_image(degraded_dir / "img_0_low_hazy.png")
    assert restored.mean() > degraded.mean()


def test_restore_command_directory(source_dir, tmp_path):
    out = tmp_path / "restored"
    assert main(["restore", str(source_dir), str(out)]) == 0
    assert sorted(os.listdir(out)) == ["img_0.png", "img_1.png", "img_2.png"]


def test_evaluate_command(source_dir, tmp_path, capsys):
    noisy_dir = tmp_path / "noisy"
    noisy_dir.mkdir()
    rng = np.random.default_rng(0)
    for name in os.listdir(source_dir):
        img = read_image(source_dir / name)
        write_image(noisy_dir / name,
                    np.clip(img + rng.normal(0, 0.05, img.shape), 0, 1))

    assert main(["evaluate", str(noisy_dir), str(source_dir), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report["per_image"]) == {"img_0", "img_1", "img_2"}
    assert 0 < report["summary"]["ssim"] < 1


def test_evaluate_plain_output(source_dir, capsys):
    assert main(["evaluate", str(source_dir), str(source_dir)]) == 0
    assert "mean: PSNR" in capsys.readouterr().out


def test_missing_input_reports_error(tmp_path, capsys):
    assert main(["simulate", str(tmp_path / "nope.png"), str(tmp_path)]) == 1
    assert "error:" in capsys.readouterr().err
