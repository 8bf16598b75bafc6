"""Command-line interface.

Subcommands:
    build-dataset  simulate the paired four-group dataset from clear images
    simulate       degrade a single image (writes all four variants)
    restore        two-path classical restoration of low-light hazy images
    evaluate       PSNR/SSIM of a result directory against ground truth
"""

import argparse
import json
import os
import sys

import numpy as np

from .dataset import DEFAULT_TRAIN_FRACTION, build_dataset
from .evaluate import evaluate_directories
from .io import list_images, read_image, write_image
from .pipeline import restore
from .simulate import sample_simulation_params, simulate_scene


def _cmd_build_dataset(args):
    def progress(i, total, name):
        print(f"[{i + 1}/{total}] {name}")

    manifest = build_dataset(
        args.input, args.output,
        seed=args.seed,
        train_fraction=args.train_fraction,
        resize=(args.resize, args.resize) if args.resize else None,
        progress=progress if not args.quiet else None,
    )
    counts = manifest["counts"]
    print(f"done: {counts['total']} scenes "
          f"({counts['train']} train / {counts['test']} test) -> {args.output}")


def _cmd_simulate(args):
    clear = read_image(args.input)
    rng = np.random.default_rng(args.seed)
    scene = simulate_scene(clear, sample_simulation_params(rng), rng)

    os.makedirs(args.output, exist_ok=True)
    stem = os.path.splitext(os.path.basename(args.input))[0]
    for group in ("clear", "low", "hazy", "low_hazy"):
        out = os.path.join(args.output, f"{stem}_{group}.png")
        write_image(out, getattr(scene, group))
        print(out)


def _cmd_restore(args):
    if os.path.isdir(args.input):
        paths = list_images(args.input)
        os.makedirs(args.output, exist_ok=True)
        outputs = [os.path.join(args.output, os.path.basename(p)) for p in paths]
    else:
        paths, outputs = [args.input], [args.output]

    for src, dst in zip(paths, outputs):
        write_image(dst, restore(read_image(src), denoise=args.denoise))
        print(dst)


def _cmd_evaluate(args):
    per_image, summary = evaluate_directories(args.test, args.reference)
    if args.json:
        print(json.dumps({"per_image": per_image, "summary": summary}, indent=2))
    else:
        for name, scores in sorted(per_image.items()):
            print(f"{name}: PSNR {scores['psnr']:.2f} dB  SSIM {scores['ssim']:.4f}")
        print(f"mean: PSNR {summary['psnr']:.2f} dB  SSIM {summary['ssim']:.4f}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lowhaze",
        description="Simulation and evaluation toolkit for low-light hazy scenes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-dataset", help="build the paired dataset")
    p.add_argument("input", help="directory of clear source images")
    p.add_argument("output", help="dataset output directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--train-fraction", type=float, default=DEFAULT_TRAIN_FRACTION)
    p.add_argument("--resize", type=int, default=None, metavar="N",
                   help="resize sources to NxN before simulation")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=_cmd_build_dataset)

    p = sub.add_parser("simulate", help="degrade one image")
    p.add_argument("input", help="clear source image")
    p.add_argument("output", help="output directory")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("restore", help="restore low-light hazy images")
    p.add_argument("input", help="degraded image or directory")
    p.add_argument("output", help="output image or directory")
    p.add_argument("--denoise", action="store_true")
    p.set_defaults(func=_cmd_restore)

    p = sub.add_parser("evaluate", help="score results against ground truth")
    p.add_argument("test", help="directory of restored images")
    p.add_argument("reference", help="directory of ground-truth images")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_evaluate)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (IOError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
