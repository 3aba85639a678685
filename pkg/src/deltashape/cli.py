"""
Command line interface.

    delta-shape run <image> [options]      build meshes, spokes and overlay
    delta-shape verify <image> | --random N | --grid
    delta-shape oracle [--trials N]        Delaunay vs brute-force enumerator

Exit codes: 0 success, 1 a verification found failures, 2 unreadable input,
3 too few keypoints (or collinear ones), 4 invalid configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np
from PIL import UnidentifiedImageError

from .errors import ConfigurationError, DegeneracyError, InsufficientKeypointsError
from .imageio import load_grayscale
from .oracle import compare_with_oracle
from .pipeline import HIGHLIGHTS, MODES, PipelineConfig, run_pipeline
from .proximity import TriangleFeatures
from .synthetic import grid_nerve_complex
from .theorems import theorem_suite
from .triangulate import delaunay, detect_keypoints

EXIT_OK, EXIT_FAILED, EXIT_IO, EXIT_KEYPOINTS, EXIT_CONFIG = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="delta-shape", description="Curvilinear triangulation and spoke analysis of image shapes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="run the full pipeline on an image")
    run.add_argument("image")
    run.add_argument("--max-keypoints", type=int, default=100)
    run.add_argument("--nms-radius", type=float, default=8.0)
    run.add_argument("--degree", type=int, default=None, help="spline degree (default: 2 boundary, 3 shared)")
    run.add_argument("--weight", type=float, default=1.0, help="weight of interior control points")
    run.add_argument("--samples", type=int, default=32, help="samples per edge in the SVG")
    run.add_argument("--mode", choices=MODES, default="both")
    run.add_argument("--highlight", choices=HIGHLIGHTS, default="spokes")
    run.add_argument("--out", default="out", help="output directory")

    verify = sub.add_parser("verify", help="check the nearness theorems")
    src = verify.add_mutually_exclusive_group(required=True)
    src.add_argument("image", nargs="?")
    src.add_argument("--random", type=int, metavar="N", help="use N random Delaunay meshes")
    src.add_argument("--grid", action="store_true", help="use the 3x3 nerve fixture")
    verify.add_argument("--vertices", type=int, default=20)
    verify.add_argument("--trials", type=int, default=10)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-keypoints", type=int, default=100)
    verify.add_argument("--nms-radius", type=float, default=8.0)

    oracle = sub.add_parser("oracle", help="cross-check Delaunay against brute force")
    oracle.add_argument("--trials", type=int, default=200)
    oracle.add_argument("--max-points", type=int, default=12)
    oracle.add_argument("--seed", type=int, default=0)
    return parser


def _merge(totals: dict, reports) -> None:
    for r in reports:
        t = totals.setdefault(r.theorem, {"theorem": r.theorem, "trials": 0, "checks": 0, "vacuous": 0, "failures": []})
        t["trials"] += r.trials
        t["checks"] += r.checks
        t["vacuous"] += r.vacuous
        t["failures"].extend(r.failures)


def _cmd_run(args) -> int:
    config = PipelineConfig(
        max_keypoints=args.max_keypoints,
        nms_radius=args.nms_radius,
        spline_degree=args.degree,
        interior_weight=args.weight,
        samples_per_edge=args.samples,
        mode=args.mode,
        highlight=args.highlight,
    ).validate()
    result = run_pipeline(Path(args.image), config, args.out)
    print(
        json.dumps(
            {
                "keypoints": len(result.keypoints),
                "triangles": len(result.mesh.triangles),
                "nucleus": result.nucleus,
                "depth": result.decomposition.depth,
                "out": str(Path(args.out)),
            },
            sort_keys=True,
        )
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.trials < 1 or (args.random is not None and args.random < 1) or args.vertices < 3:
        raise ConfigurationError("trials, --random and --vertices must be positive (vertices >= 3)")
    totals: dict = {}
    if args.grid:
        _merge(totals, theorem_suite(grid_nerve_complex(), args.trials, args.seed))
    elif args.random is not None:
        rng = np.random.default_rng(args.seed)
        for i in range(args.random):
            mesh = delaunay(rng.uniform(0, 100, size=(args.vertices, 2)))
            _merge(totals, theorem_suite(mesh.to_complex(), args.trials, args.seed + i))
    else:
        img = load_grayscale(args.image)
        mesh = delaunay(detect_keypoints(img, args.max_keypoints, args.nms_radius))
        phi = TriangleFeatures(img, mesh.points)
        _merge(totals, theorem_suite(mesh.to_complex(), args.trials, args.seed, phi))
    print(json.dumps(list(totals.values()), indent=2, sort_keys=True))
    return EXIT_FAILED if any(t["failures"] for t in totals.values()) else EXIT_OK


def _cmd_oracle(args) -> int:
    if args.trials < 1 or args.max_points < 3:
        raise ConfigurationError("--trials must be positive and --max-points at least 3")
    rng = np.random.default_rng(args.seed)
    mismatches = []
    done = 0
    while done < args.trials:
        n = int(rng.integers(3, args.max_points + 1))
        if done % 2:
            pts = rng.integers(0, 4, size=(n, 2)).astype(float)
        else:
            pts = rng.uniform(0, 100, size=(n, 2))
        pts = np.unique(pts, axis=0)
        if len(pts) < 3 or np.linalg.matrix_rank(pts - pts[0]) < 2:
            continue
        done += 1
        ok, missing, extra = compare_with_oracle(pts)
        if not ok:
            mismatches.append({"points": pts.tolist(), "missing": sorted(missing), "extra": sorted(extra)})
    print(json.dumps({"trials": done, "mismatches": mismatches}, indent=2))
    return EXIT_FAILED if mismatches else EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": _cmd_run, "verify": _cmd_verify, "oracle": _cmd_oracle}
    try:
        return handlers[args.command](args)
    except (OSError, UnidentifiedImageError) as exc:
        print(f"delta-shape: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InsufficientKeypointsError, DegeneracyError) as exc:
        print(f"delta-shape: {exc}", file=sys.stderr)
        return EXIT_KEYPOINTS
    except ConfigurationError as exc:
        print(f"delta-shape: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
