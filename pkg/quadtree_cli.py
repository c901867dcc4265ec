#!/usr/bin/env python3
"""
Command-line front end: generate point sets, build trees, check, benchmark and render

Exit codes: 0 success, 1 a check or invariant failed, 2 bad usage or input.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger

# Add current directory to Python path
sys.path.append(str(Path(__file__).parent))

from config import config  # noqa: E402
from geometry import GeometryConfig, InvariantViolation, QuadtreeError, quantize_all  # noqa: E402
from quadtree import BuildConfig, CompressedQuadtree, build, read_tree_file, write_tree_file  # noqa: E402
from quadtree.serialization import HEADER_PREFIX  # noqa: E402
from experiments import ExperimentManager, run_checks  # noqa: E402
from utils import performance_monitor, setup_logger  # noqa: E402
from utils.point_io import generate_points, points_header, read_points, write_points  # noqa: E402
from utils.svg_renderer import write_svg  # noqa: E402

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_BENCH_SIZES = [2 ** 10, 2 ** 12, 2 ** 14, 2 ** 16]


def _geometry(args: argparse.Namespace, d: int) -> GeometryConfig:
    return GeometryConfig(d=d, L=args.resolution, duplicate_policy=args.duplicates)


def _load_points(args: argparse.Namespace):
    """Read and quantize a PointFile; an empty file falls back to --dim"""
    raw = read_points(args.in_path)
    geometry = _geometry(args, len(raw[0]) if raw else args.dim)
    return quantize_all(raw, geometry), geometry


def cmd_gen(args: argparse.Namespace) -> int:
    points = generate_points(args.n, args.dim, args.dist, args.seed, args.clusters)
    write_points(args.out, points, points_header(args.n, args.dim, args.dist, args.seed))
    return EXIT_OK


def cmd_build(args: argparse.Namespace) -> int:
    points, geometry = _load_points(args)
    T, stats = build(points, BuildConfig(seed=args.seed, geometry=geometry))
    write_tree_file(args.out, T)
    summary = stats.summary()
    print(" ".join(f"{key}={value}" for key, value in summary.items()))
    logger.info(f"Wrote serialization of {summary['nodes']} node(s) to {args.out}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    points, geometry = _load_points(args)
    report = run_checks(points, geometry, seed=args.seed, trials=args.trials)
    for line in report.lines():
        print(line)
    performance_monitor.log_summary()
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
    if args.workers is not None:
        config.MAX_WORKERS = args.workers
    manager = ExperimentManager(
        args.ns, args.seed,
        geometry=GeometryConfig(d=args.dim, L=args.resolution),
        trials=args.trials,
        lemma2_trials=args.lemma2_trials,
        lemma2_points=args.lemma2_points,
        profile_n=args.profile_n,
        profile_trials=args.profile_trials,
    )
    result = manager.run(args.out)
    for verdict in result.verdicts:
        print(verdict.line())
    performance_monitor.log_summary()
    return EXIT_OK


def _load_tree(args: argparse.Namespace) -> CompressedQuadtree:
    path = Path(args.in_path)
    with path.open(encoding="utf-8") as f:
        first = f.readline()
    if first.startswith(HEADER_PREFIX):
        return read_tree_file(path)
    points, geometry = _load_points(args)
    T, _ = build(points, BuildConfig(seed=args.seed, geometry=geometry, collect_stats=False))
    return T


def cmd_render(args: argparse.Namespace) -> int:
    write_svg(args.out, _load_tree(args))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Compressed quadtree construction toolkit")
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=config.SEED)
        p.add_argument("--dim", type=int, default=config.DIMENSION)
        p.add_argument("--resolution", type=int, default=config.RESOLUTION)
        p.add_argument("--duplicates", choices=["reject", "deduplicate"], default=config.DUPLICATE_POLICY)

    gen = sub.add_parser("gen", help="write a random PointFile")
    common(gen)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--dist", choices=["uniform", "clustered"], default="uniform")
    gen.add_argument("--clusters", type=int, default=2)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    build_cmd = sub.add_parser("build", help="build a tree and write its serialization")
    common(build_cmd)
    build_cmd.add_argument("in_path")
    build_cmd.add_argument("--out", required=True)
    build_cmd.set_defaults(func=cmd_build)

    check = sub.add_parser("check", help="run the consistency suites on a PointFile")
    common(check)
    check.add_argument("in_path")
    check.add_argument("--trials", type=int, default=3, help="number of build seeds compared with the oracle")
    check.set_defaults(func=cmd_check)

    bench = sub.add_parser("bench", help="write scaling.csv, profile.csv and lemma2.csv")
    common(bench)
    bench.add_argument("--ns", type=int, nargs="+", default=DEFAULT_BENCH_SIZES)
    bench.add_argument("--trials", type=int, default=config.SCALING_TRIALS)
    bench.add_argument("--lemma2-trials", type=int, default=config.LEMMA2_TRIALS)
    bench.add_argument("--lemma2-points", type=int, default=config.LEMMA2_POINTS)
    bench.add_argument("--profile-n", type=int, default=config.PROFILE_N)
    bench.add_argument("--profile-trials", type=int, default=config.PROFILE_TRIALS)
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("--out", required=True, help="output directory")
    bench.set_defaults(func=cmd_bench)

    render = sub.add_parser("render", help="render a tree file or PointFile to SVG (d = 2)")
    common(render)
    render.add_argument("in_path")
    render.add_argument("--out", required=True)
    render.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    setup_logger(args.log_level)
    try:
        config.validate()
        return args.func(args)
    except InvariantViolation as e:
        logger.error(f"Invariant violated: {e}")
        return EXIT_FAILED
    except (QuadtreeError, ValueError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"{args.command}: cannot access {e.filename or 'path'}: {e.strerror or e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
