"""Renderer command line: turn a movement-log CSV into frames and a video."""

import argparse
import sys
import tempfile
from typing import Optional

from .frames import RenderConfig, render_frames
from .loader import read_log, read_planned_paths
from .video import assemble_video


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uamviz", description="Movement-log renderer")
    sub = parser.add_subparsers(dest="command", required=True)

    render = sub.add_parser("render", help="render a movement log to a video")
    render.add_argument("--log", required=True, help="movement-log CSV")
    render.add_argument("--scenario", help="scenario JSON overlaid as planned paths")
    render.add_argument("--out", required=True, help="output video path (.mp4)")
    render.add_argument("--stride", type=int, default=1, help="ticks per frame")
    render.add_argument("--no-labels", action="store_true", help="hide text labels")
    render.add_argument("--fps", type=int, default=10)
    render.add_argument("--plot-x", type=float, default=30.0, help="x extent in NM")
    render.add_argument("--plot-y", type=float, default=30.0, help="y extent in NM")
    render.add_argument("--frames-dir", help="keep frame PNGs here instead of a temp dir")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RenderConfig(
            plot_x=args.plot_x, plot_y=args.plot_y, output_path=args.out,
            frame_stride=args.stride, show_labels=not args.no_labels,
            trajectory_overlay=args.scenario, fps=args.fps,
        )
        rows = read_log(args.log)
        planned = read_planned_paths(args.scenario) if args.scenario else None
        if args.frames_dir:
            frames = render_frames(rows, config, args.frames_dir, planned)
            assemble_video(frames, config)
        else:
            with tempfile.TemporaryDirectory(prefix="uamviz-") as frames_dir:
                frames = render_frames(rows, config, frames_dir, planned)
                assemble_video(frames, config)
        print(f"{args.out}: {len(frames)} frames at {config.fps} fps", file=sys.stderr)
        return 0
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"uamviz: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
