"""Frame planning and drawing.

Each frame is a top-down scatter plot of one tick: a marker per vehicle, its
minimum-separation circle at true radius in data coordinates (small circles
green, large circles orange), optional text labels with type, id, speed, and
altitude, and optionally the planned trajectories as red dashed lines.
"""

import os
from dataclasses import dataclass, field
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle

from .loader import SEPARATION_RADIUS_NM, LogRow, PlannedPath, rows_by_tick, ticks_of

VEHICLE_COLOR = "tab:blue"
CIRCLE_COLORS = {0.25: "tab:green", 0.5: "tab:orange"}
PLANNED_PATH_STYLE = {"color": "red", "linestyle": "--", "linewidth": 1.0}


@dataclass
class RenderConfig:
    """Plot geometry and output knobs for one rendering run."""

    plot_x: float = 30.0
    plot_y: float = 30.0
    output_path: str = "trajectories.mp4"
    frame_stride: int = 1
    show_labels: bool = True
    trajectory_overlay: Optional[str] = None
    fps: int = 10
    dpi: int = 100
    figsize: tuple[float, float] = field(default=(6.0, 6.0))

    def __post_init__(self) -> None:
        if self.plot_x <= 0 or self.plot_y <= 0:
            raise ValueError("plot extents must be positive")
        if self.frame_stride < 1:
            raise ValueError("frame stride must be at least 1")
        if self.fps < 1:
            raise ValueError("frame rate must be at least 1 fps")


def plan_frames(rows: list[LogRow], stride: int) -> list[int]:
    """Ticks that become frames: every stride-th tick present in the log."""
    if stride < 1:
        raise ValueError("frame stride must be at least 1")
    ticks = ticks_of(rows)
    return ticks[::stride]


def frame_count(rows: list[LogRow], stride: int) -> int:
    return len(plan_frames(rows, stride))


def draw_frame(
    ax: plt.Axes,
    tick_rows: list[LogRow],
    config: RenderConfig,
    planned: Optional[list[PlannedPath]] = None,
) -> None:
    """Draw one tick onto prepared axes."""
    ax.set_xlim(0.0, config.plot_x)
    ax.set_ylim(0.0, config.plot_y)
    ax.set_aspect("equal")
    ax.set_xlabel("x (NM)")
    ax.set_ylabel("y (NM)")
    if tick_rows:
        ax.set_title(f"tick {tick_rows[0].tick}")

    if planned:
        for path in planned:
            xs = [p[0] for p in path.points]
            ys = [p[1] for p in path.points]
            ax.plot(xs, ys, **PLANNED_PATH_STYLE)
            ax.plot(xs[1:], ys[1:], linestyle="none", marker="o",
                    markersize=3, color=VEHICLE_COLOR, fillstyle="none")

    xs = [r.x for r in tick_rows]
    ys = [r.y for r in tick_rows]
    ax.scatter(xs, ys, s=25, color=VEHICLE_COLOR, zorder=3)

    for row in tick_rows:
        radius = SEPARATION_RADIUS_NM.get(row.type)
        if radius is not None:
            ax.add_patch(
                Circle((row.x, row.y), radius, fill=False,
                       color=CIRCLE_COLORS[radius], linewidth=1.0, zorder=2)
            )
        if config.show_labels:
            ax.text(
                row.x + 0.01 * config.plot_x, row.y + 0.01 * config.plot_y,
                f"{row.type} {row.id}\n{row.speed:.0f}kts {row.z:.0f}ft",
                fontsize=7, zorder=4,
            )


def render_frames(
    rows: list[LogRow],
    config: RenderConfig,
    frames_dir: str,
    planned: Optional[list[PlannedPath]] = None,
) -> list[str]:
    """Write one PNG per planned frame and return the paths in tick order."""
    os.makedirs(frames_dir, exist_ok=True)
    grouped = rows_by_tick(rows)
    frame_ticks = plan_frames(rows, config.frame_stride)
    digits = max(5, len(str(frame_ticks[-1])))
    paths = []
    fig, ax = plt.subplots(figsize=config.figsize, dpi=config.dpi)
    try:
        for tick in frame_ticks:
            ax.clear()
            draw_frame(ax, grouped[tick], config, planned)
            path = os.path.join(frames_dir, f"frame_{tick:0{digits}d}.png")
            fig.savefig(path)
            paths.append(path)
    finally:
        plt.close(fig)
    return paths
