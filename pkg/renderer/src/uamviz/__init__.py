"""Post-hoc visualization for simulator movement logs.

Consumes the movement-log CSV (and optionally a scenario JSON for planned
path overlays) and produces per-tick scatter-plot frames plus an assembled
video. The renderer is read-only over its inputs.
"""

from .frames import RenderConfig, draw_frame, frame_count, plan_frames, render_frames
from .loader import (
    SEPARATION_RADIUS_NM,
    LogRow,
    PlannedPath,
    read_log,
    read_planned_paths,
    rows_by_tick,
    ticks_of,
)
from .video import assemble_video, probe_video

__version__ = "0.1.0"

__all__ = [
    "LogRow",
    "PlannedPath",
    "RenderConfig",
    "SEPARATION_RADIUS_NM",
    "assemble_video",
    "draw_frame",
    "frame_count",
    "plan_frames",
    "probe_video",
    "read_log",
    "read_planned_paths",
    "render_frames",
    "rows_by_tick",
    "ticks_of",
]
