"""Input parsing for the renderer.

The renderer talks to the simulator exclusively through its file formats:
the movement-log CSV (one row per vehicle per tick) and, optionally, a
scenario JSON whose planned trajectories are overlaid as dashed lines.
"""

import csv
import json
from dataclasses import dataclass

MOVEMENT_LOG_FIELDS = [
    "tick", "id", "type", "x_nm", "y_nm", "z_ft",
    "hdg_deg", "speed_kts", "phase", "delivered",
]

# Minimum horizontal separation radius drawn around each vehicle, by type.
SEPARATION_RADIUS_NM = {"piloted": 0.25, "rpas": 0.5, "uas": 0.5}


@dataclass(frozen=True)
class LogRow:
    tick: int
    id: int
    type: str
    x: float
    y: float
    z: float
    hdg: float
    speed: float
    phase: str
    delivered: bool


@dataclass(frozen=True)
class PlannedPath:
    vehicle_id: int
    type: str
    points: tuple[tuple[float, float], ...]


def read_log(path: str) -> list[LogRow]:
    """Parse a movement-log CSV, preserving row order."""
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != MOVEMENT_LOG_FIELDS:
            raise ValueError(f"{path}: unexpected movement log header {header}")
        rows = []
        for line_no, row in enumerate(reader, start=2):
            try:
                rows.append(
                    LogRow(
                        tick=int(row[0]), id=int(row[1]), type=row[2],
                        x=float(row[3]), y=float(row[4]), z=float(row[5]),
                        hdg=float(row[6]), speed=float(row[7]),
                        phase=row[8], delivered=row[9] == "true",
                    )
                )
            except (IndexError, ValueError) as exc:
                raise ValueError(f"{path}:{line_no}: bad movement log row {row}") from exc
    if not rows:
        raise ValueError(f"{path}: movement log holds no rows")
    for row in rows:
        if row.type not in SEPARATION_RADIUS_NM and row.phase != "external":
            raise ValueError(f"{path}: unknown vehicle type {row.type!r}")
    return rows


def read_planned_paths(path: str) -> list[PlannedPath]:
    """Planned trajectories from a scenario JSON: origin, waypoints, destination."""
    with open(path, "r", encoding="utf-8") as f:
        entries = json.load(f)
    if not isinstance(entries, list):
        raise ValueError(f"{path}: scenario file must be a JSON array")
    paths = []
    for entry in entries:
        points = [tuple(entry["initial_position"])]
        for wp in entry.get("objectiveList", []):
            points.append((wp[0], wp[1]))
        points.append(tuple(entry["final_position"]))
        deduped = [points[0]]
        for point in points[1:]:
            if point != deduped[-1]:
                deduped.append(point)
        paths.append(
            PlannedPath(
                vehicle_id=entry["eVTOLid"],
                type=entry["eVTOL_type"],
                points=tuple(deduped),
            )
        )
    return paths


def ticks_of(rows: list[LogRow]) -> list[int]:
    return sorted({r.tick for r in rows})


def rows_by_tick(rows: list[LogRow]) -> dict[int, list[LogRow]]:
    grouped: dict[int, list[LogRow]] = {}
    for row in rows:
        grouped.setdefault(row.tick, []).append(row)
    return grouped
