"""Scenario persistence, movement-log CSV emission, and report emission.

Scenario files are JSON arrays of vehicle entries with the interchange field
names "eVTOLid", "initial_position", "final_position", "hdg", "eVTOL_type",
"objectiveList", and "timestamp". Waypoints are [x, y, z] or [x, y, z, s]
arrays (s defaults to 150 kts). Saving uses a canonical encoding so that a
save/load/save cycle is byte-identical.
"""

import csv
import io
import json
from typing import Iterable, Optional, TextIO, Union

from .core import (
    DEFAULT_SPEED_KTS,
    FlightPhase,
    Vehicle,
    VehicleType,
    Waypoint,
    WorldBounds,
)
from .engine import Airspace, MovementRecord, SimulationReport
from .kinematics import calc_angle_to_position

MOVEMENT_LOG_HEADER = "tick,id,type,x_nm,y_nm,z_ft,hdg_deg,speed_kts,phase,delivered"

_ENTRY_FIELDS = (
    "eVTOLid", "initial_position", "final_position", "hdg",
    "eVTOL_type", "objectiveList", "timestamp",
)


class ScenarioError(ValueError):
    """A scenario file failed validation; messages carry entry index and field."""


def make_vehicle(
    vehicle_id: int,
    kind: Union[VehicleType, str],
    origin: tuple[float, float],
    destination: tuple[float, float],
    *,
    hdg: Optional[float] = None,
    timestamp: int = 0,
) -> Vehicle:
    """Build a scheduled vehicle sitting on its origin skyport.

    The initial heading defaults to the direct heading toward the
    destination.
    """
    if isinstance(kind, str):
        try:
            kind = VehicleType(kind)
        except ValueError:
            raise ValueError(f"unknown vehicle type {kind!r}") from None
    if hdg is None:
        hdg = calc_angle_to_position(tuple(origin), tuple(destination))
    return Vehicle(
        id=vehicle_id, kind=kind, x=float(origin[0]), y=float(origin[1]),
        target_x=float(destination[0]), target_y=float(destination[1]),
        hdg=float(hdg), timestamp=timestamp,
    )


def apply_shared_level(airspace: Airspace, level: float) -> None:
    """Pin the whole airspace onto one flight level.

    Rewrites every waypoint altitude and forces every take-off fix to the
    level, so all flights climb and cruise at exactly the same altitude.
    """
    if level not in airspace.bounds.flight_levels:
        raise ValueError(
            f"shared level {level} is not one of the flight levels "
            f"{airspace.bounds.flight_levels}"
        )
    for v in airspace.vehicles.values():
        v.objective_list = [Waypoint(wp.x, wp.y, level, wp.s) for wp in v.objective_list]
        v.takeoff_fix_alt = level


def save_scenario(airspace: Airspace, path_or_file: Union[str, TextIO]) -> None:
    """Write the whole fleet to a scenario JSON file."""
    entries = []
    for vid in sorted(airspace.vehicles):
        v = airspace.vehicles[vid]
        entries.append(
            {
                "eVTOLid": v.id,
                "initial_position": [float(v.x), float(v.y)],
                "final_position": [float(v.target_x), float(v.target_y)],
                "hdg": float(v.hdg),
                "eVTOL_type": v.kind.value,
                "objectiveList": [
                    [float(wp.x), float(wp.y), float(wp.z), float(wp.s)]
                    for wp in v.objective_list
                ],
                "timestamp": v.timestamp,
            }
        )
    if isinstance(path_or_file, str):
        with open(path_or_file, "w", encoding="utf-8") as f:
            _dump_json(entries, f)
    else:
        _dump_json(entries, path_or_file)


def load_scenario(
    path_or_file: Union[str, TextIO],
    *,
    bounds: Optional[WorldBounds] = None,
    max_ticks: Optional[int] = None,
    shared_level: Optional[float] = None,
) -> Airspace:
    """Build an airspace from a scenario JSON file.

    Entries with an empty objectiveList receive the direct-flight default
    trajectory; every entry is validated and errors name the offending entry
    index and field.
    """
    if isinstance(path_or_file, str):
        with open(path_or_file, "r", encoding="utf-8") as f:
            raw = f.read()
    else:
        raw = path_or_file.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"malformed scenario JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ScenarioError("scenario file must be a JSON array of vehicle entries")

    airspace = Airspace(bounds=bounds or WorldBounds())
    if max_ticks is not None:
        airspace.max_ticks = max_ticks
    seen_ids: set[int] = set()
    for index, entry in enumerate(data):
        v = _parse_entry(index, entry, airspace.bounds)
        if v.id in seen_ids:
            raise ScenarioError(f"entry {index}: field 'eVTOLid': duplicate id {v.id}")
        seen_ids.add(v.id)
        try:
            airspace.add_vehicle(v)
        except ValueError as exc:
            raise ScenarioError(f"entry {index}: {exc}") from exc
    if shared_level is not None:
        apply_shared_level(airspace, shared_level)
    return airspace


def _parse_entry(index: int, entry: object, bounds: WorldBounds) -> Vehicle:
    def fail(name: str, why: str) -> ScenarioError:
        return ScenarioError(f"entry {index}: field {name!r}: {why}")

    if not isinstance(entry, dict):
        raise ScenarioError(f"entry {index}: expected an object, got {type(entry).__name__}")
    for name in _ENTRY_FIELDS:
        if name not in entry:
            raise fail(name, "missing")

    vid = entry["eVTOLid"]
    if not isinstance(vid, int) or isinstance(vid, bool):
        raise fail("eVTOLid", f"expected an integer, got {vid!r}")

    def parse_position(name: str) -> tuple[float, float]:
        value = entry[name]
        if (
            not isinstance(value, list)
            or len(value) != 2
            or not all(isinstance(c, (int, float)) for c in value)
        ):
            raise fail(name, f"expected [x, y] numbers, got {value!r}")
        x, y = float(value[0]), float(value[1])
        if not bounds.contains(x, y):
            raise fail(name, f"position ({x}, {y}) outside world bounds")
        return x, y

    initial = parse_position("initial_position")
    final = parse_position("final_position")

    hdg = entry["hdg"]
    if not isinstance(hdg, (int, float)) or not (0 <= float(hdg) < 360):
        raise fail("hdg", f"expected a heading in [0, 360), got {hdg!r}")

    type_name = entry["eVTOL_type"]
    try:
        kind = VehicleType(type_name)
    except ValueError:
        valid = ", ".join(t.value for t in VehicleType)
        raise fail("eVTOL_type", f"unknown type {type_name!r} (expected one of: {valid})") from None

    timestamp = entry["timestamp"]
    if not isinstance(timestamp, int) or isinstance(timestamp, bool) or timestamp < 0:
        raise fail("timestamp", f"expected a non-negative integer tick, got {timestamp!r}")

    raw_waypoints = entry["objectiveList"]
    if not isinstance(raw_waypoints, list):
        raise fail("objectiveList", f"expected a list of waypoints, got {raw_waypoints!r}")
    waypoints = []
    allowed_z = {bounds.skyport_altitude, *bounds.flight_levels}
    for wp_index, raw in enumerate(raw_waypoints):
        if (
            not isinstance(raw, list)
            or len(raw) not in (3, 4)
            or not all(isinstance(c, (int, float)) for c in raw)
        ):
            raise fail("objectiveList", f"waypoint {wp_index}: expected [x, y, z] or [x, y, z, s]")
        x, y, z = (float(c) for c in raw[:3])
        s = float(raw[3]) if len(raw) == 4 else DEFAULT_SPEED_KTS
        if not bounds.contains(x, y):
            raise fail("objectiveList", f"waypoint {wp_index}: ({x}, {y}) outside world bounds")
        if z not in allowed_z:
            raise fail(
                "objectiveList",
                f"waypoint {wp_index}: z={z} is neither the skyport altitude nor a flight level",
            )
        try:
            waypoints.append(Waypoint(x, y, z, s))
        except ValueError as exc:
            raise fail("objectiveList", f"waypoint {wp_index}: {exc}") from exc

    return Vehicle(
        id=vid, kind=kind, x=initial[0], y=initial[1],
        target_x=final[0], target_y=final[1], hdg=float(hdg),
        timestamp=timestamp, objective_list=waypoints,
    )


def _dump_json(entries: list, f: TextIO) -> None:
    json.dump(entries, f, indent=2)
    f.write("\n")


def write_movement_log(records: Iterable[MovementRecord], path_or_file: Union[str, TextIO]) -> None:
    """Write the movement log as CSV, rows sorted by (tick, id)."""
    if isinstance(path_or_file, str):
        with open(path_or_file, "w", encoding="utf-8", newline="") as f:
            _write_csv(records, f)
    else:
        _write_csv(records, path_or_file)


def _write_csv(records: Iterable[MovementRecord], f: TextIO) -> None:
    f.write(MOVEMENT_LOG_HEADER + "\n")
    for r in sorted(records, key=lambda r: (r.tick, r.id)):
        f.write(
            f"{r.tick},{r.id},{r.kind.value},{r.x:.6f},{r.y:.6f},{r.z:.6f},"
            f"{r.hdg:.6f},{r.speed:.6f},{r.phase},{'true' if r.delivered else 'false'}\n"
        )


def read_movement_log(path_or_file: Union[str, TextIO]) -> list[MovementRecord]:
    """Parse a movement-log CSV back into records."""
    if isinstance(path_or_file, str):
        with open(path_or_file, "r", encoding="utf-8", newline="") as f:
            return _read_csv(f)
    return _read_csv(path_or_file)


def _read_csv(f: TextIO) -> list[MovementRecord]:
    reader = csv.reader(f)
    header = next(reader, None)
    if header != MOVEMENT_LOG_HEADER.split(","):
        raise ValueError(f"unexpected movement log header: {header}")
    records = []
    for row in reader:
        records.append(
            MovementRecord(
                tick=int(row[0]), id=int(row[1]), kind=VehicleType(row[2]),
                x=float(row[3]), y=float(row[4]), z=float(row[5]),
                hdg=float(row[6]), speed=float(row[7]),
                phase=row[8], delivered=row[9] == "true",
            )
        )
    return records


def report_to_dict(report: SimulationReport) -> dict:
    """Flat JSON-ready view of a report."""
    return {
        "safe": report.safe,
        "total_ticks": report.total_ticks,
        "halt_reason": report.halt_reason,
        "delivery_ticks": {str(vid): tick for vid, tick in sorted(report.delivery_ticks.items())},
        "conflicts": [
            {"a": c.a, "b": c.b, "tick": c.tick}
            for c in sorted(report.conflicts, key=lambda c: (c.tick, c.a, c.b))
        ],
    }


def write_report(report: SimulationReport, path_or_file: Union[str, TextIO]) -> None:
    """Write a report as JSON."""
    if isinstance(path_or_file, str):
        with open(path_or_file, "w", encoding="utf-8") as f:
            _dump_json_report(report, f)
    else:
        _dump_json_report(report, path_or_file)


def _dump_json_report(report: SimulationReport, f: TextIO) -> None:
    json.dump(report_to_dict(report), f, indent=2)
    f.write("\n")


def report_to_json(report: SimulationReport) -> str:
    buffer = io.StringIO()
    _dump_json_report(report, buffer)
    return buffer.getvalue()


# Built-in demo fleets. Demo "1" flies five parallel direct lanes, demo "2"
# forces a crossing pair onto one shared flight level (which makes their
# direct flights conflict near the crossing point), and demo "2-fixed" gives
# the first vehicle a detour waypoint on a different level, which clears it.
DEMO_NAMES = ("1", "2", "2-fixed")


def parallel_lanes_fleet() -> list[Vehicle]:
    return [
        make_vehicle(1, "rpas", (10, 5), (20, 5)),
        make_vehicle(2, "uas", (10, 15), (20, 15)),
        make_vehicle(3, "piloted", (10, 25), (20, 25)),
        make_vehicle(4, "piloted", (20, 10), (10, 10)),
        make_vehicle(5, "piloted", (20, 20), (10, 20)),
    ]


def crossing_pair_fleet(detour: bool = False) -> list[Vehicle]:
    ev1 = make_vehicle(1, "rpas", (4, 4), (2, 2))
    ev2 = make_vehicle(2, "uas", (4, 2), (2, 4))
    if detour:
        ev1.objective_list = [Waypoint(4, 2, 1200)]
    return [ev1, ev2]


def build_demo_airspace(name: str, max_ticks: Optional[int] = None) -> Airspace:
    """Construct one of the built-in demo scenarios, ready to simulate."""
    if name not in DEMO_NAMES:
        raise ValueError(f"unknown demo {name!r}, expected one of {DEMO_NAMES}")
    airspace = Airspace()
    if max_ticks is not None:
        airspace.max_ticks = max_ticks
    fleet = parallel_lanes_fleet() if name == "1" else crossing_pair_fleet(detour=name == "2-fixed")
    for v in fleet:
        airspace.add_vehicle(v)
    if name == "2":
        apply_shared_level(airspace, 1000.0)
    return airspace
