"""Deterministic tick-based airspace simulator for eVTOL fleets.

Vehicles fly pre-planned 4D trajectories (x NM, y NM, z ft, speed kts) over
an urban grid, one second per tick, under minimum horizontal and vertical
separation rules. A run reports whether the trajectory set is conflict-free
and how long each delivery takes.
"""

from .core import (
    DEFAULT_SPEED_KTS,
    FLIGHT_LEVELS_FT,
    SKYPORT_ALTITUDE_FT,
    VERTICAL_SEPARATION_FT,
    FlightPhase,
    Vehicle,
    VehicleType,
    Waypoint,
    WorldBounds,
    check_conflicts_for,
    closest_aircraft_distance,
    euclidean_distance,
    flight_levels_for_heading,
    in_conflict,
    separation_adjusted_distance,
    vehicles_in_region,
)
from .engine import (
    Airspace,
    ConflictEvent,
    MovementRecord,
    SimulationReport,
)
from .kinematics import (
    DEFAULT_LIMITS,
    KT_TO_NM_PER_S,
    KinematicLimits,
    adjust_altitude,
    adjust_heading,
    adjust_speed,
    calc_angle_to_position,
    distance_per_tick,
    follow,
    step_phase,
    waypoint_reached,
)
from .scenario import (
    ScenarioError,
    apply_shared_level,
    build_demo_airspace,
    load_scenario,
    make_vehicle,
    read_movement_log,
    save_scenario,
    write_movement_log,
    write_report,
)

__version__ = "0.1.0"

__all__ = [
    "Airspace",
    "ConflictEvent",
    "DEFAULT_LIMITS",
    "DEFAULT_SPEED_KTS",
    "FLIGHT_LEVELS_FT",
    "FlightPhase",
    "KT_TO_NM_PER_S",
    "KinematicLimits",
    "MovementRecord",
    "ScenarioError",
    "SimulationReport",
    "SKYPORT_ALTITUDE_FT",
    "Vehicle",
    "VehicleType",
    "VERTICAL_SEPARATION_FT",
    "Waypoint",
    "WorldBounds",
    "adjust_altitude",
    "adjust_heading",
    "adjust_speed",
    "apply_shared_level",
    "build_demo_airspace",
    "calc_angle_to_position",
    "check_conflicts_for",
    "closest_aircraft_distance",
    "distance_per_tick",
    "euclidean_distance",
    "flight_levels_for_heading",
    "follow",
    "in_conflict",
    "load_scenario",
    "make_vehicle",
    "read_movement_log",
    "save_scenario",
    "separation_adjusted_distance",
    "step_phase",
    "vehicles_in_region",
    "waypoint_reached",
    "write_movement_log",
    "write_report",
]
