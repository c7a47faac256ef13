"""Per-tick motion integration for a single vehicle.

One tick is one second. Each tick a vehicle may turn, change speed, change
altitude, and translate along its heading; the flight phase machine strings
those primitives into take-off climb, cruise waypoint following, and the
spiral landing.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .core import (
    SPEED_MAX_KTS,
    SPEED_MIN_KTS,
    FlightPhase,
    Point,
    Vehicle,
    Waypoint,
    WorldBounds,
    euclidean_distance,
    flight_levels_for_heading,
)

# 1 kt is 1 NM per hour; the per-second constant is kept at this truncated
# value so that 150 kts moves exactly 0.0417 NM per tick.
KT_TO_NM_PER_S = 0.000278

# Arrival tolerance on the vertical axis: one tick of climb or descent at the
# default 500 ft/min rate, padded in the last digit to absorb rounding.
VERTICAL_ARRIVAL_TOLERANCE_FT = 8.3334


@dataclass(frozen=True)
class KinematicLimits:
    """Performance envelope applied to every per-tick state change."""

    max_turn_rate: float = 7.2  # deg/s
    max_climb: float = 500.0  # ft/min
    max_descent: float = 500.0  # ft/min
    accel: float = 1.0  # kt/s
    decel: float = 2.0  # kt/s
    kt_to_nm_per_s: float = KT_TO_NM_PER_S
    # Landing circle radius override, NM; None uses the minimum-turn radius
    # at the vehicle's current speed.
    spiral_radius: Optional[float] = None

    def __post_init__(self) -> None:
        positive = (
            self.max_turn_rate, self.max_climb, self.max_descent,
            self.accel, self.decel, self.kt_to_nm_per_s,
        )
        if any(limit <= 0 for limit in positive):
            raise ValueError("kinematic limits must be strictly positive")


DEFAULT_LIMITS = KinematicLimits()


def distance_per_tick(speed: float, limits: KinematicLimits = DEFAULT_LIMITS) -> float:
    """Horizontal distance flown in one tick at the given speed, in NM."""
    if not (SPEED_MIN_KTS <= speed <= SPEED_MAX_KTS):
        raise ValueError(
            f"speed {speed} kts outside the [{SPEED_MIN_KTS}, {SPEED_MAX_KTS}] envelope"
        )
    return speed * limits.kt_to_nm_per_s


def min_turn_radius(speed: float, limits: KinematicLimits = DEFAULT_LIMITS) -> float:
    """Turn radius at the given speed with the turn rate saturated, in NM."""
    return distance_per_tick(speed, limits) / math.radians(limits.max_turn_rate)


def apply_movement_based_on_heading(v: Vehicle, distance: float) -> None:
    """Translate the vehicle `distance` NM along its current heading."""
    if distance < 0:
        raise ValueError("movement distance must be non-negative")
    v.x += math.cos(math.radians(v.hdg)) * distance
    v.y += math.sin(math.radians(v.hdg)) * distance


def calc_angle_to_position(frm: Point, to: Point) -> float:
    """Heading of the vector from `frm` to `to`, degrees in [0, 360)."""
    if frm == to:
        raise ValueError(f"heading from {frm} to itself is undefined")
    return math.degrees(math.atan2(to[1] - frm[1], to[0] - frm[0])) % 360.0


def shortest_arc(current: float, desired: float) -> float:
    """Signed shortest angular difference desired - current, in (-180, 180]."""
    return (desired - current + 180.0) % 360.0 - 180.0


def adjust_heading(current: float, desired: float, max_turn: float = DEFAULT_LIMITS.max_turn_rate) -> float:
    """One tick of turning toward `desired` along the shorter arc.

    Snaps exactly onto the desired heading once within one tick's turn, so a
    turn never overshoots or oscillates across the target.
    """
    diff = shortest_arc(current, desired)
    if abs(diff) <= max_turn:
        return desired % 360.0
    return (current + math.copysign(max_turn, diff)) % 360.0


def adjust_speed(current: float, commanded: float, limits: KinematicLimits = DEFAULT_LIMITS) -> float:
    """One tick of acceleration or deceleration toward the commanded speed."""
    if commanded > current:
        return min(current + limits.accel, commanded)
    return max(current - limits.decel, commanded)


def adjust_altitude(current: float, target: float, limits: KinematicLimits = DEFAULT_LIMITS) -> float:
    """One tick of climb or descent toward the target altitude.

    The vertical rate is reached instantaneously; the change per tick is the
    per-minute rate over 60, with an exact snap once within one tick.
    """
    if target > current:
        return min(current + limits.max_climb / 60.0, target)
    return max(current - limits.max_descent / 60.0, target)


def waypoint_reached(v: Vehicle, wp: Waypoint, limits: KinematicLimits = DEFAULT_LIMITS) -> bool:
    """Whether the vehicle is within one tick of the waypoint on every axis."""
    horizontal = euclidean_distance(v.position, (wp.x, wp.y))
    return (
        horizontal <= distance_per_tick(v.speed, limits)
        and abs(v.z - wp.z) <= VERTICAL_ARRIVAL_TOLERANCE_FT
    )


def follow(v: Vehicle, limits: KinematicLimits = DEFAULT_LIMITS) -> bool:
    """One tick of flight toward the current objective waypoint.

    Turns, retrims speed and altitude, translates, and pops the waypoint once
    intercepted (snapping the position onto it exactly, which keeps logs and
    durations deterministic). Returns True when the waypoint was popped.
    """
    if not v.objective_list:
        raise RuntimeError(f"vehicle {v.id} is cruising with an empty objective list")
    wp = v.objective_list[0]
    if v.position != (wp.x, wp.y):
        desired = calc_angle_to_position(v.position, (wp.x, wp.y))
        v.hdg = adjust_heading(v.hdg, desired, limits.max_turn_rate)
    v.speed = adjust_speed(v.speed, wp.s, limits)
    v.z = adjust_altitude(v.z, wp.z, limits)
    apply_movement_based_on_heading(v, distance_per_tick(v.speed, limits))
    if waypoint_reached(v, wp, limits):
        v.x, v.y, v.z = wp.x, wp.y, wp.z
        v.objective_list.pop(0)
        return True
    return False


def takeoff_fix_altitude(v: Vehicle, world: WorldBounds) -> float:
    """Altitude of the take-off fix above the origin skyport.

    The fix sits at the lowest flight level permitted for the heading of the
    first cruise leg, unless the vehicle carries an explicit override.
    """
    if v.takeoff_fix_alt is not None:
        return v.takeoff_fix_alt
    if not v.objective_list:
        raise RuntimeError(f"vehicle {v.id} has no trajectory to take off into")
    wp = v.objective_list[0]
    if v.position == (wp.x, wp.y):
        heading = v.hdg
    else:
        heading = calc_angle_to_position(v.position, (wp.x, wp.y))
    return flight_levels_for_heading(heading, world.flight_levels)[0]


def step_phase(v: Vehicle, world: WorldBounds, limits: KinematicLimits = DEFAULT_LIMITS) -> None:
    """Advance one tick of the flight phase machine.

    Take-off climbs vertically at the origin up to the take-off fix, cruise
    follows the objective list, and once the final waypoint (the landing fix
    above the destination) is intercepted the vehicle circles down around the
    destination until it reaches the skyport and is delivered.
    """
    if v.phase is FlightPhase.SCHEDULED:
        raise RuntimeError(f"vehicle {v.id} has not entered the simulation yet")

    if v.phase is FlightPhase.TAKEOFF_CLIMB:
        fix = takeoff_fix_altitude(v, world)
        v.z = adjust_altitude(v.z, fix, limits)
        if v.z == fix:
            v.phase = FlightPhase.CRUISE
    elif v.phase is FlightPhase.CRUISE:
        if follow(v, limits) and not v.objective_list:
            v.phase = FlightPhase.LANDING_SPIRAL
            v.spiral_angle = (v.hdg - 90.0) % 360.0
    elif v.phase is FlightPhase.LANDING_SPIRAL:
        radius = limits.spiral_radius
        if radius is None:
            radius = min_turn_radius(v.speed, limits)
        v.spiral_angle = (v.spiral_angle + limits.max_turn_rate) % 360.0
        v.hdg = (v.spiral_angle + 90.0) % 360.0
        v.z = adjust_altitude(v.z, world.skyport_altitude, limits)
        if v.z <= world.skyport_altitude:
            v.x, v.y, v.z = v.target_x, v.target_y, world.skyport_altitude
            v.phase = FlightPhase.DELIVERED
            v.spiral_angle = None
        else:
            angle = math.radians(v.spiral_angle)
            v.x = v.target_x + radius * math.cos(angle)
            v.y = v.target_y + radius * math.sin(angle)
    # FlightPhase.DELIVERED is absorbing: a delivered vehicle never moves.
