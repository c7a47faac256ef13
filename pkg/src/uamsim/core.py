"""Domain types, unit conventions, and the separation safety kernel.

Units are fixed package-wide: horizontal coordinates in nautical miles (NM),
altitudes in feet AGL, speeds in knots, headings in degrees. Headings use the
mathematical convention (0 deg points along +x, angles grow counter-clockwise)
and are normalized to [0, 360).
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

Point = tuple[float, float]

# Default operating area: a 30 NM x 30 NM urban grid.
WORLD_X_MIN = 0.0
WORLD_X_MAX = 30.0
WORLD_Y_MIN = 0.0
WORLD_Y_MAX = 30.0

SKYPORT_ALTITUDE_FT = 100.0
FLIGHT_LEVELS_FT = (1000.0, 1200.0, 1400.0, 1600.0)

VERTICAL_SEPARATION_FT = 200.0

SPEED_MIN_KTS = 130.0
SPEED_MAX_KTS = 170.0
DEFAULT_SPEED_KTS = 150.0


class VehicleType(Enum):
    """Piloting classification of a vehicle.

    The value doubles as the wire name used in scenario files.
    """

    PILOTED = "piloted"
    REMOTELY_PILOTED = "rpas"
    SELF_PILOTED = "uas"

    @property
    def horizontal_separation_nm(self) -> float:
        """Minimum horizontal separation required around this vehicle type."""
        return 0.25 if self is VehicleType.PILOTED else 0.5


class FlightPhase(Enum):
    """Lifecycle of one flight, from activation to delivery.

    Transitions only move forward: scheduled -> takeoff_climb -> cruise ->
    landing_spiral -> delivered. Degenerate zero-length segments pass through
    a phase in a single tick.
    """

    SCHEDULED = "scheduled"
    TAKEOFF_CLIMB = "takeoff_climb"
    CRUISE = "cruise"
    LANDING_SPIRAL = "landing_spiral"
    DELIVERED = "delivered"


@dataclass(frozen=True)
class Waypoint:
    """One 4D trajectory element: position, altitude, and interception speed."""

    x: float
    y: float
    z: float
    s: float = DEFAULT_SPEED_KTS

    def __post_init__(self) -> None:
        if not (WORLD_X_MIN <= self.x <= WORLD_X_MAX):
            raise ValueError(f"waypoint x={self.x} outside [{WORLD_X_MIN}, {WORLD_X_MAX}] NM")
        if not (WORLD_Y_MIN <= self.y <= WORLD_Y_MAX):
            raise ValueError(f"waypoint y={self.y} outside [{WORLD_Y_MIN}, {WORLD_Y_MAX}] NM")
        if not (SKYPORT_ALTITUDE_FT <= self.z <= FLIGHT_LEVELS_FT[-1]):
            raise ValueError(
                f"waypoint z={self.z} outside [{SKYPORT_ALTITUDE_FT}, {FLIGHT_LEVELS_FT[-1]}] ft"
            )
        if not (SPEED_MIN_KTS <= self.s <= SPEED_MAX_KTS):
            raise ValueError(f"waypoint s={self.s} outside [{SPEED_MIN_KTS}, {SPEED_MAX_KTS}] kts")


@dataclass(frozen=True)
class WorldBounds:
    """Horizontal extent of the operating area plus its vertical structure."""

    x_min: float = WORLD_X_MIN
    x_max: float = WORLD_X_MAX
    y_min: float = WORLD_Y_MIN
    y_max: float = WORLD_Y_MAX
    flight_levels: tuple[float, ...] = FLIGHT_LEVELS_FT
    skyport_altitude: float = SKYPORT_ALTITUDE_FT

    def __post_init__(self) -> None:
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError("world bounds must satisfy x_min < x_max and y_min < y_max")
        levels = self.flight_levels
        if list(levels) != sorted(levels):
            raise ValueError("flight levels must be sorted ascending")
        if any(b - a < VERTICAL_SEPARATION_FT for a, b in zip(levels, levels[1:])):
            raise ValueError(
                f"adjacent flight levels must be at least {VERTICAL_SEPARATION_FT} ft apart"
            )

    def contains(self, x: float, y: float) -> bool:
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max

    @property
    def diagonal(self) -> float:
        return math.hypot(self.x_max - self.x_min, self.y_max - self.y_min)


@dataclass
class Vehicle:
    """Full kinematic and separation state of one eVTOL vehicle."""

    id: int
    kind: VehicleType
    x: float
    y: float
    target_x: float
    target_y: float
    z: float = SKYPORT_ALTITUDE_FT
    target_z: float = SKYPORT_ALTITUDE_FT
    hdg: float = 0.0
    speed: float = DEFAULT_SPEED_KTS
    rate_of_climb: float = 500.0
    rate_of_descent: float = 500.0
    vsep: float = VERTICAL_SEPARATION_FT
    timestamp: int = 0
    objective_list: list[Waypoint] = field(default_factory=list)
    conflict_list: set[int] = field(default_factory=set)
    phase: FlightPhase = FlightPhase.SCHEDULED
    # Angular position on the landing circle, degrees; set while spiralling.
    spiral_angle: Optional[float] = None
    # Forced take-off fix altitude; None applies the heading rule.
    takeoff_fix_alt: Optional[float] = None

    @property
    def hsep(self) -> float:
        """Minimum horizontal separation, a pure function of the vehicle type."""
        return self.kind.horizontal_separation_nm

    @property
    def delivered(self) -> bool:
        return self.phase is FlightPhase.DELIVERED

    @property
    def active(self) -> bool:
        """Entered the airspace and not yet delivered."""
        return self.phase not in (FlightPhase.SCHEDULED, FlightPhase.DELIVERED)

    @property
    def position(self) -> Point:
        return (self.x, self.y)


def euclidean_distance(a: Point, b: Point) -> float:
    """Horizontal straight-line distance between two points, in NM."""
    return math.sqrt((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2)


def separation_adjusted_distance(a: Vehicle, b: Vehicle) -> float:
    """Horizontal distance minus the pair's governing separation requirement.

    Negative values mean the pair sits inside the joint separation disc. The
    governing requirement is the larger of the two vehicles' minima.
    """
    if a.id == b.id:
        raise ValueError(f"separation distance of vehicle {a.id} against itself is undefined")
    return euclidean_distance(a.position, b.position) - max(a.hsep, b.hsep)


def in_conflict(a: Vehicle, b: Vehicle) -> bool:
    """True when both the horizontal and the vertical separation are violated.

    Inequalities are strict: a pair exactly at the required separation is
    legal, and a vertical gap of at least the required separation grants
    relief regardless of horizontal proximity.
    """
    if a.id == b.id:
        raise ValueError(f"conflict check of vehicle {a.id} against itself is undefined")
    if euclidean_distance(a.position, b.position) >= max(a.hsep, b.hsep):
        return False
    return abs(a.z - b.z) < max(a.vsep, b.vsep)


def check_conflicts_for(subject: Vehicle, vehicles: Iterable[Vehicle]) -> set[int]:
    """Ids of every other active vehicle in conflict with the subject.

    The result is also accumulated into the subject's conflict list, which a
    safe flight must finish with empty.
    """
    found = {
        v.id
        for v in vehicles
        if v.id != subject.id and v.active and in_conflict(subject, v)
    }
    subject.conflict_list |= found
    return found


def closest_aircraft_distance(subject: Vehicle, vehicles: Iterable[Vehicle]) -> Optional[float]:
    """Horizontal distance to the nearest other active vehicle, if any."""
    distances = [
        euclidean_distance(subject.position, v.position)
        for v in vehicles
        if v.id != subject.id and v.active
    ]
    return min(distances) if distances else None


def vehicles_in_region(vehicles: Iterable[Vehicle], center: Point, radius: float) -> list[Vehicle]:
    """Active vehicles within `radius` NM of `center` (boundary inclusive)."""
    if radius < 0:
        raise ValueError(f"region radius must be non-negative, got {radius}")
    return [
        v
        for v in vehicles
        if v.active and euclidean_distance(v.position, center) <= radius
    ]


def flight_levels_for_heading(
    hdg: float, levels: tuple[float, ...] = FLIGHT_LEVELS_FT
) -> tuple[float, ...]:
    """Cruise altitudes permitted for a heading: odd levels below 180 deg, even at or above."""
    if not (0.0 <= hdg < 360.0):
        raise ValueError(f"heading must lie in [0, 360), got {hdg}")
    return levels[0::2] if hdg < 180.0 else levels[1::2]
