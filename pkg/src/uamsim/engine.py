"""The airspace manager: fleet registry, tick clock, and the simulation loop.

Each step advances the global clock by one second: scheduled vehicles whose
time has come take off, every active vehicle flies one tick, the whole fleet
is screened for separation conflicts, and one movement record per active
vehicle lands in the log. A run ends when the fleet is delivered, when a
conflict is found (end of that tick, with every conflicting pair collected),
or when the tick cap is hit.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import (
    FlightPhase,
    Vehicle,
    VehicleType,
    Waypoint,
    WorldBounds,
    check_conflicts_for,
    flight_levels_for_heading,
)
from .kinematics import DEFAULT_LIMITS, KinematicLimits, calc_angle_to_position, step_phase

# 10 simulated hours; guards against trajectories that never terminate.
DEFAULT_MAX_TICKS = 36_000

HALT_ALL_DELIVERED = "all_delivered"
HALT_CONFLICT = "conflict"
HALT_MAX_TICKS = "max_ticks"

# Phase tag used for externally overlaid vehicles, which are logged but
# never stepped; it separates their rows from the fleet's.
EXTERNAL_PHASE = "external"


@dataclass(frozen=True)
class MovementRecord:
    """One per-vehicle-per-tick row of the movement log."""

    tick: int
    id: int
    kind: VehicleType
    x: float
    y: float
    z: float
    hdg: float
    speed: float
    phase: str
    delivered: bool


@dataclass(frozen=True)
class ConflictEvent:
    """An unordered conflicting pair and the tick it was detected on."""

    a: int
    b: int
    tick: int


@dataclass(frozen=True)
class SimulationReport:
    """Outcome of a run: safety verdict, timings, and any conflicts found."""

    safe: bool
    total_ticks: int
    halt_reason: str
    conflicts: tuple[ConflictEvent, ...]
    delivery_ticks: dict[int, int]
    undelivered: tuple[int, ...]


@dataclass
class Airspace:
    """Holds the fleet and drives the tick-by-tick simulation.

    Owned by a single driver; `step` is not reentrant. Stepping inside a tick
    only reads the stepped vehicle and the immutable world, so fanning the
    per-vehicle work out to threads cannot change the result; vehicles are
    stepped (or merged) in ascending id order to keep logs reproducible.
    """

    bounds: WorldBounds = field(default_factory=WorldBounds)
    max_ticks: int = DEFAULT_MAX_TICKS
    limits: KinematicLimits = DEFAULT_LIMITS
    vehicles: dict[int, Vehicle] = field(default_factory=dict)
    tick: int = 0
    movement_log: list[MovementRecord] = field(default_factory=list)
    delivery_ticks: dict[int, int] = field(default_factory=dict)
    finished: bool = False

    def add_vehicle(self, v: Vehicle) -> None:
        """Register a vehicle in the scheduled phase.

        An empty objective list gets the direct-flight default (one landing
        fix above the destination at the lowest level the direct heading
        permits); otherwise a landing fix is appended when the trajectory
        does not already end at the destination.
        """
        if v.id in self.vehicles:
            raise ValueError(f"vehicle id {v.id} is already registered")
        if not v.objective_list and (v.x, v.y) == (v.target_x, v.target_y):
            raise ValueError(
                f"vehicle {v.id} needs a trajectory or a destination distinct from its origin"
            )
        self._finalize_trajectory(v)
        self._check_in_bounds(v)
        self.vehicles[v.id] = v

    def set_trajectory(self, vehicle_id: int, waypoints: Iterable[Waypoint]) -> None:
        """Replace a scheduled vehicle's whole trajectory in one call."""
        v = self.vehicles.get(vehicle_id)
        if v is None:
            raise KeyError(f"unknown vehicle id {vehicle_id}")
        if v.phase is not FlightPhase.SCHEDULED:
            raise ValueError(f"vehicle {vehicle_id} has already entered the simulation")
        waypoints = list(waypoints)
        if not waypoints:
            raise ValueError(f"vehicle {vehicle_id}: trajectory must contain at least one waypoint")
        v.objective_list = waypoints
        self._finalize_trajectory(v)
        self._check_in_bounds(v)

    def _finalize_trajectory(self, v: Vehicle) -> None:
        if v.objective_list:
            last = v.objective_list[-1]
            if (last.x, last.y) != (v.target_x, v.target_y):
                v.objective_list.append(
                    Waypoint(v.target_x, v.target_y, last.z, last.s)
                )
        else:
            heading = calc_angle_to_position(v.position, (v.target_x, v.target_y))
            level = flight_levels_for_heading(heading, self.bounds.flight_levels)[0]
            v.objective_list = [Waypoint(v.target_x, v.target_y, level, v.speed)]

    def _check_in_bounds(self, v: Vehicle) -> None:
        for wp in v.objective_list:
            if not self.bounds.contains(wp.x, wp.y):
                raise ValueError(
                    f"vehicle {v.id}: waypoint ({wp.x}, {wp.y}) outside world bounds"
                )

    def check_schedule(self) -> set[int]:
        """Move every scheduled vehicle whose time has come into take-off."""
        activated = set()
        for v in self._fleet():
            if v.phase is FlightPhase.SCHEDULED and v.timestamp <= self.tick:
                v.phase = FlightPhase.TAKEOFF_CLIMB
                activated.add(v.id)
        return activated

    def step(self, parallel: bool = False) -> list[tuple[int, int]]:
        """Advance the whole airspace one tick.

        Returns the conflicting id pairs detected this tick (ascending,
        a < b), already recorded into the vehicles' conflict lists.
        """
        if self.finished:
            raise RuntimeError("simulation has already terminated")
        self.check_schedule()
        movers = [v for v in self._fleet() if v.active]

        if parallel and movers:
            with ThreadPoolExecutor(max_workers=min(8, len(movers))) as pool:
                list(pool.map(lambda v: step_phase(v, self.bounds, self.limits), movers))
        else:
            for v in movers:
                step_phase(v, self.bounds, self.limits)

        still_active = [v for v in movers if v.active]
        pairs = set()
        for v in still_active:
            for other_id in check_conflicts_for(v, still_active):
                pairs.add((min(v.id, other_id), max(v.id, other_id)))

        self.tick += 1
        for v in movers:
            self.movement_log.append(self._record(v, phase=v.phase.value))
            if v.delivered and v.id not in self.delivery_ticks:
                self.delivery_ticks[v.id] = self.tick
        return sorted(pairs)

    def simulate(self, parallel: bool = False) -> SimulationReport:
        """Run to completion and report the outcome.

        Halts at the end of the first tick with a conflict (collecting every
        conflicting pair found that tick), when all vehicles are delivered,
        or when the tick cap is exhausted (an inconclusive outcome).
        """
        if not self.vehicles:
            raise ValueError("cannot simulate an empty airspace")
        while True:
            pairs = self.step(parallel=parallel)
            if pairs:
                halt_reason = HALT_CONFLICT
                break
            if all(v.delivered for v in self._fleet()):
                halt_reason = HALT_ALL_DELIVERED
                break
            if self.tick >= self.max_ticks:
                halt_reason = HALT_MAX_TICKS
                break
        self.finished = True
        conflicts = tuple(ConflictEvent(a, b, self.tick) for a, b in pairs)
        return SimulationReport(
            safe=not conflicts,
            total_ticks=self.tick,
            halt_reason=halt_reason,
            conflicts=conflicts,
            delivery_ticks=dict(self.delivery_ticks),
            undelivered=tuple(v.id for v in self._fleet() if not v.delivered),
        )

    def log_external_vehicle(self, v: Vehicle) -> None:
        """Overlay one externally managed vehicle onto the log at the current tick.

        The vehicle is not registered or stepped; its rows are tagged with the
        external phase so they stay distinguishable from fleet rows even when
        ids collide.
        """
        self.movement_log.append(self._record(v, phase=EXTERNAL_PHASE))

    def _record(self, v: Vehicle, phase: str) -> MovementRecord:
        return MovementRecord(
            tick=self.tick, id=v.id, kind=v.kind, x=v.x, y=v.y, z=v.z,
            hdg=v.hdg, speed=v.speed, phase=phase, delivered=v.delivered,
        )

    def _fleet(self) -> list[Vehicle]:
        return [self.vehicles[vid] for vid in sorted(self.vehicles)]

    def phase_census(self) -> dict[FlightPhase, int]:
        """Vehicle count per phase; the counts always sum to the fleet size."""
        census = {phase: 0 for phase in FlightPhase}
        for v in self._fleet():
            census[v.phase] += 1
        return census
