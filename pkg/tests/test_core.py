"""Separation geometry and conflict predicate tests.

Derived expectations are computed with independent oracles (plain formulas
written out in the tests) rather than by calling back into the code under
test.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uamsim.core import (
    FLIGHT_LEVELS_FT,
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


def cruising(vid, x, y, z=1000.0, kind=VehicleType.PILOTED):
    """Active vehicle pinned to a position, for geometry tests."""
    return Vehicle(
        id=vid, kind=kind, x=x, y=y, target_x=x, target_y=y, z=z,
        phase=FlightPhase.CRUISE,
    )


class TestEuclideanDistance:
    def test_three_four_five_triangle(self):
        assert euclidean_distance((0, 0), (3, 4)) == 5.0

    def test_axis_aligned(self):
        assert euclidean_distance((10, 5), (20, 5)) == 10.0

    def test_diagonal(self):
        # oracle: the hypotenuse of a 2 x 2 right triangle, 2 * sqrt(2)
        assert euclidean_distance((4, 4), (2, 2)) == pytest.approx(2 * math.sqrt(2))
        assert euclidean_distance((4, 4), (2, 2)) == pytest.approx(2.8284271, abs=1e-6)

    @given(
        st.tuples(st.floats(-50, 50), st.floats(-50, 50)),
        st.tuples(st.floats(-50, 50), st.floats(-50, 50)),
        st.tuples(st.floats(-50, 50), st.floats(-50, 50)),
    )
    def test_symmetric_nonnegative_triangle_inequality(self, a, b, c):
        assert euclidean_distance(a, b) == euclidean_distance(b, a) >= 0.0
        assert euclidean_distance(a, c) <= (
            euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-9
        )


class TestSeparationAdjustedDistance:
    def test_mixed_pair_five_nm_apart(self):
        a = cruising(1, 0, 0, kind=VehicleType.PILOTED)
        b = cruising(2, 5, 0, kind=VehicleType.SELF_PILOTED)
        assert separation_adjusted_distance(a, b) == 4.5

    def test_boundary_is_zero(self):
        a = cruising(1, 0, 0, kind=VehicleType.PILOTED)
        b = cruising(2, 0.25, 0, kind=VehicleType.PILOTED)
        assert separation_adjusted_distance(a, b) == 0.0

    def test_inside_joint_disc_goes_negative(self):
        # oracle: 0.3 - max(0.5, 0.25) = -0.2
        a = cruising(1, 0, 0, kind=VehicleType.REMOTELY_PILOTED)
        b = cruising(2, 0.3, 0, kind=VehicleType.PILOTED)
        assert separation_adjusted_distance(a, b) == pytest.approx(-0.2)

    def test_same_id_rejected(self):
        a = cruising(1, 0, 0)
        b = cruising(1, 1, 1)
        with pytest.raises(ValueError):
            separation_adjusted_distance(a, b)


class TestInConflict:
    def test_close_piloted_pair_same_level(self):
        a = cruising(1, 0, 0)
        b = cruising(2, 0.20, 0)
        assert in_conflict(a, b) is True

    def test_vertical_relief(self):
        a = cruising(1, 0, 0, z=1000)
        b = cruising(2, 0.20, 0, z=1250)
        assert in_conflict(a, b) is False

    def test_larger_separation_governs(self):
        a = cruising(1, 0, 0, kind=VehicleType.PILOTED)
        b = cruising(2, 0.40, 0, kind=VehicleType.SELF_PILOTED)
        assert in_conflict(a, b) is True

    def test_self_comparison_rejected(self):
        a = cruising(1, 0, 0)
        with pytest.raises(ValueError):
            in_conflict(a, a)

    def test_exactly_at_separation_is_legal(self):
        a = cruising(1, 0, 0)
        b = cruising(2, 0.25, 0)
        assert in_conflict(a, b) is False

    def test_exactly_at_vertical_separation_is_legal(self):
        a = cruising(1, 0, 0, z=1000)
        b = cruising(2, 0.1, 0, z=1200)
        assert in_conflict(a, b) is False


pair_states = st.tuples(
    st.floats(0, 30), st.floats(0, 30), st.floats(100, 1600),
    st.floats(0, 30), st.floats(0, 30), st.floats(100, 1600),
    st.sampled_from(list(VehicleType)), st.sampled_from(list(VehicleType)),
)


class TestConflictProperties:
    @given(pair_states)
    def test_symmetry(self, state):
        ax, ay, az, bx, by, bz, ka, kb = state
        a = cruising(1, ax, ay, z=az, kind=ka)
        b = cruising(2, bx, by, z=bz, kind=kb)
        assert in_conflict(a, b) == in_conflict(b, a)

    @given(pair_states, st.floats(0.0, 1.0))
    def test_shrinking_horizontal_distance_preserves_conflict(self, state, shrink):
        ax, ay, az, bx, by, bz, ka, kb = state
        a = cruising(1, ax, ay, z=az, kind=ka)
        b = cruising(2, bx, by, z=bz, kind=kb)
        if not in_conflict(a, b):
            return
        # move b along the segment toward a; the conflict must persist
        b.x = a.x + (b.x - a.x) * shrink
        b.y = a.y + (b.y - a.y) * shrink
        assert in_conflict(a, b)

    @given(pair_states)
    def test_vertical_relief_everywhere(self, state):
        ax, ay, az, bx, by, bz, ka, kb = state
        a = cruising(1, ax, ay, z=az, kind=ka)
        b = cruising(2, bx, by, z=bz, kind=kb)
        if abs(az - bz) >= 200.0:
            assert not in_conflict(a, b)

    @given(pair_states)
    def test_equivalence_with_adjusted_distance(self, state):
        ax, ay, az, bx, by, bz, ka, kb = state
        a = cruising(1, ax, ay, z=az, kind=ka)
        b = cruising(2, bx, by, z=bz, kind=kb)
        expected = separation_adjusted_distance(a, b) < 0 and abs(az - bz) < 200.0
        assert in_conflict(a, b) == expected


class TestFleetQueries:
    def test_subject_alone_has_no_conflicts(self):
        a = cruising(1, 3, 3)
        assert check_conflicts_for(a, [a]) == set()
        assert a.conflict_list == set()

    def test_close_pair_found_among_three(self):
        a = cruising(1, 10, 10)
        b = cruising(2, 10.1, 10)
        c = cruising(3, 20, 20)
        # oracle over all pairs: only (1, 2) violates 0.25 NM at the same level
        for u, v in [(a, b), (a, c), (b, c)]:
            dist = math.hypot(u.x - v.x, u.y - v.y)
            assert (dist < 0.25) == ({u.id, v.id} == {1, 2})
        fleet = [a, b, c]
        assert check_conflicts_for(a, fleet) == {2}
        assert check_conflicts_for(b, fleet) == {1}
        assert check_conflicts_for(c, fleet) == set()
        assert a.conflict_list == {2} and b.conflict_list == {1}

    def test_pair_exactly_at_separation_is_clear(self):
        a = cruising(1, 10, 10)
        b = cruising(2, 10.25, 10)
        assert check_conflicts_for(a, [a, b]) == set()

    def test_scheduled_and_delivered_vehicles_are_invisible(self):
        a = cruising(1, 10, 10)
        b = cruising(2, 10.05, 10)
        b.phase = FlightPhase.SCHEDULED
        c = cruising(3, 10.05, 10.05)
        c.phase = FlightPhase.DELIVERED
        assert check_conflicts_for(a, [a, b, c]) == set()
        assert closest_aircraft_distance(a, [a, b, c]) is None
        assert vehicles_in_region([a, b, c], (10, 10), 1.0) == [a]

    def test_closest_distance_axis_pair(self):
        a = cruising(1, 10, 5)
        b = cruising(2, 20, 5)
        assert closest_aircraft_distance(a, [a, b]) == 10.0

    def test_closest_distance_single_vehicle(self):
        a = cruising(1, 10, 5)
        assert closest_aircraft_distance(a, [a]) is None

    def test_closest_distance_picks_minimum(self):
        a = cruising(1, 0, 0)
        b = cruising(2, 3, 4)
        c = cruising(3, 6, 8)
        assert closest_aircraft_distance(a, [a, b, c]) == 5.0


class TestVehiclesInRegion:
    def test_zero_radius_includes_exact_center(self):
        a = cruising(1, 3, 3)
        assert vehicles_in_region([a], (3, 3), 0.0) == [a]

    def test_outside_radius_excluded(self):
        a = cruising(1, 4.5, 3)
        assert vehicles_in_region([a], (3, 3), 1.0) == []

    def test_crossing_layout_region(self):
        a = cruising(1, 4, 4)
        b = cruising(2, 4, 2)
        # oracle: both sit sqrt(2) = 1.414 NM from (3, 3)
        assert math.hypot(1, 1) < 1.5
        assert vehicles_in_region([a, b], (3, 3), 1.5) == [a, b]

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            vehicles_in_region([], (0, 0), -1.0)

    @given(st.lists(st.tuples(st.floats(0, 30), st.floats(0, 30)), max_size=8))
    @settings(max_examples=50)
    def test_world_diagonal_radius_returns_all_active(self, points):
        fleet = [cruising(i, x, y) for i, (x, y) in enumerate(points)]
        region = vehicles_in_region(fleet, (0, 0), WorldBounds().diagonal)
        assert region == fleet


class TestFlightLevelRule:
    def test_eastbound(self):
        assert flight_levels_for_heading(90) == (1000, 1400)

    def test_westbound(self):
        assert flight_levels_for_heading(270) == (1200, 1600)

    def test_boundary_belongs_to_even_levels(self):
        assert flight_levels_for_heading(180) == (1200, 1600)

    @pytest.mark.parametrize("hdg", [-1, 360, 720])
    def test_out_of_range_heading_rejected(self, hdg):
        with pytest.raises(ValueError):
            flight_levels_for_heading(hdg)


class TestDomainTypes:
    def test_separation_by_type(self):
        assert VehicleType.PILOTED.horizontal_separation_nm == 0.25
        assert VehicleType.REMOTELY_PILOTED.horizontal_separation_nm == 0.5
        assert VehicleType.SELF_PILOTED.horizontal_separation_nm == 0.5

    def test_vehicle_hsep_tracks_kind(self):
        v = cruising(1, 0, 0, kind=VehicleType.REMOTELY_PILOTED)
        assert v.hsep == 0.5
        assert v.vsep == 200.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"x": -0.1, "y": 0, "z": 1000},
            {"x": 0, "y": 30.5, "z": 1000},
            {"x": 0, "y": 0, "z": 99},
            {"x": 0, "y": 0, "z": 1700},
            {"x": 0, "y": 0, "z": 1000, "s": 120},
            {"x": 0, "y": 0, "z": 1000, "s": 171},
        ],
    )
    def test_waypoint_validation(self, kwargs):
        with pytest.raises(ValueError):
            Waypoint(**kwargs)

    def test_waypoint_accepts_off_level_altitudes(self):
        # hand-built trajectories may sit anywhere in the vertical envelope
        Waypoint(x=1, y=1, z=1100)

    def test_world_bounds_validation(self):
        with pytest.raises(ValueError):
            WorldBounds(x_min=5, x_max=5)
        with pytest.raises(ValueError):
            WorldBounds(flight_levels=(1000.0, 1100.0))
        assert WorldBounds().flight_levels == FLIGHT_LEVELS_FT
