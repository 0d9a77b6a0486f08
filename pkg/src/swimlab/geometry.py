"""Tank geometry and per-frame kinematic quantities.

Coordinate conventions used everywhere in the package:

* units are cm, cm/s, cm/s^2, seconds and degrees;
* the tank is a circle centered at the origin;
* angles are signed, counterclockwise-positive, and wrapped to (-180, 180];
* the wall angle is measured against the outward radial direction at the
  agent's position (the normal of the nearest wall point);
* the viewing angle is left-of-heading positive.

Frames where an angle is undefined (zero speed, position exactly at the
center, coincident agents) carry NaN in that slot; downstream statistics
skip NaNs instead of imputing values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfTankError, UndefinedAngleError

DEFAULT_TANK_RADIUS_CM = 25.0

#: |u| may exceed the radius by this much before wall_distance() raises.
WALL_TOLERANCE_CM = 1e-6


def wrap_angle_deg(angle):
    """Wrap an angle (or array of angles) in degrees to (-180, 180]."""
    return ((np.asarray(angle, dtype=float) - 180.0) % -360.0) + 180.0


@dataclass(frozen=True)
class TankGeometry:
    """Circular tank of radius ``radius_cm`` centered at the origin."""

    radius_cm: float = DEFAULT_TANK_RADIUS_CM

    def __post_init__(self):
        if not self.radius_cm > 0:
            raise ValueError(f"tank radius must be positive, got {self.radius_cm}")


@dataclass(frozen=True)
class AgentState:
    """Position, velocity and wall distance of one agent at one tick.

    ``wall_distance_cm`` is always ``radius - |position|``; it may be
    negative for a transient out-of-tank state produced by raw integration,
    before the simulator's boundary policy has been applied.
    """

    position_cm: np.ndarray
    velocity_cm_s: np.ndarray
    wall_distance_cm: float

    def __post_init__(self):
        for name in ("position_cm", "velocity_cm_s"):
            arr = np.asarray(getattr(self, name), dtype=float).reshape(2)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_position(cls, position, velocity, geom: TankGeometry) -> "AgentState":
        u = np.asarray(position, dtype=float).reshape(2)
        v = np.asarray(velocity, dtype=float).reshape(2)
        return cls(u, v, geom.radius_cm - float(np.hypot(u[0], u[1])))

    @property
    def speed_cm_s(self) -> float:
        return float(np.hypot(self.velocity_cm_s[0], self.velocity_cm_s[1]))


@dataclass(frozen=True)
class KinematicFrame:
    """All six per-frame quantities from the focal agent's perspective.

    Angle fields are NaN when undefined for this frame.
    """

    speed_cm_s: float
    wall_distance_cm: float
    wall_angle_deg: float
    interindividual_distance_cm: float
    heading_difference_deg: float
    viewing_angle_deg: float
    timestamp_s: float


def wall_distance(position, geom: TankGeometry, tol: float = WALL_TOLERANCE_CM) -> float:
    """Distance from ``position`` to the tank wall (radius - |u|).

    Values in [-tol, 0) are clamped to 0; anything farther outside raises
    :class:`OutOfTankError` naming the offending coordinate.
    """
    u = np.asarray(position, dtype=float).reshape(2)
    r = geom.radius_cm - float(np.hypot(u[0], u[1]))
    if r < -tol:
        raise OutOfTankError(
            f"position ({u[0]:.6g}, {u[1]:.6g}) lies {-r:.6g} cm outside the "
            f"tank of radius {geom.radius_cm:g} cm"
        )
    return max(r, 0.0)


def _signed_angle_deg(ref, vec) -> float:
    """Signed CCW angle from ``ref`` to ``vec``, in (-180, 180]."""
    cross = ref[0] * vec[1] - ref[1] * vec[0]
    dot = ref[0] * vec[0] + ref[1] * vec[1]
    return float(wrap_angle_deg(math.degrees(math.atan2(cross, dot))))


def wall_angle(position, velocity) -> float:
    """Signed heading angle relative to the outward wall normal.

    |angle| < 90 deg means the agent is heading toward the wall, > 90 deg
    away from it. Undefined (raises) for zero velocity or a position exactly
    at the tank center.
    """
    u = np.asarray(position, dtype=float).reshape(2)
    v = np.asarray(velocity, dtype=float).reshape(2)
    if u[0] == 0.0 and u[1] == 0.0:
        raise UndefinedAngleError("wall normal undefined at the tank center")
    if v[0] == 0.0 and v[1] == 0.0:
        raise UndefinedAngleError("wall angle undefined for zero velocity")
    return _signed_angle_deg(u, v)


def heading_difference(velocity_i, velocity_j) -> float:
    """Signed heading difference heading(j) - heading(i), wrapped."""
    vi = np.asarray(velocity_i, dtype=float).reshape(2)
    vj = np.asarray(velocity_j, dtype=float).reshape(2)
    if (vi[0] == 0.0 and vi[1] == 0.0) or (vj[0] == 0.0 and vj[1] == 0.0):
        raise UndefinedAngleError("heading undefined for zero velocity")
    return _signed_angle_deg(vi, vj)


def viewing_angle(position_i, velocity_i, position_j) -> float:
    """Signed angle at which agent j is seen from agent i's heading.

    Left of heading is positive. Undefined (raises) for coincident positions
    or a zero focal velocity.
    """
    ui = np.asarray(position_i, dtype=float).reshape(2)
    vi = np.asarray(velocity_i, dtype=float).reshape(2)
    uj = np.asarray(position_j, dtype=float).reshape(2)
    bearing = uj - ui
    if bearing[0] == 0.0 and bearing[1] == 0.0:
        raise UndefinedAngleError("viewing angle undefined for coincident positions")
    if vi[0] == 0.0 and vi[1] == 0.0:
        raise UndefinedAngleError("viewing angle undefined for zero focal velocity")
    return _signed_angle_deg(vi, bearing)


def pair_distance(position_i, position_j) -> float:
    """Euclidean distance between the two agents."""
    ui = np.asarray(position_i, dtype=float).reshape(2)
    uj = np.asarray(position_j, dtype=float).reshape(2)
    return float(np.hypot(uj[0] - ui[0], uj[1] - ui[1]))


def frame_from_states(
    state_i: AgentState, state_j: AgentState, geom: TankGeometry, timestamp_s: float
) -> KinematicFrame:
    """Assemble the full kinematic frame from agent i's perspective.

    Undefined angles become NaN rather than raising, so whole trajectories
    can be converted frame by frame without special-casing rare zero-speed
    samples.
    """

    def _or_nan(fn, *args):
        try:
            return fn(*args)
        except UndefinedAngleError:
            return math.nan

    return KinematicFrame(
        speed_cm_s=state_i.speed_cm_s,
        wall_distance_cm=wall_distance(state_i.position_cm, geom),
        wall_angle_deg=_or_nan(wall_angle, state_i.position_cm, state_i.velocity_cm_s),
        interindividual_distance_cm=pair_distance(state_i.position_cm, state_j.position_cm),
        heading_difference_deg=_or_nan(
            heading_difference, state_i.velocity_cm_s, state_j.velocity_cm_s
        ),
        viewing_angle_deg=_or_nan(
            viewing_angle, state_i.position_cm, state_i.velocity_cm_s, state_j.position_cm
        ),
        timestamp_s=timestamp_s,
    )
