"""Aerodynamic angles, polynomial coefficients, wrench assembly, and 6-DOF dynamics.

Per-surface axis convention (wing, elevator, rudder forces computed
independently from the apparent velocity): drag opposes the apparent
velocity direction; wing/elevator lift acts perpendicular to it within the
body x-z plane (positive toward -z, "up"); rudder lift is the side force
perpendicular to it within the body x-y plane. Tail surfaces act at a lever
``tail_lever`` behind the center of gravity; ailerons contribute a pure roll
couple. See docs/MODEL.md.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import autodiff as ad
from .errors import DegenerateAirspeed, InvalidSurfaceKind
from .frames import attitude_matrix

SURFACE_KINDS = {
    "wing": ("lift", "drag", "moment"),
    "elevator": ("lift", "drag"),
    "rudder": ("lift", "drag"),
}

_AIRSPEED_EPS = 1e-6


@dataclass(frozen=True)
class AircraftParams:
    mass: float  # kg
    inertia: np.ndarray  # 3x3, kg m^2
    wing_area: float  # m^2
    wing_span: float  # m
    wing_chord: float  # m
    elevator_area: float  # m^2
    rudder_area: float  # m^2
    tail_lever: float  # m, tail surfaces aft of the CG
    aileron_gain: float  # roll-moment coefficient per rad of deflection
    coefficients: dict = field(repr=False)  # {surface: {kind: (c2, c1, c0)}}
    gravity: float = 9.81

    def __post_init__(self):
        object.__setattr__(self, "inertia", np.asarray(self.inertia, dtype=float))
        if self.mass <= 0:
            raise ValueError("aircraft mass must be positive")
        j = self.inertia
        if j.shape != (3, 3) or not np.allclose(j, j.T):
            raise ValueError("inertia must be a symmetric 3x3 matrix")
        if np.any(np.linalg.eigvalsh(j) <= 0):
            raise ValueError("inertia must be positive definite")
        for surface, kinds in SURFACE_KINDS.items():
            for kind in kinds:
                poly = self.coefficients[surface][kind]
                if len(poly) != 3:
                    raise ValueError(f"{surface}/{kind} polynomial needs 3 coefficients")


class BodyWrench:
    """Force and torque in the body frame (entries may be duals)."""

    __slots__ = ("force", "torque")

    def __init__(self, force, torque):
        self.force = force
        self.torque = torque


class AeroState:
    """Apparent velocity and the aerodynamic angles derived from it."""

    __slots__ = ("v_apparent", "airspeed", "alpha", "beta", "dynamic_pressure")

    def __init__(self, v_apparent, airspeed, alpha, beta, dynamic_pressure=None):
        self.v_apparent = v_apparent
        self.airspeed = airspeed
        self.alpha = alpha
        self.beta = beta
        self.dynamic_pressure = dynamic_pressure


def aero_angles(v_body, v_wind_body, rho=None):
    """Apparent velocity, angle of attack, and sideslip from body velocities.

    Sign conventions: alpha = -arctan(w/u), beta = +arctan(v/u) on the
    apparent velocity components (u, v, w).
    """
    v_rel = v_body - v_wind_body
    u = v_rel[..., 0]
    if np.any(np.abs(ad.value(u)) < _AIRSPEED_EPS):
        raise DegenerateAirspeed("apparent axial velocity below 1e-6 m/s")
    alpha = -ad.arctan(v_rel[..., 2] / u)
    beta = ad.arctan(v_rel[..., 1] / u)
    airspeed = ad.norm(v_rel)
    q_bar = None if rho is None else rho * airspeed**2 * 0.5
    return AeroState(v_rel, airspeed, alpha, beta, q_bar)


def aero_coefficient(surface, kind, alpha, params: AircraftParams):
    """Second-order polynomial coefficient C(α) = c2 α² + c1 α + c0."""
    if surface not in SURFACE_KINDS or kind not in SURFACE_KINDS[surface]:
        raise InvalidSurfaceKind(f"no {kind!r} coefficient for surface {surface!r}")
    c2, c1, c0 = params.coefficients[surface][kind]
    return alpha * alpha * c2 + alpha * c1 + c0


def aero_wrench(v_body, omega_body, v_wind_body, rho, deflections, params: AircraftParams):
    """Total aerodynamic wrench in the body frame.

    ``deflections`` is (aileron, elevator, rudder). Returns the wrench and
    the AeroState augmented with the rate-damped corrected surface angles
    (also used by the path constraints).
    """
    aero = aero_angles(v_body, v_wind_body, rho)
    v_hat = aero.v_apparent / aero.airspeed
    q_bar = aero.dynamic_pressure

    # Rate damping: effective incidence changes from rotating at the lever arm.
    p_rate, q_rate, r_rate = omega_body[..., 0], omega_body[..., 1], omega_body[..., 2]
    alpha_damped = -q_rate * (params.tail_lever / aero.airspeed)
    beta_damped = r_rate * (params.tail_lever / aero.airspeed)
    delta_a_damped = -p_rate * (0.5 * params.wing_span / aero.airspeed)

    delta_a, delta_e, delta_r = deflections
    angle_elevator = aero.alpha + alpha_damped + delta_e
    angle_rudder = aero.beta + beta_damped + delta_r
    angle_aileron = delta_a + delta_a_damped

    # Lift perpendicular to the flow in the x-z plane, side force in x-y.
    vx, vy, vz = v_hat[..., 0], v_hat[..., 1], v_hat[..., 2]
    zero = vx * 0.0
    lift_dir = ad.stack([vz, zero, -vx], axis=-1) / ad.sqrt(vx * vx + vz * vz)
    side_dir = ad.stack([-vy, vx, zero], axis=-1) / ad.sqrt(vx * vx + vy * vy)

    lift_w = q_bar * params.wing_area * aero_coefficient("wing", "lift", aero.alpha, params)
    drag_w = q_bar * params.wing_area * aero_coefficient("wing", "drag", aero.alpha, params)
    moment_w = (
        q_bar
        * params.wing_area
        * params.wing_chord
        * aero_coefficient("wing", "moment", aero.alpha, params)
    )
    lift_e = q_bar * params.elevator_area * aero_coefficient(
        "elevator", "lift", angle_elevator, params
    )
    drag_e = q_bar * params.elevator_area * aero_coefficient(
        "elevator", "drag", angle_elevator, params
    )
    side_r = q_bar * params.rudder_area * aero_coefficient("rudder", "lift", angle_rudder, params)
    drag_r = q_bar * params.rudder_area * aero_coefficient("rudder", "drag", angle_rudder, params)

    force_wing = lift_dir * lift_w[..., None] - v_hat * drag_w[..., None]
    force_elev = lift_dir * lift_e[..., None] - v_hat * drag_e[..., None]
    force_rud = side_dir * side_r[..., None] - v_hat * drag_r[..., None]
    force = force_wing + force_elev + force_rud

    tail_arm = ad.stack([zero - params.tail_lever, zero, zero], axis=-1)
    roll_couple = q_bar * params.wing_area * params.wing_span * params.aileron_gain * angle_aileron
    torque = (
        ad.stack([roll_couple, moment_w, zero], axis=-1)
        + ad.cross(tail_arm, force_elev)
        + ad.cross(tail_arm, force_rud)
    )

    aero.dynamic_pressure = q_bar
    corrected = {
        "elevator": angle_elevator,
        "rudder": angle_rudder,
        "aileron": angle_aileron,
    }
    return BodyWrench(force, torque), aero, corrected


def rigid_body_rhs(v_body, omega_body, wrench: BodyWrench, params: AircraftParams):
    """Translational/rotational accelerations from the total body wrench."""
    v_dot = wrench.force * (1.0 / params.mass) - ad.cross(omega_body, v_body)
    j_omega = ad.matvec(params.inertia, omega_body)
    omega_dot = ad.solve3(
        params.inertia + 0.0 * np.eye(3), wrench.torque - ad.cross(omega_body, j_omega)
    )
    return v_dot, omega_dot


def gravity_force_body(qa, mass, gravity=9.81):
    """Weight vector rotated into the body frame (inertial z points down)."""
    r_ob = attitude_matrix(qa)
    w = mass * gravity
    zero = qa[..., 0] * 0.0
    return ad.matvec(r_ob, ad.stack([zero, zero, zero + w], axis=-1))
