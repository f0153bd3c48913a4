"""1-DOF winch/generator model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import autodiff as ad
from .errors import NonPositiveLength, NonPositiveTension


@dataclass(frozen=True)
class WinchParams:
    inertia: float  # kg m^2
    friction: float  # N m s, viscous
    radius: float  # m, drum radius

    def __post_init__(self):
        if min(self.inertia, self.friction, self.radius) <= 0:
            raise ValueError("winch parameters must be positive")


def winch_rhs(theta_dot, tension, tau_gen, params: WinchParams):
    """Winch angular acceleration under tether tension and generator torque."""
    if np.any(ad.value(tension) <= 0.0):
        raise NonPositiveTension("winch model requires tension > 0")
    return (tension * params.radius - tau_gen - theta_dot * params.friction) * (
        1.0 / params.inertia
    )


def tether_length(theta, radius):
    """Deployed tether length l = r θ."""
    if np.any(ad.value(theta) <= 0.0):
        raise NonPositiveLength("winch angle must be positive")
    return theta * radius


def mechanical_power(theta_dot, tau_gen):
    """Generated mechanical power; positive when reeling out under load."""
    return theta_dot * tau_gen
