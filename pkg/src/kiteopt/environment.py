"""Altitude-dependent wind and air density models."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import autodiff as ad
from .errors import InvalidAltitude


@dataclass(frozen=True)
class WindModel:
    """Logarithmic wind shear profile.

    ``ground_speed`` is the measured wind speed at ``reference_height``;
    ``roughness_length`` is the height at which the profile vanishes;
    ``direction`` is the wind heading ζ from the inertial x-axis.
    """

    ground_speed: float
    reference_height: float
    roughness_length: float
    direction: float = 0.0

    def __post_init__(self):
        if self.ground_speed < 0:
            raise ValueError("ground_speed must be >= 0")
        if not self.reference_height > self.roughness_length > 0:
            raise ValueError("need reference_height > roughness_length > 0")


@dataclass(frozen=True)
class AtmosphereModel:
    """Isothermal exponential density profile ρ(z) = ρ0 exp(-z/H)."""

    sea_level_density: float = 1.225
    scale_height: float = 8500.0

    def __post_init__(self):
        if self.sea_level_density <= 0 or self.scale_height <= 0:
            raise ValueError("density and scale height must be positive")


def wind_speed(z, model: WindModel):
    """Wind speed magnitude at altitude ``z`` (log law anchored at z_ref)."""
    if np.any(ad.value(z) <= model.roughness_length):
        raise InvalidAltitude(
            f"altitude at or below roughness length {model.roughness_length} m"
        )
    scale = model.ground_speed / np.log(model.reference_height / model.roughness_length)
    return ad.log(z / model.roughness_length) * scale


def wind_velocity(z, model: WindModel):
    """Wind velocity vector in the W frame: magnitude along E1."""
    speed = wind_speed(z, model)
    zero = speed * 0.0
    return ad.stack([speed, zero, zero], axis=-1)


def air_density(z, model: AtmosphereModel):
    """Air density at altitude ``z``; strictly positive, monotone decreasing."""
    return ad.exp(z * (-1.0 / model.scale_height)) * model.sea_level_density
