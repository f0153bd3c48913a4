"""Reference frames, rotations, and kinematic rate maps.

Conventions (fixed here, relied on everywhere else):

* Elementary rotations map *parent* coordinates into the *rotated* frame,
  so ``elementary_rotation("z", pi/2) @ (1,0,0) = (0,-1,0)``.
* ``attitude_matrix(qa)`` maps inertial (O) coordinates into body (B)
  coordinates, composed as R_x(roll) R_y(pitch) R_z(yaw).
* The wind frame W has x along the wind direction and z pointing up
  (inertial z points down).
* Aircraft position uses spherical coordinates (azimuth, elevation, radius)
  in the W frame: p^W = r (cos az cos el, sin az cos el, sin el).

Rate maps are derived analytically from these parameterizations so the
kinematic identities skew(J q̇) = R Ṙᵀ and M q̇ = ṗ hold exactly.
"""

from __future__ import annotations

import numpy as np

from . import autodiff as ad
from .errors import SingularConfiguration

_DET_EPS = 1e-10


def elementary_rotation(axis, angle):
    """Direction-cosine matrix of a rotation about a coordinate axis.

    Maps parent-frame coordinates into the rotated (child) frame.
    """
    c, s = ad.cos(angle), ad.sin(angle)
    one = c * 0.0 + 1.0
    zero = c * 0.0
    if axis == "x":
        rows = [[one, zero, zero], [zero, c, s], [zero, -s, c]]
    elif axis == "y":
        rows = [[c, zero, -s], [zero, one, zero], [s, zero, c]]
    elif axis == "z":
        rows = [[c, s, zero], [-s, c, zero], [zero, zero, one]]
    else:
        raise ValueError(f"unknown rotation axis {axis!r}")
    return ad.stack([ad.stack(r, axis=-1) for r in rows], axis=-2)


def skew(v):
    """Cross-product matrix: skew(a) @ b = a x b."""
    z = v[..., 0] * 0.0
    return ad.stack(
        [
            ad.stack([z, -v[..., 2], v[..., 1]], axis=-1),
            ad.stack([v[..., 2], z, -v[..., 0]], axis=-1),
            ad.stack([-v[..., 1], v[..., 0], z], axis=-1),
        ],
        axis=-2,
    )


def attitude_matrix(qa):
    """R_O^B from Euler angles (roll, pitch, yaw): R_x(φ) R_y(θ) R_z(ψ)."""
    rx = elementary_rotation("x", qa[..., 0])
    ry = elementary_rotation("y", qa[..., 1])
    rz = elementary_rotation("z", qa[..., 2])
    return ad.matmul(rx, ad.matmul(ry, rz))


def euler_rate_map(qa, check=True):
    """Map J with ω^B = J q̇_a, derived from the attitude composition.

    Singular at pitch = ±π/2 (det J = cos θ).
    """
    phi, theta = qa[..., 0], qa[..., 1]
    cphi, sphi = ad.cos(phi), ad.sin(phi)
    ctheta, stheta = ad.cos(theta), ad.sin(theta)
    one = cphi * 0.0 + 1.0
    zero = cphi * 0.0
    j = ad.stack(
        [
            ad.stack([one, zero, -stheta], axis=-1),
            ad.stack([zero, cphi, sphi * ctheta], axis=-1),
            ad.stack([zero, -sphi, cphi * ctheta], axis=-1),
        ],
        axis=-2,
    )
    if check and np.any(np.abs(ad.value(ctheta)) < _DET_EPS):
        raise SingularConfiguration("euler rate map singular: |cos(pitch)| < 1e-10")
    return j


def wind_frame(zeta):
    """R_O^W = R_z(ζ) R_x(π): x downwind, z up."""
    return ad.matmul(elementary_rotation("z", zeta), elementary_rotation("x", np.pi))


def spherical_to_position(qs):
    """Aircraft position in the W frame from (azimuth, elevation, radius)."""
    az, el, r = qs[..., 0], qs[..., 1], qs[..., 2]
    cel = ad.cos(el)
    return ad.stack([r * ad.cos(az) * cel, r * ad.sin(az) * cel, r * ad.sin(el)], axis=-1)


def spherical_rate_map(qs, check=True):
    """Analytic Jacobian M with v^W = M q̇_s; det M = r² cos el (up to sign).

    Singular at the zenith (cos el = 0) and at r = 0.
    """
    az, el, r = qs[..., 0], qs[..., 1], qs[..., 2]
    caz, saz = ad.cos(az), ad.sin(az)
    cel, sel = ad.cos(el), ad.sin(el)
    zero = caz * 0.0
    m = ad.stack(
        [
            ad.stack([-r * saz * cel, -r * caz * sel, caz * cel], axis=-1),
            ad.stack([r * caz * cel, -r * saz * sel, saz * cel], axis=-1),
            ad.stack([zero, r * cel, sel], axis=-1),
        ],
        axis=-2,
    )
    if check:
        det = ad.value(r) ** 2 * ad.value(cel)
        if np.any(np.abs(det) < _DET_EPS):
            raise SingularConfiguration("spherical rate map singular: r² cos(el) ~ 0")
    return m


def position_to_spherical(p):
    """Inverse of spherical_to_position (plain floats; used for guesses)."""
    p = np.asarray(p, dtype=float)
    r = np.linalg.norm(p, axis=-1)
    az = np.arctan2(p[..., 1], p[..., 0])
    el = np.arctan2(p[..., 2], np.hypot(p[..., 0], p[..., 1]))
    return np.stack([az, el, r], axis=-1)


def euler_from_matrix(r):
    """Extract (roll, pitch, yaw) with pitch in (-π/2, π/2) from an R_O^B."""
    r = np.asarray(r, dtype=float)
    pitch = np.arcsin(np.clip(-r[..., 0, 2], -1.0, 1.0))
    roll = np.arctan2(r[..., 1, 2], r[..., 2, 2])
    yaw = np.arctan2(r[..., 0, 1], r[..., 0, 0])
    return np.stack([roll, pitch, yaw], axis=-1)
