"""Force-field descriptors bridging the public API to the numba kernels.

A ``Field`` is an immutable (kind, params) pair with convenience evaluators.
Constructors cover the rf trap, its pseudopotential (in plain or
lambda-rescaled units), the linearized Mathieu field, a harmonic benchmark
field, and uniform oscillatory tickle forces added to the trap fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _kernels as _k
from .errors import ValidationError
from .trap import TrapParams, Z0


@dataclass(frozen=True)
class EscapeRegion:
    """Region whose entry terminates a trajectory as escaped.

    Defaults: below z = 0.02 (electrode plane), above z = 4 (irrevocably
    past the barrier, which sits below z = 1.58 for every lambda), or
    |y| > 4.  All in units of the electrode width.
    """

    z_lo: float = 0.02
    z_hi: float = 4.0
    y_abs: float = 4.0

    def as_array(self) -> np.ndarray:
        return np.array([self.z_lo, self.z_hi, self.y_abs])


NO_ESCAPE = EscapeRegion(z_lo=-1e300, z_hi=1e300, y_abs=1e300)


@dataclass(frozen=True)
class Field:
    """A force field evaluable by the integration kernels."""

    kind: int
    params: np.ndarray = dc_field(repr=False)
    label: str = ""
    drive_period: float | None = None   # pi for the rf drive, None if autonomous

    def __post_init__(self):
        p = np.zeros(7)
        q = np.asarray(self.params, dtype=float)
        p[: q.size] = q
        object.__setattr__(self, "params", p)

    @property
    def time_dependent(self) -> bool:
        return self.drive_period is not None

    def acceleration(self, state4, t: float = 0.0) -> np.ndarray:
        out = np.empty(4)
        _k._rhs(self.kind, self.params, float(t), np.asarray(state4, dtype=float), out)
        return out[2:]

    def potential(self, y: float, z: float, t: float = 0.0) -> float:
        s = np.array([float(y), float(z), 0.0, 0.0])
        return _k.potential_energy(self.kind, self.params, float(t), s)

    def energy(self, state4, t: float = 0.0) -> float:
        return _k.total_energy(self.kind, self.params, float(t),
                               np.asarray(state4, dtype=float))


def rf_field(params: TrapParams) -> Field:
    """Full time-dependent trap field in standard nondimensional units."""
    return Field(_k.FIELD_RF, [params.a_x, params.q5, params.a5],
                 label="rf", drive_period=math.pi)


def pseudo_field(params: TrapParams) -> Field:
    """Pseudopotential of the trap in standard nondimensional units."""
    return Field(_k.FIELD_PSEUDO, [params.a_z, params.q5**2, params.a5],
                 label="pseudo")


def pseudo_field_scaled(lam: float, lam_b: float = 0.0) -> Field:
    """Rescaled pseudopotential (time in units of 1/q5): depends on lambda only."""
    if lam < 0.0 or lam_b < 0.0:
        raise ValidationError("lam and lam_b must be non-negative")
    return Field(_k.FIELD_PSEUDO, [-lam, 1.0, -lam_b], label="pseudo-scaled")


def mathieu_field(a: float, q: float) -> Field:
    """Linearized (Mathieu) field u'' = -(a - 2 q cos 2t) u in both channels."""
    return Field(_k.FIELD_MATHIEU, [a, q], label="mathieu", drive_period=math.pi)


def harmonic_field(nu_y: float, nu_z: float, center=(0.0, 0.0)) -> Field:
    """Benchmark 2D harmonic oscillator with frequencies (nu_y, nu_z)."""
    return Field(_k.FIELD_HARMONIC, [nu_y**2, nu_z**2, center[0], center[1]],
                 label="harmonic")


def with_tickle(base: Field, amplitude_yz, nu_d: float, phi0: float = 0.0) -> Field:
    """Add a spatially uniform force (fy, fz) cos(nu_d t + phi0) to a trap field."""
    fy, fz = amplitude_yz
    if base.kind == _k.FIELD_RF:
        kind = _k.FIELD_RF_TICKLE
        period = math.pi
    elif base.kind == _k.FIELD_PSEUDO:
        kind = _k.FIELD_PSEUDO_TICKLE
        period = 2.0 * math.pi / nu_d
    else:
        raise ValidationError("tickle forces attach to the rf or pseudopotential fields")
    p = base.params.copy()
    p[3], p[4], p[5], p[6] = fy, fz, nu_d, phi0
    return Field(kind, p, label=base.label + "+tickle", drive_period=period)


def saddle_height() -> float:
    """Height of the field-free saddle line above the electrode plane."""
    return Z0
