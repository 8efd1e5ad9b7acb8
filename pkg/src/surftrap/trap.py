"""Five-wire surface-trap model.

Two rf electrodes of width w lie in the z = 0 plane, centered at y = -w and
y = +w, with the rest of the plane grounded.  Distances are measured in units
of w and time in units of 2/Omega, so the rf modulation is cos(2t) and the
drive period is pi.  In these units the electrode pair held at unit voltage
produces the gapless-plane potential ``five_wire_potential``, whose field
vanishes at a saddle point (0, z0) with z0 = sqrt(3)/2, and the full trap
potential is

    V(y, z, t) = Vh(y, z) + (a5 - 2 q5 cos 2t) V5w(y, z),

with Vh the static harmonic part and (a_x, q5, a5) the nondimensional
voltage parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import ELEMENTARY_CHARGE
from .errors import DomainError, ValidationError

Z0 = math.sqrt(3.0) / 2.0

# Electrode edge positions (units of w) and their arctan signs.
_EDGES = np.array([0.5, 1.5, -1.5, -0.5])
_SIGNS = np.array([1.0, -1.0, 1.0, -1.0])


def _check_z(z):
    if np.any(np.asarray(z) <= 0.0):
        raise DomainError("five-wire potential is defined only above the electrode plane (z > 0)")


def five_wire_potential(y, z):
    """Unit-voltage electrode-pair potential and its analytic gradient.

    Accepts scalars or broadcastable arrays.  Returns ``(value, grad)`` with
    ``grad[..., 0] = dV/dy`` and ``grad[..., 1] = dV/dz``.
    """
    _check_z(z)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    u = y[..., None] - _EDGES
    value = (_SIGNS * np.arctan2(u, z[..., None])).sum(axis=-1) / math.pi
    d = u * u + (z * z)[..., None]
    gy = (_SIGNS * z[..., None] / d).sum(axis=-1) / math.pi
    gz = (_SIGNS * (-u) / d).sum(axis=-1) / math.pi
    return value, np.stack([gy, gz], axis=-1)


def five_wire_hessian(y, z):
    """Analytic Hessian of the electrode-pair potential.

    Returns ``(hyy, hyz, hzz)``; the potential is harmonic, so hzz = -hyy.
    """
    _check_z(z)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    u = y[..., None] - _EDGES
    zz = (z * z)[..., None]
    d2 = (u * u + zz) ** 2
    hyy = (_SIGNS * (-2.0) * z[..., None] * u / d2).sum(axis=-1) / math.pi
    hyz = (_SIGNS * (u * u - zz) / d2).sum(axis=-1) / math.pi
    return hyy, hyz, -hyy


@dataclass(frozen=True)
class PhysicalTrapSpec:
    """Dimensional trap configuration.

    The axial confinement may be given either directly as the secular
    frequency ``omega_x`` (rad/s) or as a DC voltage ``u_dc`` (V) with its
    geometry factor ``c_x`` (m^2).
    """

    mass: float                 # ion mass, kg
    charge: float               # ion charge, C
    width: float                # electrode width w, m
    rf_omega: float             # rf angular frequency Omega, rad/s
    u_rf: float                 # rf voltage amplitude, V
    u_bias: float = 0.0         # DC bias on the rf electrodes, V
    omega_x: float | None = None   # axial secular frequency, rad/s
    u_dc: float | None = None      # axial DC voltage, V
    c_x: float | None = None       # axial geometry factor, m^2

    def __post_init__(self):
        for name in ("mass", "charge", "width", "rf_omega"):
            if getattr(self, name) <= 0.0:
                raise ValidationError(f"{name} must be strictly positive")
        if self.u_rf < 0.0:
            raise ValidationError("u_rf must be non-negative")
        if self.omega_x is None and (self.u_dc is None or self.c_x is None):
            raise ValidationError("provide omega_x, or u_dc together with c_x")
        if self.omega_x is not None and self.u_dc is not None:
            raise ValidationError("provide either omega_x or u_dc, not both")

    @property
    def axial_omega(self) -> float:
        """Axial secular frequency omega_x in rad/s."""
        if self.omega_x is not None:
            return self.omega_x
        # a_x = 4 e U_DC / (m Omega^2 c_x) and omega_x = sqrt(a_x) Omega / 2
        a_x = 4.0 * self.charge * self.u_dc / (self.mass * self.rf_omega**2 * self.c_x)
        if a_x < 0.0:
            raise ValidationError("axial DC voltage must confine (a_x >= 0)")
        return math.sqrt(a_x) * self.rf_omega / 2.0

    @property
    def energy_unit(self) -> float:
        """Energy of one nondimensional unit, m w^2 (Omega/2)^2, in joules."""
        return self.mass * self.width**2 * (self.rf_omega / 2.0) ** 2


@dataclass(frozen=True)
class TrapParams:
    """Nondimensional trap configuration.

    Radial symmetry of the DC quadrupole is built in: a_z = a_y = -a_x / 2.
    """

    a_x: float
    q5: float
    a5: float = 0.0
    physical: PhysicalTrapSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.a_x < 0.0:
            raise ValidationError("a_x must be non-negative")
        if self.q5 < 0.0:
            raise ValidationError("q5 must be non-negative")

    @property
    def a_y(self) -> float:
        return -self.a_x / 2.0

    @property
    def a_z(self) -> float:
        return -self.a_x / 2.0

    @property
    def z0(self) -> float:
        return Z0

    @property
    def lam(self) -> float | None:
        """Pseudopotential parameter a_x / (2 q5^2); None when q5 = 0."""
        if self.q5 == 0.0:
            return None
        return self.a_x / (2.0 * self.q5**2)

    @property
    def lam_b(self) -> float | None:
        """Pseudopotential bias parameter -a5 / q5^2; None when q5 = 0."""
        if self.q5 == 0.0:
            return None
        return -self.a5 / self.q5**2

    @classmethod
    def from_scaled(cls, sqrt_lambda: float, q5: float, sqrt_lambda_b: float = 0.0,
                    physical: PhysicalTrapSpec | None = None) -> "TrapParams":
        """Build from the rescaled parameters (sqrt(lambda), q5, sqrt(lambda_b))."""
        lam = sqrt_lambda**2
        lam_b = sqrt_lambda_b**2
        return cls(a_x=2.0 * lam * q5**2, q5=q5, a5=-lam_b * q5**2, physical=physical)


def nondimensionalize(spec: PhysicalTrapSpec) -> TrapParams:
    """Nondimensional voltage parameters of a physical trap."""
    m, e, w, om = spec.mass, spec.charge, spec.width, spec.rf_omega
    a_x = (2.0 * spec.axial_omega / om) ** 2
    q5 = 2.0 * e * spec.u_rf / (m * w**2 * om**2)
    a5 = 4.0 * e * spec.u_bias / (m * w**2 * om**2)
    return TrapParams(a_x=a_x, q5=q5, a5=a5, physical=spec)


def physicalize(params: TrapParams, mass: float, charge: float, width: float,
                rf_omega: float) -> PhysicalTrapSpec:
    """Recover the dimensional trap spec realizing ``params`` on given hardware."""
    u_rf = params.q5 * mass * width**2 * rf_omega**2 / (2.0 * charge)
    u_bias = params.a5 * mass * width**2 * rf_omega**2 / (4.0 * charge)
    omega_x = math.sqrt(params.a_x) * rf_omega / 2.0
    return PhysicalTrapSpec(mass=mass, charge=charge, width=width, rf_omega=rf_omega,
                            u_rf=u_rf, u_bias=u_bias, omega_x=omega_x)


def trap_potential(y, z, t, params: TrapParams):
    """Nondimensional trap potential and force at scaled time ``t``.

    Returns ``(value, force)`` with ``force = -grad V``; the x motion is a
    decoupled harmonic oscillator and is not included.
    """
    v5, g5 = five_wire_potential(y, z)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    drive = params.a5 - 2.0 * params.q5 * np.cos(2.0 * np.asarray(t, dtype=float))
    value = 0.5 * (params.a_y * y**2 + params.a_z * (z - Z0) ** 2) + drive * v5
    fy = -(params.a_y * y + drive * g5[..., 0])
    fz = -(params.a_z * (z - Z0) + drive * g5[..., 1])
    return value, np.stack([fy, fz], axis=-1)


@dataclass(frozen=True)
class MathieuExponent:
    """Characteristic exponent of z'' + (a - 2 q cos 2t) z = 0.

    ``nu`` is NaN when the parameters are outside the stability region;
    ``trace`` always carries the monodromy-matrix trace.
    """

    nu: float
    trace: float
    stable: bool


def mathieu_exponent(a: float, q: float, tol: float = 1e-12) -> MathieuExponent:
    """Characteristic exponent from the monodromy matrix over one drive period.

    The two fundamental solutions are integrated over t in [0, pi] with the
    same integrator used for trajectories; the exponent branch is taken in
    (0, 1), so the secular frequency is nu * Omega / 2.
    """
    from ._kernels import mathieu_monodromy

    m = mathieu_monodromy(float(a), float(q), tol)
    trace = m[0, 0] + m[1, 1]
    if abs(trace) > 2.0:
        return MathieuExponent(nu=math.nan, trace=trace, stable=False)
    nu = math.acos(max(-1.0, min(1.0, trace / 2.0))) / math.pi
    return MathieuExponent(nu=nu, trace=trace, stable=True)


@dataclass(frozen=True)
class LinearizedModes:
    """Mathieu parameters and secular frequencies of the linearized trap."""

    q: tuple[float, float, float]          # (q_x, q_y, q_z)
    nu: tuple[float, float, float]         # characteristic exponents, NaN if unstable
    stable: tuple[bool, bool, bool]
    omega: tuple[float, float, float] | None = None   # rad/s, when Omega is known

    @property
    def all_stable(self) -> bool:
        return all(self.stable)


def linearize(params: TrapParams, rf_omega: float | None = None) -> LinearizedModes:
    """Mathieu parameters and secular frequencies near the trap center.

    For a5 = 0 the closed form q_z = -q_y = 2 q5 / (sqrt(3) pi) applies; a
    nonzero bias shifts the static curvature through the electrode-potential
    Hessian at the center.  Secular frequencies omega = nu * Omega / 2 are
    attached when the rf frequency is known.
    """
    hyy, _, hzz = five_wire_hessian(0.0, Z0)
    hyy, hzz = float(hyy), float(hzz)
    q = (0.0, -params.q5 * hyy, -params.q5 * hzz)
    a = (params.a_x, params.a_y + params.a5 * hyy, params.a_z + params.a5 * hzz)
    nus, flags = [], []
    for a_i, q_i in zip(a, q):
        res = mathieu_exponent(a_i, q_i)
        nus.append(res.nu)
        flags.append(res.stable)
    omega = None
    if rf_omega is None and params.physical is not None:
        rf_omega = params.physical.rf_omega
    if rf_omega is not None:
        omega = tuple(nu * rf_omega / 2.0 for nu in nus)
    return LinearizedModes(q=q, nu=tuple(nus), stable=tuple(flags), omega=omega)


@dataclass(frozen=True)
class FixedPoints:
    """Stationary points of the axial (y = 0) pseudopotential.

    ``z_u`` is None when the bias has removed the barrier maximum.
    """

    z_s: float
    z_u: float | None


def _axial_pseudo_force_terms(z):
    """dW/dz and dV1/dz on the y = 0 axis, for the fixed-point equation."""
    _, g = five_wire_potential(0.0, z)
    v1p = g[..., 1]
    _, _, hzz = five_wire_hessian(0.0, z)
    return 0.5 * v1p * hzz, v1p


def fixed_points(lam: float, lam_b: float = 0.0) -> FixedPoints:
    """Fixed points of the rescaled axial pseudopotential.

    Solves dV/dz = 0 for V(z) = -lam (z - z0)^2 / 2 + W(z) - lam_b (V1(z) - 1/3)
    where W is the rf-averaged term and V1 the electrode potential on axis.
    The center z_s = z0 is a root for every (lam, lam_b); the barrier root z_u
    is located by a bracket scan on (z_s, 10] followed by bisection and a
    Newton polish.
    """
    if lam < 0.0 or lam_b < 0.0:
        raise ValidationError("lam and lam_b must be non-negative")

    def deriv(z):
        wp, v1p = _axial_pseudo_force_terms(z)
        return -lam * (z - Z0) + wp - lam_b * v1p

    zs = np.geomspace(Z0 * 1.0001, 10.0, 200)
    g = deriv(zs)
    z_u = None
    for i in range(len(zs) - 1):
        if g[i] > 0.0 and g[i + 1] <= 0.0:
            lo, hi = zs[i], zs[i + 1]
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if deriv(mid) > 0.0:
                    lo = mid
                else:
                    hi = mid
            z_u = 0.5 * (lo + hi)
            # Newton polish on the smooth derivative
            for _ in range(4):
                h = 1e-7
                slope = (deriv(z_u + h) - deriv(z_u - h)) / (2.0 * h)
                if slope == 0.0:
                    break
                z_u = z_u - float(deriv(z_u)) / slope
            break
    return FixedPoints(z_s=Z0, z_u=None if z_u is None else float(z_u))


def lambda_from_physical(spec: PhysicalTrapSpec) -> float:
    """Pseudopotential parameter from dimensional quantities.

    lambda = (m omega_x Omega w^2 / (sqrt(2) e U_rf))^2; requires U_rf > 0.
    """
    if spec.u_rf <= 0.0:
        raise ValidationError("lambda is undefined for U_rf = 0")
    return (spec.mass * spec.axial_omega * spec.rf_omega * spec.width**2
            / (math.sqrt(2.0) * spec.charge * spec.u_rf)) ** 2


def be9_spec(u_rf: float, omega_x: float, u_bias: float = 0.0,
             width: float = 50e-6, rf_omega: float = 2 * math.pi * 100e6) -> PhysicalTrapSpec:
    """Convenience constructor for the 9Be+ reference trap."""
    from .constants import BE9_ION_MASS

    return PhysicalTrapSpec(mass=BE9_ION_MASS, charge=ELEMENTARY_CHARGE, width=width,
                            rf_omega=rf_omega, u_rf=u_rf, u_bias=u_bias, omega_x=omega_x)
