"""Trajectory integration, stroboscopic maps, Poincare sections and escape
detection on top of the numba kernels.

The integrator is an adaptive Dormand-Prince 8(5,3) pair with order-7 dense
output; events (section crossings, escape-region entry) are located by
bisection on the dense output.  A fixed-step leapfrog (Strang splitting)
integrator is available as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _kernels as _k
from .errors import ValidationError
from .fields import EscapeRegion, Field

_STATUS_NAMES = {_k.OK: "horizon", _k.ESCAPED: "escaped", _k.STEP_UNDERFLOW: "domain_error"}

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class PhaseState:
    """Point in extended phase space (y, z, p_y, p_z, t)."""

    y: float
    z: float
    p_y: float
    p_z: float
    t: float = 0.0

    @classmethod
    def axial(cls, z: float, p_z: float, t: float = 0.0) -> "PhaseState":
        """1D state on the symmetry axis (y = p_y = 0)."""
        return cls(0.0, z, 0.0, p_z, t)

    def array(self) -> np.ndarray:
        return np.array([self.y, self.z, self.p_y, self.p_z])

    @property
    def axial_view(self) -> tuple[float, float, float]:
        return (self.z, self.p_z, self.t)


def _check_tol(tol):
    if not (1e-14 <= tol <= 1e-6):
        raise ValidationError(f"tolerance {tol} outside the supported range [1e-14, 1e-6]")


def _state4(s) -> np.ndarray:
    if isinstance(s, PhaseState):
        return s.array()
    a = np.asarray(s, dtype=float)
    if a.shape != (4,):
        raise ValidationError("state must be a PhaseState or a length-4 array (y, z, p_y, p_z)")
    return a


def _phase_state(s) -> PhaseState:
    if isinstance(s, PhaseState):
        return s
    a = np.asarray(s, dtype=float).ravel()
    if a.size == 4:
        return PhaseState(a[0], a[1], a[2], a[3], 0.0)
    if a.size == 5:
        return PhaseState(a[0], a[1], a[2], a[3], a[4])
    raise ValidationError("state must be (y, z, p_y, p_z) or (y, z, p_y, p_z, t)")


@dataclass
class Trajectory:
    """Sampled solution of Hamilton's equations.

    ``states`` rows are (y, z, p_y, p_z) at ``times``; rows past an escape or
    domain-error termination are dropped.
    """

    times: np.ndarray
    states: np.ndarray
    status: str
    escape_time: float | None
    n_steps: int
    n_rejected: int

    def __post_init__(self):
        if np.any(np.diff(self.times) <= 0.0):
            raise ValidationError("trajectory times must be strictly increasing")

    @property
    def final_state(self) -> PhaseState:
        y, z, py, pz = self.states[-1]
        return PhaseState(y, z, py, pz, t=self.times[-1])


def integrate(field: Field, s0, horizon: float, tol: float = DEFAULT_TOL,
              times=None, n_samples: int = 500,
              escape: EscapeRegion = EscapeRegion()) -> Trajectory:
    """Integrate from ``s0`` for ``horizon`` time units, sampling densely.

    ``times`` overrides the uniform sample grid.  Termination inside the
    escape region or by step-size underflow is recorded on the returned
    trajectory, never raised.
    """
    _check_tol(tol)
    s = _phase_state(s0)
    if times is None:
        times = np.linspace(s.t, s.t + horizon, n_samples + 1)[1:]
    times = np.asarray(times, dtype=float)
    if times.size == 0 or np.any(np.diff(times) <= 0.0):
        raise ValidationError("sample times must be non-empty and strictly increasing")
    status, t_esc, out, n_ok, stats = _k.run_sampled(
        field.kind, field.params, s.array(), s.t, times, tol, escape.as_array())
    keep = ~np.isnan(out[:, 0])
    return Trajectory(times=times[keep], states=out[keep],
                      status=_STATUS_NAMES[int(status)],
                      escape_time=None if math.isnan(t_esc) else float(t_esc),
                      n_steps=int(stats[0]), n_rejected=int(stats[1]))


@dataclass(frozen=True)
class MapResult:
    """Result of a stroboscopic-map application; ``state`` is None on escape."""

    state: PhaseState | None
    escaped: bool
    escape_time: float | None = None


def stroboscopic_map(field: Field, s, n_periods: int = 1,
                     tol: float = 1e-11, escape: EscapeRegion = EscapeRegion()) -> MapResult:
    """Advance a state by exactly ``n_periods`` drive periods.

    The input time fixes the stroboscopic phase; the drive period is pi in
    scaled units.
    """
    if not field.time_dependent:
        raise ValidationError("stroboscopic map requires a periodically driven field")
    _check_tol(tol)
    s = _phase_state(s)
    period = field.drive_period
    status, t_esc, rows, state, stats = _k.run_strobo(
        field.kind, field.params, s.array(), s.t, int(n_periods), period, tol,
        escape.as_array(), np.zeros(5), _k.ACTION_NONE)
    if status != _k.OK or rows.shape[0] < n_periods:
        return MapResult(state=None, escaped=True,
                         escape_time=None if math.isnan(t_esc) else float(t_esc))
    y, z, py, pz = state
    return MapResult(state=PhaseState(y, z, py, pz, t=s.t + n_periods * period),
                     escaped=False)


@dataclass
class OrbitCrossings:
    """Section returns of one orbit.

    ``return_time[k]`` is the interval since the previous crossing; the
    launch state lies on the section, so the first entry is a genuine return.
    """

    orbit_id: int
    z: np.ndarray
    p_z: np.ndarray
    t_cross: np.ndarray
    return_time: np.ndarray
    winding: np.ndarray | None
    action: np.ndarray | None
    status: str
    escape_time: float | None

    @property
    def n(self) -> int:
        return self.z.size


@dataclass
class Section:
    """Poincare or stroboscopic section of an ensemble of orbits."""

    orbits: list[OrbitCrossings]
    crossing: str
    energy: float | None = None
    meta: dict = dc_field(default_factory=dict)

    def all_points(self) -> np.ndarray:
        """Stacked (z, p_z) over all orbits."""
        if not self.orbits:
            return np.empty((0, 2))
        return np.concatenate([np.column_stack([o.z, o.p_z]) for o in self.orbits])


def _orbit_from_rows(i, rows, t0, status, t_esc, winding=False, action=False) -> OrbitCrossings:
    t_cross = rows[:, 2]
    prev = np.concatenate([[t0], t_cross[:-1]])
    return OrbitCrossings(
        orbit_id=i, z=rows[:, 0].copy(), p_z=rows[:, 1].copy(), t_cross=t_cross.copy(),
        return_time=t_cross - prev,
        winding=rows[:, 3].copy() if winding else None,
        action=rows[:, 4].copy() if action else None,
        status=_STATUS_NAMES[int(status)],
        escape_time=None if math.isnan(t_esc) else float(t_esc))


def poincare_section(field: Field, states0, energy: float | None = None,
                     max_crossings: int = 200, horizon: float = 1e6,
                     tol: float = DEFAULT_TOL, escape: EscapeRegion = EscapeRegion(),
                     t0: float = 0.0) -> Section:
    """Section y = 0, crossed with p_y > 0, for an ensemble of initial states.

    For autonomous (pseudopotential) fields all members must lie on the same
    energy shell when ``energy`` is given (checked to 1e-10).  Crossings are
    refined on the dense output to |y| < 1e-10; per-point return times are
    recorded for the shell-volume quadrature.  A member that never crosses
    within the horizon yields an empty orbit, not an error.
    """
    _check_tol(tol)
    y0s = np.asarray([_state4(s) for s in states0], dtype=float)
    if energy is not None:
        if field.time_dependent:
            raise ValidationError("energy shells are defined for autonomous fields only")
        for i in range(y0s.shape[0]):
            e = field.energy(y0s[i])
            if abs(e - energy) > 1e-10 * max(1.0, abs(energy)):
                raise ValidationError(
                    f"ensemble member {i} is off the energy shell: E = {e!r}, expected {energy!r}")
    statuses, t_escs, counts, crossings = _k.ensemble_section(
        field.kind, field.params, y0s, t0, t0 + horizon, int(max_crossings), tol,
        escape.as_array())
    orbits = [_orbit_from_rows(i, crossings[i, : counts[i]], t0, statuses[i], t_escs[i])
              for i in range(y0s.shape[0])]
    return Section(orbits=orbits, crossing="y=0,p_y>0", energy=energy,
                   meta={"tol": tol, "horizon": horizon, "max_crossings": max_crossings})


def stroboscopic_section(field: Field, states0, n_periods: int = 400,
                         tol: float = 1e-11, escape: EscapeRegion = EscapeRegion(),
                         phase: float = 0.0, winding_ref=None,
                         action: bool = False) -> Section:
    """Stroboscopic section at t = phase (mod drive period) for an ensemble.

    Each state is launched at t = phase and recorded once per drive period.
    Optional winding/action accumulation serves the torus-invariant
    computations.
    """
    if not field.time_dependent:
        raise ValidationError("stroboscopic sections require a periodically driven field")
    _check_tol(tol)
    period = field.drive_period
    wref = np.zeros(5)
    if winding_ref is not None:
        zc, pc, sz, sp = winding_ref
        wref = np.array([zc, pc, sz, sp, 1.0])
    mode = _k.ACTION_LAGRANGE if action else _k.ACTION_NONE
    orbits = []
    for i, s in enumerate(states0):
        y0 = _state4(s)
        status, t_esc, rows, _, stats = _k.run_strobo(
            field.kind, field.params, y0, phase, int(n_periods), period, tol,
            escape.as_array(), wref, mode)
        orbits.append(_orbit_from_rows(i, rows, phase, status, t_esc,
                                       winding=winding_ref is not None, action=action))
    return Section(orbits=orbits, crossing=f"t={phase!r} (mod pi)", energy=None,
                   meta={"tol": tol, "n_periods": n_periods})


def detect_escape(field: Field, s0, horizon: float, tol: float = DEFAULT_TOL,
                  escape: EscapeRegion = EscapeRegion()) -> float | None:
    """Earliest time the trajectory enters the escape region, None if bounded."""
    _check_tol(tol)
    s = _phase_state(s0)
    status, t_esc, _, _ = _k.run_escape(field.kind, field.params, s.array(), s.t,
                                        s.t + horizon, tol, escape.as_array())
    if status == _k.ESCAPED:
        return float(t_esc)
    return None


def leapfrog(field: Field, s0, horizon: float, dt: float = 1e-3,
             n_samples: int = 500) -> Trajectory:
    """Fixed-step Strang-splitting (kick-drift-kick) cross-check integrator.

    Second order and symplectic for the separable Hamiltonians used here;
    intended for verification against the adaptive integrator, not for
    production event location.
    """
    s = _phase_state(s0)
    n_steps = int(math.ceil(horizon / dt))
    dt = horizon / n_steps
    stride = max(1, n_steps // n_samples)
    state = s.array()
    t = s.t
    times, states = [], []
    acc = field.acceleration(state, t)
    for k in range(n_steps):
        state[2:] += 0.5 * dt * acc
        state[:2] += dt * state[2:]
        t = s.t + (k + 1) * dt
        acc = field.acceleration(state, t)
        state[2:] += 0.5 * dt * acc
        if (k + 1) % stride == 0 or k == n_steps - 1:
            times.append(t)
            states.append(state.copy())
    return Trajectory(times=np.array(times), states=np.array(states), status="horizon",
                      escape_time=None, n_steps=n_steps, n_rejected=0)
