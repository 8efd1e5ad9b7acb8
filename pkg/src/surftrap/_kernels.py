"""Numba kernels: DOP853 stepping with dense output, trap force fields, and
per-trajectory drivers (escape detection, stroboscopic maps, section
crossings, sampled trajectories).

All dynamics run in the 4-state (y, z, p_y, p_z); one-dimensional problems
are the y = p_y = 0 slice, which is invariant for every field here.  Time is
accumulated with compensated summation so that stroboscopic phases stay
sharp over tens of thousands of drive periods.
"""

import math

import numpy as np
from numba import njit, prange

from . import _dop853_tableau as _tab

Z0 = math.sqrt(3.0) / 2.0

# field kinds
FIELD_RF = 0             # params: a_x, q5, a5
FIELD_PSEUDO = 1         # params: azz, q5sq, a5  (scaled form: -lam, 1, -lam_b)
FIELD_MATHIEU = 2        # params: a, q   (linear, both channels)
FIELD_HARMONIC = 3       # params: wy2, wz2, cy, cz
FIELD_RF_TICKLE = 4      # params: a_x, q5, a5, fy, fz, nu_d, phi0
FIELD_PSEUDO_TICKLE = 5  # params: azz, q5sq, a5, fy, fz, nu_d, phi0

# trajectory status codes
OK = 0
ESCAPED = 1
STEP_UNDERFLOW = 2

# action accumulation modes (integrand of the phase-space line integral)
ACTION_NONE = 0
ACTION_PDQ = 1       # |p|^2          : integral of p dq, time-independent fields
ACTION_LAGRANGE = 2  # |p|^2 - H      : includes the extended pair (t, -H)

_A = _tab.A
_B = _tab.B
_C = _tab.C
_E3 = _tab.E3
_E5 = _tab.E5
_D = _tab.D

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 6.0
_ERR_EXP = -1.0 / 8.0
# Requested tolerances are tightened internally so that long-horizon energy
# drift stays near tol * n_steps / 5 (an adaptive RK is not symplectic).
_TOL_TIGHTEN = 0.2

_EPS = 2.220446049250313e-16

# 8-point Gauss-Legendre rule on [0, 1], for per-step action quadrature
_GL_X = np.array([0.019855071751231856, 0.10166676129318664, 0.2372337950418355,
                  0.40828267875217511, 0.59171732124782489, 0.7627662049581645,
                  0.89833323870681336, 0.98014492824876814])
_GL_W = np.array([0.05061426814518813, 0.11119051722668724, 0.15685332293894364,
                  0.18134189168918099, 0.18134189168918099, 0.15685332293894364,
                  0.11119051722668724, 0.05061426814518813])


@njit(cache=True, inline="always")
def _five_wire_grad(y, z):
    gy = 0.0
    gz = 0.0
    # electrode edges at +-1/2 and +-3/2 with alternating arctan signs
    u = y - 0.5
    d = u * u + z * z
    gy += z / d
    gz -= u / d
    u = y - 1.5
    d = u * u + z * z
    gy -= z / d
    gz += u / d
    u = y + 1.5
    d = u * u + z * z
    gy += z / d
    gz -= u / d
    u = y + 0.5
    d = u * u + z * z
    gy -= z / d
    gz += u / d
    return gy / math.pi, gz / math.pi


@njit(cache=True, inline="always")
def _five_wire_value(y, z):
    v = math.atan2(y - 0.5, z) - math.atan2(y - 1.5, z)
    v += math.atan2(y + 1.5, z) - math.atan2(y + 0.5, z)
    return v / math.pi


@njit(cache=True, inline="always")
def _five_wire_hess(y, z):
    hyy = 0.0
    hyz = 0.0
    zz = z * z
    u = y - 0.5
    d = u * u + zz
    d2 = d * d
    hyy += -2.0 * z * u / d2
    hyz += (u * u - zz) / d2
    u = y - 1.5
    d = u * u + zz
    d2 = d * d
    hyy -= -2.0 * z * u / d2
    hyz -= (u * u - zz) / d2
    u = y + 1.5
    d = u * u + zz
    d2 = d * d
    hyy += -2.0 * z * u / d2
    hyz += (u * u - zz) / d2
    u = y + 0.5
    d = u * u + zz
    d2 = d * d
    hyy -= -2.0 * z * u / d2
    hyz -= (u * u - zz) / d2
    return hyy / math.pi, hyz / math.pi


@njit(cache=True)
def _rhs(kind, params, t, s, out):
    y = s[0]
    z = s[1]
    out[0] = s[2]
    out[1] = s[3]
    if kind == FIELD_RF or kind == FIELD_RF_TICKLE:
        a_x = params[0]
        drive = params[2] - 2.0 * params[1] * math.cos(2.0 * t)
        gy, gz = _five_wire_grad(y, z)
        ay = 0.5 * a_x * y - drive * gy
        az = 0.5 * a_x * (z - Z0) - drive * gz
        if kind == FIELD_RF_TICKLE:
            c = math.cos(params[5] * t + params[6])
            ay += params[3] * c
            az += params[4] * c
        out[2] = ay
        out[3] = az
    elif kind == FIELD_PSEUDO or kind == FIELD_PSEUDO_TICKLE:
        azz = params[0]
        q5sq = params[1]
        a5 = params[2]
        gy, gz = _five_wire_grad(y, z)
        hyy, hyz = _five_wire_hess(y, z)
        # grad of (1/4)|grad V5w|^2 is (1/2) H . grad V5w  (hzz = -hyy)
        gay = 0.5 * (gy * hyy + gz * hyz)
        gaz = 0.5 * (gy * hyz - gz * hyy)
        ay = -(azz * y + q5sq * gay + a5 * gy)
        az = -(azz * (z - Z0) + q5sq * gaz + a5 * gz)
        if kind == FIELD_PSEUDO_TICKLE:
            c = math.cos(params[5] * t + params[6])
            ay += params[3] * c
            az += params[4] * c
        out[2] = ay
        out[3] = az
    elif kind == FIELD_MATHIEU:
        w = -(params[0] - 2.0 * params[1] * math.cos(2.0 * t))
        out[2] = w * y
        out[3] = w * z
    else:  # FIELD_HARMONIC
        out[2] = -params[0] * (y - params[2])
        out[3] = -params[1] * (z - params[3])


@njit(cache=True)
def potential_energy(kind, params, t, s):
    """Instantaneous potential energy of a state (kinetic part excluded)."""
    y = s[0]
    z = s[1]
    if kind == FIELD_RF or kind == FIELD_RF_TICKLE:
        a_x = params[0]
        drive = params[2] - 2.0 * params[1] * math.cos(2.0 * t)
        v = -0.25 * a_x * (y * y + (z - Z0) ** 2) + drive * _five_wire_value(y, z)
        if kind == FIELD_RF_TICKLE:
            c = math.cos(params[5] * t + params[6])
            v -= (params[3] * y + params[4] * z) * c
        return v
    if kind == FIELD_PSEUDO or kind == FIELD_PSEUDO_TICKLE:
        gy, gz = _five_wire_grad(y, z)
        v = 0.5 * params[0] * (y * y + (z - Z0) ** 2)
        v += params[1] * 0.25 * (gy * gy + gz * gz)
        v += params[2] * (_five_wire_value(y, z) - 1.0 / 3.0)
        if kind == FIELD_PSEUDO_TICKLE:
            c = math.cos(params[5] * t + params[6])
            v -= (params[3] * y + params[4] * z) * c
        return v
    if kind == FIELD_MATHIEU:
        w = params[0] - 2.0 * params[1] * math.cos(2.0 * t)
        return 0.5 * w * (y * y + z * z)
    return 0.5 * params[0] * (y - params[2]) ** 2 + 0.5 * params[1] * (z - params[3]) ** 2


@njit(cache=True)
def total_energy(kind, params, t, s):
    return 0.5 * (s[2] * s[2] + s[3] * s[3]) + potential_energy(kind, params, t, s)


@njit(cache=True, inline="always")
def _escape_indicator(s, esc):
    """Positive once the state is inside the escape region.

    esc = (z_lo, z_hi, y_abs); the region is z < z_lo or z > z_hi or |y| > y_abs.
    """
    g = esc[0] - s[1]
    g2 = s[1] - esc[1]
    if g2 > g:
        g = g2
    g3 = abs(s[0]) - esc[2]
    if g3 > g:
        g = g3
    return g


@njit(cache=True)
def _initial_step(kind, params, t0, y0, f0, tol, t_span):
    d0 = 0.0
    d1 = 0.0
    for i in range(4):
        sc = tol + tol * abs(y0[i])
        d0 += (y0[i] / sc) ** 2
        d1 += (f0[i] / sc) ** 2
    d0 = math.sqrt(d0 / 4.0)
    d1 = math.sqrt(d1 / 4.0)
    if d0 < 1e-5 or d1 < 1e-5:
        h0 = 1e-6
    else:
        h0 = 0.01 * d0 / d1
    y1 = np.empty(4)
    f1 = np.empty(4)
    for i in range(4):
        y1[i] = y0[i] + h0 * f0[i]
    _rhs(kind, params, t0 + h0, y1, f1)
    d2 = 0.0
    for i in range(4):
        sc = tol + tol * abs(y0[i])
        d2 += ((f1[i] - f0[i]) / sc) ** 2
    d2 = math.sqrt(d2 / 4.0) / h0
    dm = max(d1, d2)
    if dm <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / dm) ** (1.0 / 8.0)
    h = min(100.0 * h0, h1)
    if h > t_span:
        h = t_span
    return h


@njit(cache=True)
def _attempt_step(kind, params, t, y, h, K, y_new, tol):
    """One DOP853 stage sweep.  Returns the scaled error norm."""
    tmp = np.empty(4)
    for s in range(1, 12):
        for i in range(4):
            acc = 0.0
            for j in range(s):
                acc += _A[s, j] * K[j, i]
            tmp[i] = y[i] + h * acc
        _rhs(kind, params, t + _C[s] * h, tmp, K[s])
    for i in range(4):
        acc = 0.0
        for j in range(12):
            acc += _B[j] * K[j, i]
        y_new[i] = y[i] + h * acc
    _rhs(kind, params, t + h, y_new, K[12])
    err5_2 = 0.0
    err3_2 = 0.0
    for i in range(4):
        sc = tol + tol * max(abs(y[i]), abs(y_new[i]))
        e5 = 0.0
        e3 = 0.0
        for j in range(13):
            e5 += _E5[j] * K[j, i]
            e3 += _E3[j] * K[j, i]
        e5 /= sc
        e3 /= sc
        err5_2 += e5 * e5
        err3_2 += e3 * e3
    if err5_2 == 0.0 and err3_2 == 0.0:
        return 0.0
    denom = err5_2 + 0.01 * err3_2
    return abs(h) * err5_2 / math.sqrt(denom * 4.0)


@njit(cache=True)
def _dense_coeffs(kind, params, t, y, h, K_ext, y_new, F):
    """Order-7 dense-output coefficients for the accepted step (3 extra stages)."""
    tmp = np.empty(4)
    for s in range(13, 16):
        for i in range(4):
            acc = 0.0
            for j in range(s):
                acc += _A[s, j] * K_ext[j, i]
            tmp[i] = y[i] + h * acc
        _rhs(kind, params, t + _C[s] * h, tmp, K_ext[s])
    for i in range(4):
        dy = y_new[i] - y[i]
        F[0, i] = dy
        F[1, i] = h * K_ext[0, i] - dy
        F[2, i] = 2.0 * dy - h * (K_ext[12, i] + K_ext[0, i])
        for r in range(4):
            acc = 0.0
            for j in range(16):
                acc += _D[r, j] * K_ext[j, i]
            F[3 + r, i] = h * acc
    return


@njit(cache=True, inline="always")
def _dense_eval(F, y_old, x, out):
    for i in range(4):
        acc = 0.0
        for rev in range(7):
            acc += F[6 - rev, i]
            if rev % 2 == 0:
                acc *= x
            else:
                acc *= 1.0 - x
        out[i] = y_old[i] + acc
    return


@njit(cache=True)
def _action_integrand(kind, params, mode, t, s):
    v = s[2] * s[2] + s[3] * s[3]
    if mode == ACTION_LAGRANGE:
        v -= 0.5 * (s[2] * s[2] + s[3] * s[3]) + potential_energy(kind, params, t, s)
    return v


@njit(cache=True)
def _step_action(kind, params, mode, t, h, x_stop, F, y_old, work):
    """Gauss-Legendre quadrature of the action integrand over one step segment."""
    acc = 0.0
    for g in range(8):
        x = x_stop * _GL_X[g]
        _dense_eval(F, y_old, x, work)
        acc += _GL_W[g] * _action_integrand(kind, params, mode, t + x * h, work)
    return acc * x_stop * h


@njit(cache=True)
def _refine_escape(F, y_old, esc, x_hi, out):
    """Bisect the dense output for the first entry into the escape region."""
    lo = 0.0
    hi = x_hi
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        _dense_eval(F, y_old, mid, out)
        if _escape_indicator(out, esc) >= 0.0:
            hi = mid
        else:
            lo = mid
    _dense_eval(F, y_old, hi, out)
    return hi


@njit(cache=True)
def advance(kind, params, state, t0, t_end, tol, esc,
            sample_times, sample_out,
            record_cross, max_cross, cross_out,
            winding_ref, action_mode, stats, h_init):
    """Core adaptive-integration driver.

    Integrates ``state`` (modified in place) from t0 to t_end subject to the
    escape region ``esc``.  Optional outputs:

    * ``sample_times``/``sample_out``: states interpolated at the given
      strictly increasing times (dense output).
    * ``record_cross``: record crossings of y = 0 with p_y > 0 into
      ``cross_out`` rows (z, p_z, t_cross, winding, action) up to
      ``max_cross``.
    * ``winding_ref``: (zc, pc, sz, sp, enabled); accumulates the continuous
      winding angle of (z, p_z) about (zc, pc) along the trajectory.
    * ``action_mode``: accumulate the phase-space line integral per step.

    Returns (status, t_reached, n_cross, escape_time, winding, action, h_last).
    ``stats`` accumulates (n_attempted_steps, n_rejected).
    """
    tol = tol * _TOL_TIGHTEN
    t = t0
    t_comp = 0.0
    n_sample = sample_times.shape[0]
    i_sample = 0
    n_cross = 0
    esc_time = math.nan

    K = np.empty((16, 4))
    F = np.empty((7, 4))
    y_new = np.empty(4)
    work = np.empty(4)

    _rhs(kind, params, t, state, K[0])

    if _escape_indicator(state, esc) >= 0.0:
        return ESCAPED, t, 0, t, 0.0, 0.0, 0.0

    wind = 0.0
    action = 0.0
    w_en = winding_ref[4] != 0.0
    ux = 0.0
    uy = 0.0
    if w_en:
        ux = (state[1] - winding_ref[0]) / winding_ref[2]
        uy = (state[3] - winding_ref[1]) / winding_ref[3]

    if h_init > 0.0:
        h = min(h_init, t_end - t0)
    else:
        h = _initial_step(kind, params, t, state, K[0], tol, t_end - t0)
    h_free = h
    rejected_last = False
    eps_t = 32.0 * _EPS * max(abs(t_end), 1.0)

    while t < t_end:
        if t_end - t <= eps_t:
            break
        if h > t_end - t:
            h = t_end - t
        if h < 16.0 * _EPS * max(abs(t), 1.0):
            return STEP_UNDERFLOW, t, n_cross, esc_time, wind, action, h_free

        err = _attempt_step(kind, params, t, state, h, K, y_new, tol)
        stats[0] += 1
        if err > 1.0:
            stats[1] += 1
            fac = _SAFETY * err ** _ERR_EXP
            if fac < _MIN_FACTOR:
                fac = _MIN_FACTOR
            h *= fac
            rejected_last = True
            continue

        need_dense = (n_sample > i_sample) or record_cross or (action_mode != ACTION_NONE)
        escaped_now = _escape_indicator(y_new, esc) >= 0.0
        if need_dense or escaped_now:
            _dense_coeffs(kind, params, t, state, h, K, y_new, F)

        x_stop = 1.0
        status_now = OK
        if escaped_now:
            x_stop = _refine_escape(F, state, esc, 1.0, work)
            esc_time = t + x_stop * h
            status_now = ESCAPED

        # section crossings of y = 0 with p_y > 0 inside (t, t + x_stop h]
        if record_cross and n_cross < max_cross:
            nsub = 4
            ya = state[0]
            xa = 0.0
            for k in range(1, nsub + 1):
                xb = x_stop * k / nsub
                if xb <= xa:
                    continue
                _dense_eval(F, state, xb, work)
                yb = work[0]
                if (ya < 0.0) and (yb >= 0.0):
                    lo = xa
                    hi = xb
                    for _ in range(80):
                        mid = 0.5 * (lo + hi)
                        _dense_eval(F, state, mid, work)
                        if work[0] < 0.0:
                            lo = mid
                        else:
                            hi = mid
                        if work[0] >= 0.0 and work[0] < 1e-10:
                            break
                    _dense_eval(F, state, hi, work)
                    if work[2] > 0.0 and n_cross < max_cross:
                        wc = wind
                        if w_en:
                            vx = (work[1] - winding_ref[0]) / winding_ref[2]
                            vy = (work[3] - winding_ref[1]) / winding_ref[3]
                            wc = wind + math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
                        ac = action
                        if action_mode != ACTION_NONE:
                            ac = action + _step_action(kind, params, action_mode, t, h, hi, F, state, work)
                        cross_out[n_cross, 0] = work[1]
                        cross_out[n_cross, 1] = work[3]
                        cross_out[n_cross, 2] = t + hi * h
                        cross_out[n_cross, 3] = wc
                        cross_out[n_cross, 4] = ac
                        n_cross += 1
                        _dense_eval(F, state, xb, work)
                ya = yb
                xa = xb

        # interpolated samples at requested times
        t_new_tentative = t + x_stop * h
        while i_sample < n_sample and sample_times[i_sample] <= t_new_tentative + eps_t:
            ts = sample_times[i_sample]
            if ts >= t:
                x = (ts - t) / h
                if x > 1.0:
                    x = 1.0
                _dense_eval(F, state, x, sample_out[i_sample])
            else:
                for i in range(4):
                    sample_out[i_sample, i] = state[i]
            i_sample += 1

        if action_mode != ACTION_NONE:
            action += _step_action(kind, params, action_mode, t, h, x_stop, F, state, work)

        if w_en:
            _dense_eval(F, state, x_stop, work)
            vx = (work[1] - winding_ref[0]) / winding_ref[2]
            vy = (work[3] - winding_ref[1]) / winding_ref[3]
            wind += math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
            ux = vx
            uy = vy

        if status_now == ESCAPED:
            _dense_eval(F, state, x_stop, work)
            for i in range(4):
                state[i] = work[i]
            return ESCAPED, esc_time, n_cross, esc_time, wind, action, h_free

        # accept
        for i in range(4):
            state[i] = y_new[i]
            K[0, i] = K[12, i]
        # compensated time accumulation
        yk = h - t_comp
        tt = t + yk
        t_comp = (tt - t) - yk
        t = tt

        if record_cross and n_cross >= max_cross:
            return OK, t, n_cross, esc_time, wind, action, h_free

        if err == 0.0:
            fac = _MAX_FACTOR
        else:
            fac = _SAFETY * err ** _ERR_EXP
            if fac > _MAX_FACTOR:
                fac = _MAX_FACTOR
        if rejected_last and fac > 1.0:
            fac = 1.0
        h *= fac
        h_free = h
        rejected_last = False

    # flush samples that fall inside the sub-resolution gap at the endpoint
    while i_sample < n_sample and sample_times[i_sample] <= t + eps_t:
        for i in range(4):
            sample_out[i_sample, i] = state[i]
        i_sample += 1

    return OK, t, n_cross, esc_time, wind, action, h_free


@njit(cache=True, inline="always")
def _no_times():
    return np.empty(0)


@njit(cache=True, inline="always")
def _no_out():
    return np.empty((0, 4))


@njit(cache=True, inline="always")
def _no_cross():
    return np.empty((0, 5))


@njit(cache=True, inline="always")
def _no_wind():
    return np.zeros(5)


@njit(cache=True)
def run_escape(kind, params, y0, t0, t_end, tol, esc):
    """Escape time of a single trajectory; NaN if still bounded at t_end."""
    state = y0.copy()
    stats = np.zeros(2, dtype=np.int64)
    status, _, _, t_esc, _, _, _ = advance(kind, params, state, t0, t_end, tol, esc,
                                           _no_times(), _no_out(), False, 0, _no_cross(),
                                           _no_wind(), ACTION_NONE, stats, 0.0)
    return status, t_esc, state, stats


@njit(cache=True)
def run_sampled(kind, params, y0, t0, times, tol, esc):
    """States interpolated at the given times; rows after escape hold NaN."""
    state = y0.copy()
    out = np.full((times.shape[0], 4), np.nan)
    stats = np.zeros(2, dtype=np.int64)
    status, t_r, _, t_esc, _, _, _ = advance(kind, params, state, t0, times[-1], tol, esc,
                                             times, out, False, 0, _no_cross(),
                                             _no_wind(), ACTION_NONE, stats, 0.0)
    n_ok = times.shape[0]
    if status != OK:
        n_ok = 0
        for k in range(times.shape[0]):
            if times[k] <= t_r:
                n_ok = k + 1
            else:
                break
    return status, t_esc, out, n_ok, stats


@njit(cache=True)
def run_section(kind, params, y0, t0, t_end, max_cross, tol, esc, winding_ref, action_mode):
    """Crossings of y = 0 (p_y > 0): rows (z, p_z, t_cross, winding, action)."""
    state = y0.copy()
    cross = np.empty((max_cross, 5))
    stats = np.zeros(2, dtype=np.int64)
    status, _, n_cross, t_esc, _, _, _ = advance(kind, params, state, t0, t_end, tol, esc,
                                                 _no_times(), _no_out(), True, max_cross, cross,
                                                 winding_ref, action_mode, stats, 0.0)
    return status, t_esc, cross[:n_cross], state, stats


@njit(cache=True)
def run_strobo(kind, params, y0, t0, n_periods, period, tol, esc, winding_ref, action_mode):
    """Stroboscopic samples at t0 + k*period, k = 1..n_periods.

    Returns rows (z, p_z, t, winding, action); stops early on escape.
    """
    state = y0.copy()
    out = np.empty((n_periods, 5))
    stats = np.zeros(2, dtype=np.int64)
    t = t0
    t_comp = 0.0
    wind_total = 0.0
    action_total = 0.0
    h_carry = 0.0
    n_done = 0
    status = OK
    t_esc = math.nan
    for k in range(n_periods):
        # advance exactly one drive period (endpoint hit by step clipping)
        yk = period - t_comp
        tt = t + yk
        t_comp = (tt - t) - yk
        status, _, _, t_esc, wind, action, h_last = advance(
            kind, params, state, t, tt, tol, esc,
            _no_times(), _no_out(), False, 0, _no_cross(),
            winding_ref, action_mode, stats, h_carry)
        h_carry = h_last
        wind_total += wind
        action_total += action
        if status != OK:
            break
        t = tt
        out[k, 0] = state[1]
        out[k, 1] = state[3]
        out[k, 2] = t
        out[k, 3] = wind_total
        out[k, 4] = action_total
        n_done = k + 1
    return status, t_esc, out[:n_done], state, stats


@njit(cache=True)
def mathieu_monodromy(a, q, tol):
    """Monodromy matrix over one drive period of the linear Mathieu system.

    Both fundamental columns ride in the (y, z) channels of one integration.
    """
    params = np.array([a, q, 0.0, 0.0, 0.0, 0.0, 0.0])
    esc = np.array([-1e300, 1e300, 1e300])
    state = np.array([1.0, 0.0, 0.0, 1.0])
    stats = np.zeros(2, dtype=np.int64)
    advance(FIELD_MATHIEU, params, state, 0.0, math.pi, tol, esc,
            _no_times(), _no_out(), False, 0, _no_cross(),
            _no_wind(), ACTION_NONE, stats, 0.0)
    m = np.empty((2, 2))
    m[0, 0] = state[0]
    m[1, 0] = state[2]
    m[0, 1] = state[1]
    m[1, 1] = state[3]
    return m


@njit(cache=True, parallel=True)
def ensemble_escape(kind, params, y0s, t0s, t_end, tol, esc):
    """Escape times for an ensemble; deterministic per-index outputs."""
    n = y0s.shape[0]
    t_escs = np.full(n, np.nan)
    statuses = np.zeros(n, dtype=np.int64)
    for i in prange(n):
        st, t_esc, _, _ = run_escape(kind, params, y0s[i], t0s[i], t_end, tol, esc)
        statuses[i] = st
        t_escs[i] = t_esc
    return statuses, t_escs


@njit(cache=True, parallel=True)
def ensemble_tickle_escape(kind, base_params, y0s, t0s, phi0s, t_end, tol, esc):
    """Escape times where each member carries its own tickle phase phi0."""
    n = y0s.shape[0]
    t_escs = np.full(n, np.nan)
    statuses = np.zeros(n, dtype=np.int64)
    for i in prange(n):
        params = base_params.copy()
        params[6] = phi0s[i]
        st, t_esc, _, _ = run_escape(kind, params, y0s[i], t0s[i], t_end, tol, esc)
        statuses[i] = st
        t_escs[i] = t_esc
    return statuses, t_escs


@njit(cache=True, parallel=True)
def ensemble_section(kind, params, y0s, t0, t_end, max_cross, tol, esc):
    """Section crossings for an ensemble, flattened with per-orbit counts."""
    n = y0s.shape[0]
    crossings = np.full((n, max_cross, 5), np.nan)
    counts = np.zeros(n, dtype=np.int64)
    statuses = np.zeros(n, dtype=np.int64)
    t_escs = np.full(n, np.nan)
    for i in prange(n):
        st, t_esc, cr, _, _ = run_section(kind, params, y0s[i], t0, t_end,
                                          max_cross, tol, esc, _no_wind(), ACTION_NONE)
        statuses[i] = st
        t_escs[i] = t_esc
        counts[i] = cr.shape[0]
        for k in range(cr.shape[0]):
            for j in range(5):
                crossings[i, k, j] = cr[k, j]
    return statuses, t_escs, counts, crossings
