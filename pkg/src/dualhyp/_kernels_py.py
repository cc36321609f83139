"""Pure-Python series kernels.

Mirror of ``_kernels.pyx``; the two must perform the same floating-point
operations in the same order so their results agree bit for bit.

Dual numbers are passed as ``(re, du)`` float pairs.  Term k of the series is

    t_k * W_k,   t_{k+1} = t_k * prod(a_i + k) * x / (prod(b_j + k) * (k + 1)),
    W_k = prod(k + s_m)

with t_0 = 1.
"""

import math


def _weight(shifts, k):
    w_re = 1.0
    w_du = 0.0
    for s_re, s_du in shifts:
        f_re = k + s_re
        n_re = w_re * f_re
        w_du = w_re * s_du + w_du * f_re
        w_re = n_re
    return w_re, w_du


def _growth(shifts, k):
    g = 1.0
    for s_re, _ in shifts:
        g *= 1.0 + 1.0 / max(abs(k + s_re), 1.0)
    return g


def _ratio(num, den, x_re, x_du, k):
    # multiplier taking t_k to t_{k+1}
    p_re = x_re
    p_du = x_du
    for a_re, a_du in num:
        f_re = a_re + k
        n_re = p_re * f_re
        p_du = p_re * a_du + p_du * f_re
        p_re = n_re
    q_re = k + 1.0
    q_du = 0.0
    for b_re, b_du in den:
        f_re = b_re + k
        n_re = q_re * f_re
        q_du = q_re * b_du + q_du * f_re
        q_re = n_re
    if q_re == 0.0:
        raise ZeroDivisionError(f"denominator factor vanishes at k={k}")
    r_re = p_re / q_re
    r_du = (p_du * q_re - p_re * q_du) / (q_re * q_re)
    return r_re, r_du


def series_sum(num, den, shifts, x_re, x_du, tol, max_terms, fixed_terms,
               limit_ratio):
    """Sum a weighted dual hypergeometric series.

    Returns ``(s_re, s_du, terms_used, tail_re, tail_du, converged)`` where the
    tails are absolute estimates of the neglected remainder.  With
    ``fixed_terms >= 0`` exactly that many terms are summed and the tail is 0.
    """
    t_re = 1.0
    t_du = 0.0
    w_re, w_du = _weight(shifts, 0)
    u_re = w_re
    u_du = w_du
    s_re = 0.0
    s_du = 0.0
    small = 0
    k = 0
    limit = max_terms if fixed_terms < 0 else fixed_terms
    while k < limit:
        s_re += u_re
        s_du += u_du
        if not (math.isfinite(s_re) and math.isfinite(s_du)):
            raise OverflowError(f"series sum overflowed at term {k}")
        if fixed_terms >= 0 and k + 1 == fixed_terms:
            return s_re, s_du, k + 1, 0.0, 0.0, True
        r_re, r_du = _ratio(num, den, x_re, x_du, k)
        n_re = t_re * r_re
        t_du = t_re * r_du + t_du * r_re
        t_re = n_re
        w_re, w_du = _weight(shifts, k + 1)
        v_re = t_re * w_re
        v_du = t_re * w_du + t_du * w_re
        if abs(u_re) <= tol * abs(s_re) and abs(u_du) <= tol * abs(s_du):
            small += 1
        else:
            small = 0
        k += 1
        if small >= 3 and fixed_terms < 0:
            rho = max(abs(r_re), limit_ratio) * _growth(shifts, k) * (k + 1.0) / k
            if rho < 1.0:
                tail_re = abs(v_re) / (1.0 - rho)
                tail_du = abs(v_du) / (1.0 - rho)
                if tail_re <= tol * abs(s_re) and tail_du <= tol * abs(s_du):
                    return s_re, s_du, k, tail_re, tail_du, True
        u_re = v_re
        u_du = v_du
    if fixed_terms >= 0:
        return s_re, s_du, k, 0.0, 0.0, True
    return s_re, s_du, k, math.inf, math.inf, False


def partial_sums(num, den, x_re, x_du, checkpoints, state=None):
    """Compensated partial sums of the unweighted series at the given term counts.

    Returns ``(sums, state)``; passing ``state`` back resumes where the previous
    call stopped, so checkpoints must keep increasing across calls.
    """
    out = []
    if state is None:
        state = (0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    k, t_re, t_du, s_re, c_re, s_du, c_du = state
    for target in checkpoints:
        while k < target:
            # Neumaier summation, channel by channel
            z = s_re + t_re
            if abs(s_re) >= abs(t_re):
                c_re += (s_re - z) + t_re
            else:
                c_re += (t_re - z) + s_re
            s_re = z
            z = s_du + t_du
            if abs(s_du) >= abs(t_du):
                c_du += (s_du - z) + t_du
            else:
                c_du += (t_du - z) + s_du
            s_du = z
            r_re, r_du = _ratio(num, den, x_re, x_du, k)
            n_re = t_re * r_re
            t_du = t_re * r_du + t_du * r_re
            t_re = n_re
            k += 1
        if not (math.isfinite(s_re) and math.isfinite(s_du)):
            raise OverflowError(f"partial sum overflowed at term {k}")
        out.append((s_re + c_re, s_du + c_du))
    return out, (k, t_re, t_du, s_re, c_re, s_du, c_du)
