"""
Chebyshev polynomials evaluated through their three-term recurrence.
"""
from typing import Tuple

import numpy as np


# magnitude at which the scaled recurrence renormalizes its state
RESCALE_THRESHOLD = 1e100


def chebyshev_u(n: int, x: float) -> float:
    """
    Chebyshev polynomial of the second kind U_n(x).

    Uses U_{k+1} = 2xU_k - U_{k-1} seeded with U_{-2} = -1 and U_{-1} = 0, so the
    result is valid for every real x, |x| > 1 included.

    Args:
        n: Order of the polynomial, at least -2.
        x: Point of evaluation.

    Returns:
        U_n(x).
    """
    assert n >= -2, 'the order of U_n must be at least -2'

    if n == -2:
        return -1.0
    u_prev, u_curr = 0.0, 1.0
    for _ in range(n):
        u_prev, u_curr = u_curr, 2*x*u_curr - u_prev

    return u_curr if n >= 0 else u_prev


def chebyshev_t(n: int, x: float) -> float:
    """
    Chebyshev polynomial of the first kind T_n(x), seeded with T_0 = 1 and T_1 = x.

    Args:
        n: Order of the polynomial, non-negative.
        x: Point of evaluation.

    Returns:
        T_n(x).
    """
    assert n >= 0, 'the order of T_n must be non-negative'

    if n == 0:
        return 1.0
    t_prev, t_curr = 1.0, x
    for _ in range(n - 1):
        t_prev, t_curr = t_curr, 2*x*t_curr - t_prev

    return t_curr


def chebyshev_u_scaled(n: int, x: float) -> Tuple[float, float, float, float]:
    """
    The triplet U_n(x), U_{n-1}(x), U_{n-2}(x) sharing one exponent.

    The recurrence is renormalized whenever the leading value exceeds
    RESCALE_THRESHOLD, so arguments far outside [-1, 1] do not overflow.

    Args:
        n: Order of the leading polynomial, non-negative.
        x: Point of evaluation.

    Returns:
        u_n, u_{n-1}, u_{n-2} and log_scale such that U_j(x) = u_j*exp(log_scale).
    """
    assert n >= 0, 'the order of the scaled triplet must be non-negative'

    u_nm2, u_nm1, u_n = -1.0, 0.0, 1.0
    log_scale = 0.0
    for _ in range(n):
        u_nm2, u_nm1, u_n = u_nm1, u_n, 2*x*u_n - u_nm1
        magnitude = abs(u_n)
        if magnitude > RESCALE_THRESHOLD:
            u_nm2, u_nm1, u_n = u_nm2/magnitude, u_nm1/magnitude, u_n/magnitude
            log_scale += np.log(magnitude)

    return u_n, u_nm1, u_nm2, log_scale
