"""
Standard quantum mechanics (alpha = 2, D = 1) for N rectangular barriers, built from
2x2 transfer matrices and independent of the Chebyshev composition.
"""
from typing import Optional, Tuple

import numpy as np

from sfqmtunnel.params import ModelParams
from sfqmtunnel.utils.differentiation import FdConfig, settled_phase_derivative


def _scaled_barrier_matrix(k: float, q: float, b: float) -> np.ndarray:
    """
    Transfer matrix of one barrier of width b multiplied by exp(-qb).
    """
    decay = np.exp(-2*q*b)
    ch, sh = 0.5*(1 + decay), 0.5*(1 - decay)
    diff = (q**2 - k**2)/(2*k*q)
    total = (k**2 + q**2)/(2*k*q)

    return np.array([[ch + 1j*diff*sh, 1j*total*sh],
                     [-1j*total*sh, ch - 1j*diff*sh]])


def _scaled_total(p: ModelParams, energy: float) -> Tuple[np.ndarray, float]:
    k = np.sqrt(energy)
    q = np.sqrt(p.v_height - energy)
    barrier = _scaled_barrier_matrix(k, q, p.b)
    gap = np.diag([np.exp(-1j*k*p.l_gap), np.exp(1j*k*p.l_gap)])

    total = barrier
    for _ in range(p.n_barriers - 1):
        total = barrier @ gap @ total

    return total, p.n_barriers*q*p.b


def _local_amplitude(p: ModelParams, energy: float) -> complex:
    total, log_scale = _scaled_total(p, energy)
    return complex(np.exp(-log_scale)/total[0, 0])


def std_qm_amplitudes(p: ModelParams) -> Tuple[complex, complex]:
    """
    Transmission and reflection amplitudes of N identical barriers.

    The reference point of the transmitted wave is the right edge of the last barrier,
    so t = exp(-ik(Ns - L))/T_11 for the total transfer matrix T.

    Args:
        p: Model parameters. alpha and d_alpha are ignored.

    Returns:
        t and r, with |t|^2 + |r|^2 = 1.
    """
    total, _ = _scaled_total(p, p.energy)
    k = np.sqrt(p.energy)
    t = _local_amplitude(p, p.energy)*np.exp(-1j*k*(p.n_barriers*p.s - p.l_gap))

    return complex(t), complex(total[1, 0]/total[0, 0])


def std_qm_multibarrier(p: ModelParams, cfg: Optional[FdConfig] = None) -> Tuple[complex, float]:
    """
    Transmission amplitude and phase time of N identical barriers.

    The phase time is the step-halved finite difference of the transmission phase in energy plus the
    free-passage term ((N-1)s + b)/(2k).

    Args:
        p: Model parameters. alpha and d_alpha are ignored.
        cfg: Step control of the finite difference.

    Returns:
        t and the phase time.
    """
    t, _ = std_qm_amplitudes(p)

    def phase(energy):
        k = np.sqrt(energy)
        amplitude = _local_amplitude(p, energy)*np.exp(-1j*k*(p.n_barriers*p.s - p.l_gap))
        return float(np.angle(amplitude))

    k = np.sqrt(p.energy)
    slope, _ = settled_phase_derivative(phase, p.energy, cfg)
    return t, float(slope + ((p.n_barriers - 1)*p.s + p.b)/(2*k))
