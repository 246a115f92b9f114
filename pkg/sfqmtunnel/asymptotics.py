"""
Opaque-barrier limits of the phase times and the standard quantum mechanical
reference formulas they reduce to at alpha = 2.
"""
from collections import namedtuple
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from sfqmtunnel.barrier import angle_cosines, unit_cell
from sfqmtunnel.lattice import cell_phase, compose
from sfqmtunnel.params import ModelParams, wavenumbers, derivatives


@dataclass(frozen=True)
class AsymptoticPrediction:
    """
    Attributes:
        w_alpha: 1/(2k) - 1/(alpha*D*k_alpha^(alpha-1)).
        predicted_gap: (N-1)*s*w_alpha, the large-b limit of Gamma^N - tau_alpha.
        f1: Prefactor of exp(2*xi) in v_alpha, closed form as published.
        f2: Width-independent prefactor of exp(2*xi) in v_alpha'.
        f3: Prefactor of b*exp(2*xi) in v_alpha'.
        tau_qm_limit: 1/(qk), only defined for alpha = 2.
    """
    w_alpha: float
    predicted_gap: float
    f1: float
    f2: float
    f3: float
    tau_qm_limit: Optional[float]


@dataclass(frozen=True)
class FCoefficients:
    """
    Attributes:
        f1: Closed form as published.
        f2: Closed form.
        f3: Closed form.
        f1_corrected: (4 + S + 4*eps_+*cos(beta))/16 with S = eps_+^2cos^2(beta) + eps_-^2sin^2(beta),
            the actual limit of v_alpha*exp(-2*xi).
        b_measure: Width at which the prefactors were measured.
        v_prefactor: v_alpha*exp(-2*xi) at b_measure.
        v_prime_prefactor: v_alpha'*exp(-2*xi) at b_measure, to be compared with f2 + b_measure*f3.
    """
    f1: float
    f2: float
    f3: float
    f1_corrected: float
    b_measure: float
    v_prefactor: float
    v_prime_prefactor: float


def w_alpha(p: ModelParams) -> float:
    """
    Rate at which the opaque-limit phase time of a lattice changes with the period s.

    Vanishes at alpha = 2 with D = 1. For 1 < alpha < 2 and D = 1 it is negative once
    E > (alpha/2)^(2*alpha/(2 - alpha)), which holds for every E >= 0.25; below that
    threshold it turns positive.
    """
    fq = wavenumbers(p)
    return float(1/(2*fq.k) - 1/(p.alpha*p.d_alpha*np.power(fq.k_alpha, p.alpha - 1)))


def gamma_limit(p: ModelParams, tau_limit: float) -> float:
    """
    Large-b trend of the lattice phase time, tau_limit + (N-1)*s*w_alpha.

    Args:
        p: Model parameters.
        tau_limit: The single-barrier phase time at the same width.

    Returns:
        The predicted Gamma^N.
    """
    return float(tau_limit + (p.n_barriers - 1)*p.s*w_alpha(p))


def _spread(fq, cos_b, sin_b):
    return fq.eps_plus**2*cos_b**2 + fq.eps_minus**2*sin_b**2


def f_coefficients(p: ModelParams, b_measure: float = 50.0, paper_verbatim: bool = False) -> FCoefficients:
    """
    Prefactors of exp(2*xi) in v_alpha and v_alpha' for opaque barriers, together with
    their values measured from the barrier module.

    Args:
        p: Model parameters, b is ignored.
        b_measure: Width at which the measured prefactors are taken.
        paper_verbatim: Passed to params.derivatives.

    Returns:
        The FCoefficients.
    """
    assert b_measure > 0, 'b_measure must be positive'

    fq = wavenumbers(p)
    fd = derivatives(p, paper_verbatim=paper_verbatim)
    cos_b, sin_b, _, sin_g = angle_cosines(p.alpha)
    ep, em = fq.eps_plus, fq.eps_minus
    spread = _spread(fq, cos_b, sin_b)
    cos_2b = cos_b**2 - sin_b**2

    f1 = 4*ep*cos_b + (8 + ep**2 + em**2 + (ep**2 - em**2)*cos_2b)/32
    f2 = (2*fd.deps_plus*cos_b + em*fd.deps_minus*sin_b**2 + ep*fd.deps_plus*cos_b**2)/8
    f3 = fd.dq_alpha*sin_g*(4*ep*cos_b + spread + 4)/8

    cell = unit_cell(p.replace(b=b_measure), paper_verbatim=paper_verbatim)
    return FCoefficients(
        f1=float(f1), f2=float(f2), f3=float(f3),
        f1_corrected=float((4 + spread + 4*ep*cos_b)/16),
        b_measure=float(b_measure),
        v_prefactor=cell.v_scaled,
        v_prime_prefactor=cell.v_prime_scaled,
    )


def opaque_chi_prime(p: ModelParams, paper_verbatim: bool = False) -> float:
    """
    Opaque-barrier form of chi' built from f1, f2 and f3, multiplied by exp(-xi).

    Args:
        p: Model parameters.
        paper_verbatim: Use the published f1 instead of the corrected one.

    Returns:
        (f2 + b*f3)/(2*sqrt(f1))*cos(phi) - sqrt(f1)*phi'*sin(phi) with phi = delta + k_alpha*s.
    """
    coefficients = f_coefficients(p, paper_verbatim=paper_verbatim)
    f1 = coefficients.f1 if paper_verbatim else coefficients.f1_corrected
    ph = cell_phase(p)

    return float((coefficients.f2 + p.b*coefficients.f3)/(2*np.sqrt(f1))*np.cos(ph.phi)
                 - np.sqrt(f1)*ph.dphi*np.sin(ph.phi))


def tau_slope_limit(p: ModelParams) -> float:
    """
    Large-b slope dtau_alpha/db = q_alpha'*cos(pi/alpha) + w_alpha.

    A negative value means the single-barrier phase time turns over and decreases with
    the width; at alpha = 2 the slope vanishes (Hartman saturation).
    """
    fd = derivatives(p)
    _, _, cos_g, _ = angle_cosines(p.alpha)
    return float(fd.dq_alpha*cos_g + w_alpha(p))


def z_alpha(p: ModelParams, paper_verbatim: bool = False) -> float:
    """
    dPhi/dE of the double barrier in closed form,

        Z = [v'chi(2chi^2 - 1) - 2chi'(2v*chi^2 - 2chi^2 + v)]/[sigma(4chi^2*v - 4chi^2 + 1)],

    evaluated with every factor scaled by exp(-xi). Independent of p.n_barriers.
    """
    ph = cell_phase(p, paper_verbatim=paper_verbatim)
    g2 = ph.g**2
    chi2 = ph.chi_s**2
    numerator = (ph.v_prime_scaled*ph.chi_s*(2*chi2 - g2)
                 - 2*ph.chi_prime_s*(2*ph.v_scaled*chi2 - 2*chi2*g2 + ph.v_scaled*g2))
    denominator = ph.sigma_s*(4*chi2*ph.v_scaled - 4*chi2*g2 + g2**2)

    return float(numerator/denominator)


def double_barrier_gamma(p: ModelParams, paper_verbatim: bool = False) -> float:
    """
    Phase time of two barriers, Z - 2s*k_alpha' + (s + b)/(2k).
    """
    fq = wavenumbers(p)
    fd = derivatives(p, paper_verbatim=paper_verbatim)
    return float(z_alpha(p, paper_verbatim) - 2*p.s*fd.dk_alpha + (p.s + p.b)/(2*fq.k))


def std_qm_tau(p: ModelParams) -> float:
    """
    Single-barrier phase time of standard quantum mechanics,

        tau = d/dE atan((k^2 - q^2)/(2kq)*tanh(qb)),

    with k = sqrt(E) and q = sqrt(V - E), differentiated analytically. p.alpha and p.d_alpha
    are ignored.
    """
    e, v, b = p.energy, p.v_height, p.b
    q = np.sqrt(v - e)
    ratio = (2*e - v)/(2*np.sqrt(e*(v - e)))
    d_ratio = v**2/(4*np.power(e*(v - e), 1.5))
    decay = np.exp(-2*q*b)
    tanh = (1 - decay)/(1 + decay)
    sech2 = 4*decay/(1 + decay)**2

    f = ratio*tanh
    df = d_ratio*tanh + ratio*sech2*b*(-1/(2*q))
    return float(df/(1 + f**2))


def std_qm_tau_limit(p: ModelParams) -> float:
    """
    Hartman limit 1/(qk) of the standard quantum mechanical phase time.
    """
    return float(1/np.sqrt(p.energy*(p.v_height - p.energy)))


def predict(p: ModelParams) -> AsymptoticPrediction:
    """
    Collects the opaque-limit predictions for p.
    """
    w = w_alpha(p)
    coefficients = f_coefficients(p)
    return AsymptoticPrediction(
        w_alpha=w,
        predicted_gap=float((p.n_barriers - 1)*p.s*w),
        f1=coefficients.f1, f2=coefficients.f2, f3=coefficients.f3,
        tau_qm_limit=std_qm_tau_limit(p) if p.alpha == 2 else None,
    )


GammaPeak = namedtuple('GammaPeak', ['b', 'gamma', 'interior'])


def gamma_peak(p: ModelParams, b_max: float = 20.0, n_scan: int = 81,
               free_passage: str = 'standard') -> GammaPeak:
    """
    Width at which the lattice phase time Gamma^N(b) attains its maximum on [0, b_max].

    A coarse scan brackets the maximum, which is then refined by a bounded scalar search.

    Args:
        p: Model parameters, b is overridden.
        b_max: Largest width considered.
        n_scan: Number of points of the bracketing scan.
        free_passage: Passed to lattice.compose.

    Returns:
        The width, the phase time there and whether the maximum lies inside (0, b_max).
    """
    assert b_max > 0, 'b_max must be positive'
    assert n_scan >= 3, 'the scan needs at least 3 points'

    def gamma(b):
        return compose(p.replace(b=float(b)), free_passage=free_passage).gamma_n

    widths = np.linspace(0.0, b_max, n_scan)
    values = np.array([gamma(b) for b in widths])
    best = int(np.argmax(values))
    if best in (0, n_scan - 1):
        return GammaPeak(float(widths[best]), float(values[best]), False)

    result = minimize_scalar(lambda b: -gamma(b), bounds=(widths[best - 1], widths[best + 1]),
                             method='bounded', options={'xatol': 1e-8})
    return GammaPeak(float(result.x), float(-result.fun), True)
