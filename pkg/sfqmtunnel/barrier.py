"""
Single rectangular barrier: the amplitude M_1 = sqrt(v_alpha)*exp(-i*delta) and its
energy derivatives.

Every cosh/sinh(2*xi) is evaluated as exp(2*xi) times a bounded factor. The bounded
factors are kept on the UnitCell (the *_scaled fields, log_scale = 2*xi), so that
ratios such as d_alpha/v_alpha never overflow even when v_alpha itself does.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from sfqmtunnel.params import ModelParams, wavenumbers, derivatives
from sfqmtunnel.utils.validation import check_grid


@dataclass(frozen=True)
class UnitCell:
    """
    Single-barrier amplitude data.

    Attributes:
        v_alpha: |M_1|^2, the inverse transmission probability. Infinite once exp(2*xi) overflows.
        theta: Phase of the barrier, M_1 = sqrt(v_alpha)*exp(-i*(theta - k_alpha*b)).
        delta: theta - k_alpha*b.
        m1: The complex amplitude M_1.
        d_alpha: v_alpha*dtheta/dE.
        v1_alpha: Part of v_alpha' coming from the energy dependence of eps_+ and eps_-.
        v2_alpha: Part of v_alpha' coming from the energy dependence of q_alpha, per unit b*q_alpha'.
        v_alpha_prime: dv_alpha/dE = v1_alpha + b*q_alpha'*v2_alpha.
        delta_prime: d(delta)/dE.
        tau_alpha: Single-barrier phase time delta' + b/(2k).
        v_scaled: v_alpha*exp(-2*xi).
        log_scale: 2*xi.
        v_prime_scaled: v_alpha'*exp(-2*xi).
        d_scaled: d_alpha*exp(-2*xi).
        transmission: 1/v_alpha.
    """
    v_alpha: float
    theta: float
    delta: float
    m1: complex
    d_alpha: float
    v1_alpha: float
    v2_alpha: float
    v_alpha_prime: float
    delta_prime: float
    tau_alpha: float
    v_scaled: float
    log_scale: float
    v_prime_scaled: float
    d_scaled: float
    transmission: float


def angle_cosines(alpha: float) -> Tuple[float, float, float, float]:
    """
    cos(beta), sin(beta), cos(gamma), sin(gamma) for beta = (alpha-1)pi/alpha and
    gamma = pi/alpha. Since beta = pi - gamma, cos(beta) = -cos(gamma); both cosines are
    exactly zero at alpha = 2.
    """
    gamma_ang = np.pi/alpha
    cos_gamma = 0.0 if alpha == 2 else float(np.cos(gamma_ang))
    sin_gamma = float(np.sin(gamma_ang))
    return -cos_gamma, sin_gamma, cos_gamma, sin_gamma


def _unscaled(scaled: float, log_scale: float) -> float:
    with np.errstate(over='ignore', invalid='ignore'):
        return float(scaled*np.exp(log_scale))


def unit_cell(p: ModelParams, paper_verbatim: bool = False) -> UnitCell:
    """
    Computes the single-barrier quantities.

    Args:
        p: Model parameters. Only the barrier (alpha, D, V, E, b) enters.
        paper_verbatim: Passed to params.derivatives.

    Returns:
        The UnitCell.
    """
    fq = wavenumbers(p)
    fd = derivatives(p, paper_verbatim=paper_verbatim)
    cos_b, sin_b, cos_g, sin_g = angle_cosines(p.alpha)

    b, xi, eta = p.b, fq.xi, fq.eta
    ep, em, eps = fq.eps_plus, fq.eps_minus, fq.eps_alpha
    dep, dem, dq = fd.deps_plus, fd.deps_minus, fd.dq_alpha

    # hyperbolic functions times exp(-xi) and exp(-2*xi)
    g1 = np.exp(-2*xi)
    g2 = np.exp(-4*xi)
    chx, shx = 0.5*(1 + g1), 0.5*(1 - g1)
    ch2, sh2 = 0.5*(1 + g2), 0.5*(1 - g2)
    c2e, s2e = np.cos(2*eta)*g1, np.sin(2*eta)*g1
    sin_eta, cos_eta = np.sin(eta), np.cos(eta)

    ep2, em2 = ep**2, em**2
    spread = ep2*cos_b**2 + em2*sin_b**2
    cos_2b = cos_b**2 - sin_b**2

    v_scaled = ((8 - em2 - ep2 - (ep2 - em2)*cos_2b)*c2e
                + (8 + em2 + ep2 + (ep2 - em2)*cos_2b)*ch2
                - 8*em*sin_b*s2e + 8*ep*cos_b*sh2)/16

    numerator = (2*eps*sin_eta*shx + (eps**2 + 1)*sin_eta*chx*cos_b
                 + (eps**2 - 1)*cos_eta*shx*sin_b)
    denominator = (2*eps*cos_eta*chx + (eps**2 + 1)*cos_eta*shx*cos_b
                   - (eps**2 - 1)*sin_eta*chx*sin_b)
    theta = float(np.arctan2(numerator, denominator))

    d_scaled = (0.5*b*ep*dq*cos_b*cos_g*ch2
                + 0.5*b*em*dq*sin_b*sin_g*c2e
                + 0.25*dep*cos_b*s2e
                + 0.5*b*dq*(cos_g*sh2 + sin_g*s2e)
                + 0.125*b*dq*(sh2*cos_g - s2e*sin_g)*spread
                + 0.125*2*sin_b*cos_b*(chx**2*sin_eta**2 + shx**2*cos_eta**2)*(ep*dem - em*dep)
                + 0.25*dem*sin_b*sh2)

    v1_scaled = (0.25*(ch2 - c2e)*(ep*dep*cos_b**2 + em*dem*sin_b**2)
                 - 0.5*dem*sin_b*s2e + 0.5*dep*cos_b*sh2)
    v2_scaled = (0.25*(s2e*cos_g + sh2*sin_g)*spread
                 + (ep*cos_b*ch2*sin_g - em*sin_b*c2e*cos_g)
                 + (sin_g*sh2 - cos_g*s2e))
    v_prime_scaled = v1_scaled + b*dq*v2_scaled

    delta = theta - fq.k_alpha*b
    delta_prime = d_scaled/v_scaled - b*fd.dk_alpha
    log_scale = 2*xi
    v_alpha = _unscaled(v_scaled, log_scale)

    with np.errstate(over='ignore'):
        m1 = complex(np.sqrt(v_alpha)*np.exp(-1j*delta))

    return UnitCell(
        v_alpha=v_alpha,
        theta=theta,
        delta=float(delta),
        m1=m1,
        d_alpha=_unscaled(d_scaled, log_scale),
        v1_alpha=_unscaled(v1_scaled, log_scale),
        v2_alpha=_unscaled(v2_scaled, log_scale),
        v_alpha_prime=_unscaled(v_prime_scaled, log_scale),
        delta_prime=float(delta_prime),
        tau_alpha=float(delta_prime + b/(2*fq.k)),
        v_scaled=float(v_scaled),
        log_scale=float(log_scale),
        v_prime_scaled=float(v_prime_scaled),
        d_scaled=float(d_scaled),
        transmission=float(np.exp(-log_scale)/v_scaled),
    )


def m1_complex_form(p: ModelParams) -> complex:
    """
    M_1 from its defining complex form (cos z - i*mu*sin z)*exp(i*k_alpha*b), with
    z = q_alpha*b*exp(i*pi/alpha) and mu = (eps_+cos(beta) - i*eps_-sin(beta))/2.

    Evaluated in plain complex arithmetic, so it overflows for opaque barriers; it serves
    as an independent check of v_alpha and theta.
    """
    fq = wavenumbers(p)
    cos_b, sin_b, _, _ = angle_cosines(p.alpha)
    z = complex(fq.eta, fq.xi)
    mu = 0.5*(fq.eps_plus*cos_b - 1j*fq.eps_minus*sin_b)
    return complex((np.cos(z) - 1j*mu*np.sin(z))*np.exp(1j*fq.k_alpha*p.b))


def tau_single_limit_check(p: ModelParams, b_grid: Sequence[float]) -> List[Tuple[float, float]]:
    """
    Samples the single-barrier phase time along a grid of barrier widths.

    Args:
        p: Model parameters, b is overridden.
        b_grid: Strictly increasing, non-negative widths.

    Returns:
        The pairs (b, tau_alpha).
    """
    b_grid = check_grid(b_grid)
    return [(float(b), unit_cell(p.replace(b=float(b))).tau_alpha) for b in b_grid]
