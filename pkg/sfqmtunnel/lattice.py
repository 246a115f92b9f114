"""
Locally periodic potential: N unit cells composed through Chebyshev polynomials.

With phi = delta + k_alpha*s, chi = sqrt(v_alpha)*cos(phi) and sigma = sqrt(v_alpha)*sin(phi)

    M_N = (chi - i*sigma)*U_{N-1}(chi) - U_{N-2}(chi) = P_N - i*Q_N,
    t_N = exp(-i*k_alpha*N*s)/M_N,

and the phase Phi = atan2(Q_N, P_N) of t_N*exp(i*k_alpha*N*s) has the closed-form energy
derivative A_1/A_2. sigma carries its sign, so M_N = P_N - i*Q_N is an identity and the
N=1 lattice reduces exactly to the single barrier.
"""
import logging
import warnings
from collections import namedtuple
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from sfqmtunnel.barrier import UnitCell, unit_cell
from sfqmtunnel.params import ModelParams, wavenumbers, derivatives
from sfqmtunnel.utils.chebyshev import chebyshev_u, chebyshev_t, chebyshev_u_scaled
from sfqmtunnel.utils.differentiation import FdConfig, settled_phase_derivative
from sfqmtunnel.utils.validation import check_grid

logger = logging.getLogger(__name__)

# beyond this xi, A_1/A_2 equals delta' + k_alpha'*s up to exp(-2*xi)
OPAQUE_XI = 300.0
BAND_EDGE_TOL = 1e-9
# below this |sin(phi)|, a_1 is evaluated without dividing by sigma
SMALL_SINE = 1e-4
MAX_STEP_HALVINGS = 8
FREE_PASSAGE_CONVENTIONS = ('standard', 'fractional')

CurvePoint = namedtuple('CurvePoint', ['b', 'gamma', 'tau', 'trans_prob', 'band_edge'])


@dataclass(frozen=True)
class CellPhase:
    """
    The unit cell seen by the lattice, every quantity multiplied by g = exp(-xi)
    (v_alpha and v_alpha' by g^2).

    Attributes:
        g: exp(-xi).
        v_scaled: v_alpha*g^2.
        v_prime_scaled: v_alpha'*g^2.
        phi: delta + k_alpha*s.
        dphi: delta' + k_alpha'*s.
        chi_s: chi*g.
        sigma_s: sigma*g.
        chi_prime_s: chi'*g.
        sigma_prime_s: sigma'*g.
        root_sign: Sign applied to sigma by the paper-verbatim positive root, +1 otherwise.
    """
    g: float
    v_scaled: float
    v_prime_scaled: float
    phi: float
    dphi: float
    chi_s: float
    sigma_s: float
    chi_prime_s: float
    sigma_prime_s: float
    root_sign: float


@dataclass(frozen=True)
class LatticeResult:
    """
    N-barrier outputs. U_j, T_N, P_N, Q_N and M_N are reported unscaled and become
    infinite once they overflow; Phi, dPhi/dE, Gamma and |t_N|^2 never do.

    Attributes:
        chi: sqrt(v_alpha)*cos(delta + k_alpha*s).
        chi_prime: dchi/dE.
        u_nm1: U_{N-1}(chi).
        u_nm2: U_{N-2}(chi).
        u_nm3: U_{N-3}(chi).
        t_n_first_kind: T_N(chi).
        m_n: M_N.
        t_n: Transmission amplitude t_N.
        trans_prob: |t_N|^2.
        p_n: Re M_N.
        q_n: -Im M_N.
        phi: Phi = atan2(Q_N, P_N).
        dphi_de: dPhi/dE.
        gamma_n: Phase time of the lattice.
        zeta: Full phase of t_N, Phi - k_alpha*N*s.
        sigma: sqrt(v_alpha)*sin(delta + k_alpha*s).
        in_band: Whether |chi| <= 1.
        band_edge: Whether dPhi/dE was obtained by finite differences next to |chi| = 1.
        opaque_limit: Whether dPhi/dE was replaced by its opaque limit delta' + k_alpha'*s.
    """
    chi: float
    chi_prime: float
    u_nm1: float
    u_nm2: float
    u_nm3: float
    t_n_first_kind: float
    m_n: complex
    t_n: complex
    trans_prob: float
    p_n: float
    q_n: float
    phi: float
    dphi_de: float
    gamma_n: float
    zeta: float
    sigma: float
    in_band: bool
    band_edge: bool
    opaque_limit: bool


def cell_phase(p: ModelParams, cell: Optional[UnitCell] = None, paper_verbatim: bool = False) -> CellPhase:
    """
    Scaled chi, sigma and their energy derivatives for the unit cell of p.

    Args:
        p: Model parameters.
        cell: The unit cell of p, computed if not given.
        paper_verbatim: Use the positive root sqrt(v_alpha - chi^2) in place of sigma.

    Returns:
        The CellPhase.
    """
    if cell is None:
        cell = unit_cell(p, paper_verbatim=paper_verbatim)
    fq = wavenumbers(p)
    fd = derivatives(p, paper_verbatim=paper_verbatim)

    phi = cell.delta + fq.k_alpha*p.s
    dphi = cell.delta_prime + fd.dk_alpha*p.s
    root_v = np.sqrt(cell.v_scaled)
    half = cell.v_prime_scaled/(2*root_v)
    cos_phi, sin_phi = np.cos(phi), np.sin(phi)
    root_sign = (1.0 if sin_phi >= 0 else -1.0) if paper_verbatim else 1.0

    return CellPhase(
        g=float(np.exp(-fq.xi)),
        v_scaled=cell.v_scaled,
        v_prime_scaled=cell.v_prime_scaled,
        phi=float(phi),
        dphi=float(dphi),
        chi_s=float(root_v*cos_phi),
        sigma_s=float(root_sign*root_v*sin_phi),
        chi_prime_s=float(half*cos_phi - root_v*dphi*sin_phi),
        sigma_prime_s=float(root_sign*(half*sin_phi + root_v*dphi*cos_phi)),
        root_sign=root_sign,
    )


def _leading_u(order: int, log_two_chi: float, sign: float) -> float:
    # U_j(x) ~ (2x)^j for |x| >> 1
    if order == -1:
        return 0.0
    if order == -2:
        return -1.0
    with np.errstate(over='ignore'):
        return float(sign**order*np.exp(order*log_two_chi))


def _opaque_null_chi(p: ModelParams, ph: CellPhase, xi: float, k_alpha: float, gamma_offset: float) -> LatticeResult:
    # chi = 0 exactly: U_j(0) is 0 or +-1 and U_j'(0) = -(j + 1)*T_{j+1}(0), so nothing grows with chi
    n = p.n_barriers
    u1, u2, u3 = chebyshev_u(n - 1, 0.0), chebyshev_u(n - 2, 0.0), chebyshev_u(n - 3, 0.0)

    with np.errstate(over='ignore', invalid='ignore'):
        growth = np.exp(xi)
        if u1 != 0:
            # N odd: P_N = 0, |M_N|^2 = v_alpha
            du2 = -(n - 1)*chebyshev_t(n - 1, 0.0)
            phi = float(np.arctan2(ph.sigma_s*u1, 0.0))
            log_a2 = np.log(ph.v_scaled) + 2*xi
            dphi_de = -ph.chi_prime_s*(u1 - du2)/(ph.sigma_s*u1)
        else:
            # N even: Q_N = 0, full transmission
            du1 = -n*chebyshev_t(n, 0.0)
            phi = float(np.arctan2(0.0, -u2))
            log_a2 = 0.0
            dphi_de = -ph.sigma_s*ph.chi_prime_s*growth**2*du1/u2
        zeta = phi - k_alpha*n*p.s

        return LatticeResult(
            chi=0.0, chi_prime=float(ph.chi_prime_s*growth),
            u_nm1=u1, u_nm2=u2, u_nm3=u3,
            t_n_first_kind=chebyshev_t(n, 0.0), m_n=complex(np.exp(0.5*log_a2)*np.exp(-1j*phi)),
            t_n=complex(np.exp(-0.5*log_a2)*np.exp(1j*zeta)), trans_prob=float(np.exp(-log_a2)),
            p_n=-u2, q_n=float(ph.sigma_s*growth*u1),
            phi=phi, dphi_de=float(dphi_de), gamma_n=float(dphi_de + gamma_offset), zeta=float(zeta),
            sigma=float(ph.sigma_s*growth), in_band=True, band_edge=False, opaque_limit=False,
        )


def _opaque(p: ModelParams, ph: CellPhase, xi: float, k_alpha: float, gamma_n: float = np.nan) -> LatticeResult:
    if ph.chi_s == 0:
        return _opaque_null_chi(p, ph, xi, k_alpha, gamma_n - ph.dphi)

    n = p.n_barriers
    sign = 1.0 if ph.chi_s >= 0 else -1.0
    log_abs_chi = xi + np.log(abs(ph.chi_s))
    log_two_chi = np.log(2) + log_abs_chi
    parity = sign**(n - 1)

    phi = float(np.arctan2(parity*ph.sigma_s, parity*ph.chi_s))
    log_a2 = np.log(ph.v_scaled) + 2*xi + 2*(n - 1)*log_two_chi
    zeta = phi - k_alpha*n*p.s

    with np.errstate(over='ignore', invalid='ignore'):
        growth = np.exp(xi)
        u_nm1 = _leading_u(n - 1, log_two_chi, sign)
        t_first = float(sign**n*np.exp(n*log_abs_chi + (n - 1)*np.log(2)))

        return LatticeResult(
            chi=float(ph.chi_s*growth), chi_prime=float(ph.chi_prime_s*growth),
            u_nm1=u_nm1, u_nm2=_leading_u(n - 2, log_two_chi, sign), u_nm3=_leading_u(n - 3, log_two_chi, sign),
            t_n_first_kind=t_first, m_n=complex(np.exp(0.5*log_a2)*np.exp(-1j*phi)),
            t_n=complex(np.exp(-0.5*log_a2)*np.exp(1j*zeta)), trans_prob=float(np.exp(-log_a2)),
            p_n=t_first, q_n=float(ph.sigma_s*growth*u_nm1),
            phi=phi, dphi_de=ph.dphi, gamma_n=float(gamma_n), zeta=float(zeta), sigma=float(ph.sigma_s*growth),
            in_band=False, band_edge=False, opaque_limit=True,
        )


def lattice_phase(p: ModelParams, paper_verbatim: bool = False) -> float:
    """
    Phase Phi = atan2(Q_N, P_N) of t_N*exp(i*k_alpha*N*s), without derivatives.
    """
    fq = wavenumbers(p)
    ph = cell_phase(p, paper_verbatim=paper_verbatim)
    if fq.xi > OPAQUE_XI:
        return _opaque(p, ph, fq.xi, fq.k_alpha).phi

    u1, u2, _, _ = chebyshev_u_scaled(p.n_barriers - 1, ph.chi_s/ph.g)
    return float(np.arctan2(ph.sigma_s*u1, ph.chi_s*u1 - ph.g*u2))


def _band_edge_slope(p: ModelParams, paper_verbatim: bool, cfg: Optional[FdConfig]) -> float:
    def phase(energy):
        return lattice_phase(p.replace(energy=energy), paper_verbatim=paper_verbatim)

    slope, settled = settled_phase_derivative(phase, p.energy, cfg, max_halvings=MAX_STEP_HALVINGS)
    if not settled:
        warnings.warn('finite difference of Phi did not settle at the band edge %r' % (p, ), RuntimeWarning)
    return slope


def compose(p: ModelParams, cell: Optional[UnitCell] = None, paper_verbatim: bool = False,
            free_passage: str = 'standard', fd_config: Optional[FdConfig] = None) -> LatticeResult:
    """
    Composes N unit cells.

    Args:
        p: Model parameters.
        cell: The unit cell of p, computed if not given.
        paper_verbatim: Use the positive root sqrt(v_alpha - chi^2) for Q_N, a_1 and a_2.
        free_passage: 'standard' adds ((N-1)s + b)/(2k) to Gamma, 'fractional' adds
            ((N-1)s + b)*k_alpha'.
        fd_config: Step control of the band-edge fallback.

    Returns:
        The LatticeResult.
    """
    assert free_passage in FREE_PASSAGE_CONVENTIONS, \
        'free_passage must be one of %s' % ', '.join(FREE_PASSAGE_CONVENTIONS)

    if cell is None:
        cell = unit_cell(p, paper_verbatim=paper_verbatim)
    fq = wavenumbers(p)
    fd = derivatives(p, paper_verbatim=paper_verbatim)
    ph = cell_phase(p, cell, paper_verbatim=paper_verbatim)
    n, s, xi = p.n_barriers, p.s, fq.xi

    passage = ((n - 1)*s + p.b)*(1/(2*fq.k) if free_passage == 'standard' else fd.dk_alpha)

    if xi > OPAQUE_XI:
        logger.debug('opaque limit used for %r', p)
        return _opaque(p, ph, xi, fq.k_alpha, ph.dphi - n*s*fd.dk_alpha + passage)

    g = ph.g
    chi, chi_prime = ph.chi_s/g, ph.chi_prime_s/g
    u1, u2, u3, log_c = chebyshev_u_scaled(n - 1, chi)

    t_s = ph.chi_s*u1 - g*u2
    q_s = ph.sigma_s*u1
    phi = float(np.arctan2(q_s, t_s))
    a2 = g**2*np.exp(-2*log_c) + (ph.v_scaled - g**2)*u1**2

    if abs(np.sin(ph.phi)) < SMALL_SINE:
        a1 = ph.sigma_prime_s*u1*t_s - ph.sigma_s*ph.chi_prime_s*u1**2
    else:
        b1 = u1*(ph.v_prime_scaled - 2*ph.chi_s*ph.chi_prime_s)*t_s
        b2 = ph.sigma_s**2*ph.chi_prime_s*u1**2
        a1 = (b1 - 2*b2)/(2*ph.sigma_s)

    band_edge = False
    if n == 1:
        dphi_de = a1/a2
    elif abs(chi**2 - 1) < BAND_EDGE_TOL:
        logger.debug('band edge fallback used for %r', p)
        band_edge = True
        dphi_de = _band_edge_slope(p, paper_verbatim, fd_config)
    else:
        b3 = chi_prime*u2*(n*u2 - chi*u1)
        b4 = (n - 1)*chi_prime*u1*u3
        a2_term = ph.sigma_s*g*(b3 - b4)/(chi**2 - 1)
        dphi_de = (a1 + a2_term)/a2

    log_prob = -np.log(a2) - 2*xi - 2*log_c
    zeta = phi - fq.k_alpha*n*s
    with np.errstate(over='ignore', invalid='ignore'):
        growth = np.exp(log_c + xi)
        p_n = float(t_s*growth)
        q_n = float(q_s*growth)
        m_n = complex(p_n, -q_n)
        t_n = complex(np.exp(-log_c - xi)*np.exp(-1j*fq.k_alpha*n*s)/complex(t_s, -q_s))
        scale = np.exp(log_c)

        return LatticeResult(
            chi=float(chi), chi_prime=float(chi_prime),
            u_nm1=float(u1*scale), u_nm2=float(u2*scale), u_nm3=float(u3*scale),
            t_n_first_kind=p_n, m_n=m_n, t_n=t_n, trans_prob=float(np.exp(log_prob)),
            p_n=p_n, q_n=q_n, phi=phi, dphi_de=float(dphi_de),
            gamma_n=float(dphi_de - n*s*fd.dk_alpha + passage),
            zeta=float(zeta), sigma=float(ph.sigma_s/g),
            in_band=bool(abs(chi) <= 1), band_edge=band_edge, opaque_limit=False,
        )


def transmission(p: ModelParams) -> Tuple[complex, float]:
    """
    Transmission amplitude t_N and probability |t_N|^2.
    """
    result = compose(p)
    return result.t_n, result.trans_prob


def gamma_curve(p: ModelParams, b_grid: Sequence[float], paper_verbatim: bool = False,
                free_passage: str = 'standard') -> List[CurvePoint]:
    """
    Phase time of the lattice along a grid of barrier widths.

    Args:
        p: Model parameters, b is overridden.
        b_grid: Increasing, non-negative widths.
        paper_verbatim: Passed to compose.
        free_passage: Passed to compose.

    Returns:
        One CurvePoint (b, Gamma, tau_alpha, |t_N|^2, band-edge flag) per width.
    """
    curve = []
    for b in check_grid(b_grid):
        point = p.replace(b=float(b))
        cell = unit_cell(point, paper_verbatim=paper_verbatim)
        result = compose(point, cell, paper_verbatim=paper_verbatim, free_passage=free_passage)
        curve.append(CurvePoint(float(b), result.gamma_n, cell.tau_alpha, result.trans_prob, result.band_edge))

    return curve
