"""
Model parameters and the fractional wavenumbers derived from it.

Units are 2m = hbar = 1, so the standard wavenumber is k = sqrt(E).
"""
from dataclasses import dataclass, replace

import numpy as np

from sfqmtunnel.utils.validation import check_model_params


@dataclass(frozen=True)
class ModelParams:
    """
    A locally periodic rectangular barrier: N barriers of height V and width b,
    consecutive barriers separated by L.

    Args:
        alpha: Levy index, 1 < alpha <= 2.
        d_alpha: Scale constant of the fractional kinetic term.
        v_height: Barrier height V.
        energy: Particle energy E, 0 < E < V.
        b: Barrier width.
        l_gap: Separation L between consecutive barriers.
        n_barriers: Number of barriers N.

    Raises:
        DomainError: If the values lie outside the domain of the model.
    """
    alpha: float = 2.0
    d_alpha: float = 1.0
    v_height: float = 5.0
    energy: float = 3.0
    b: float = 1.0
    l_gap: float = 0.2
    n_barriers: int = 1

    def __post_init__(self):
        check_model_params(self.alpha, self.d_alpha, self.v_height, self.energy,
                           self.b, self.l_gap, self.n_barriers)

    @property
    def s(self) -> float:
        """Period of the lattice, b + L."""
        return self.b + self.l_gap

    def replace(self, **changes) -> 'ModelParams':
        """
        Copy of the parameters with the given fields changed, validated again.
        """
        return replace(self, **changes)


@dataclass(frozen=True)
class FracQuantities:
    k: float
    k_alpha: float
    q_alpha: float
    eps_alpha: float
    eps_plus: float
    eps_minus: float
    beta: float
    gamma_ang: float
    eta: float
    xi: float


@dataclass(frozen=True)
class FracDerivatives:
    """
    Energy derivatives of the fractional wavenumbers.

    Attributes:
        dk_alpha: dk_alpha/dE.
        dq_alpha: dq_alpha/dE.
        deps_alpha: deps_alpha/dE.
        deps_plus: deps_plus/dE.
        deps_minus: deps_minus/dE.
    """
    dk_alpha: float
    dq_alpha: float
    deps_alpha: float
    deps_plus: float
    deps_minus: float


def wavenumbers(p: ModelParams) -> FracQuantities:
    """
    Fractional wavenumbers inside and outside the barrier.

    Args:
        p: Model parameters.

    Returns:
        k = sqrt(E), k_alpha = (E/D)^(1/alpha), q_alpha = ((V-E)/D)^(1/alpha),
        eps_alpha = (k_alpha/q_alpha)^(alpha-1), eps_plus/minus = eps_alpha +/- 1/eps_alpha,
        beta = (alpha-1)pi/alpha, gamma = pi/alpha and the complex barrier phase
        q_alpha*b*exp(i*gamma) split as eta + i*xi.
    """
    alpha = p.alpha
    k_alpha = np.power(p.energy/p.d_alpha, 1/alpha)
    q_alpha = np.power((p.v_height - p.energy)/p.d_alpha, 1/alpha)
    eps_alpha = np.power(k_alpha/q_alpha, alpha - 1)
    gamma_ang = np.pi/alpha
    # cos(pi/2) is 6e-17, not zero
    cos_gamma = 0.0 if alpha == 2 else np.cos(gamma_ang)

    return FracQuantities(
        k=float(np.sqrt(p.energy)),
        k_alpha=float(k_alpha),
        q_alpha=float(q_alpha),
        eps_alpha=float(eps_alpha),
        eps_plus=float(eps_alpha + 1/eps_alpha),
        eps_minus=float(eps_alpha - 1/eps_alpha),
        beta=float((alpha - 1)*np.pi/alpha),
        gamma_ang=float(gamma_ang),
        eta=float(q_alpha*p.b*cos_gamma),
        xi=float(q_alpha*p.b*np.sin(gamma_ang)),
    )


def eps_prime_verbatim(p: ModelParams) -> float:
    """
    deps_alpha/dE in the closed form ((alpha-1)/alpha)*V/(V-E)^2*eps_alpha^(1/(1-alpha)).

    eps_alpha = (E/(V-E))^((alpha-1)/alpha) does not depend on D, neither does this form.
    """
    fq = wavenumbers(p)
    v, e, alpha = p.v_height, p.energy, p.alpha
    return float((alpha - 1)/alpha*v/(v - e)**2*np.power(fq.eps_alpha, 1/(1 - alpha)))


def derivatives(p: ModelParams, paper_verbatim: bool = False) -> FracDerivatives:
    """
    Analytic energy derivatives of the fractional wavenumbers.

    Args:
        p: Model parameters.
        paper_verbatim: If True, deps_alpha is taken from its closed form in V and E
            instead of the chain rule through k_alpha and q_alpha. Both agree.

    Returns:
        The derivatives.
    """
    fq = wavenumbers(p)
    alpha, d = p.alpha, p.d_alpha

    dk_alpha = np.power(fq.k_alpha, 1 - alpha)/(alpha*d)
    dq_alpha = -np.power(fq.q_alpha, 1 - alpha)/(alpha*d)
    if paper_verbatim:
        deps_alpha = eps_prime_verbatim(p)
    else:
        deps_alpha = (alpha - 1)*fq.eps_alpha*(dk_alpha/fq.k_alpha - dq_alpha/fq.q_alpha)

    inv_sq = 1/fq.eps_alpha**2
    return FracDerivatives(
        dk_alpha=float(dk_alpha),
        dq_alpha=float(dq_alpha),
        deps_alpha=float(deps_alpha),
        deps_plus=float(deps_alpha*(1 - inv_sq)),
        deps_minus=float(deps_alpha*(1 + inv_sq)),
    )
