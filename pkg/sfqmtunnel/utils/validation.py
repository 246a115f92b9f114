"""
Domain checks for the scattering parameters.
"""
from numbers import Integral
from typing import Sequence

import numpy as np


class DomainError(ValueError):
    """
    Raised when a parameter point lies outside the domain the tunneling formulas are derived for:
    1 < alpha <= 2 and a classically forbidden energy 0 < E < V.
    """


def check_alpha(alpha: float) -> None:
    """
    Checks the Levy index.

    Args:
        alpha: The Levy index.

    Raises:
        DomainError: If alpha lies outside (1, 2].
    """
    if not np.isfinite(alpha) or not 1 < alpha <= 2:
        raise DomainError('alpha must satisfy 1 < alpha <= 2, got %r' % alpha)


def check_model_params(alpha: float, d_alpha: float, v_height: float, energy: float,
                       b: float, l_gap: float, n_barriers: int) -> None:
    """
    Checks a full set of model parameters.

    Args:
        alpha: Levy index.
        d_alpha: Scale constant of the fractional kinetic term.
        v_height: Barrier height.
        energy: Particle energy.
        b: Barrier width.
        l_gap: Separation between consecutive barriers.
        n_barriers: Number of barriers.

    Raises:
        DomainError: If any of the values violates the domain of the model.
    """
    check_alpha(alpha)

    if not d_alpha > 0:
        raise DomainError('d_alpha must be positive, got %r' % d_alpha)
    if not v_height > 0:
        raise DomainError('barrier height V must be positive, got %r' % v_height)
    if not energy > 0:
        raise DomainError('energy E must be positive, got %r' % energy)
    if not energy < v_height:
        raise DomainError('energy E=%r must lie below the barrier height V=%r '
                          '(classically forbidden case only)' % (energy, v_height))
    if not (np.isfinite(b) and b >= 0):
        raise DomainError('barrier width b must be finite and non-negative, got %r' % b)
    if not (np.isfinite(l_gap) and l_gap >= 0):
        raise DomainError('separation L must be finite and non-negative, got %r' % l_gap)
    if isinstance(n_barriers, bool) or not isinstance(n_barriers, Integral):
        raise DomainError('number of barriers N must be an integer, got %r' % (n_barriers, ))
    if n_barriers < 1:
        raise DomainError('number of barriers N must be at least 1, got %r' % n_barriers)


def check_grid(grid: Sequence[float], allow_zero: bool = True) -> np.ndarray:
    """
    Checks that a sampling grid is strictly increasing and non-negative.

    Args:
        grid: The grid to be checked.
        allow_zero: Whether the first point may be zero.

    Returns:
        The grid as a float numpy array.
    """
    grid = np.asarray(grid, dtype=float).reshape(-1, )
    assert len(grid) > 0, 'the grid must contain at least one point'
    assert np.all(np.diff(grid) > 0), 'the grid must be strictly increasing'
    if allow_zero:
        assert grid[0] >= 0, 'the grid must be non-negative'
    else:
        assert grid[0] > 0, 'the grid must be positive'

    return grid
