"""
Finite differences and phase unwrapping used as independent ground truth for
the analytic derivative chain.
"""
import warnings
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class FdConfig:
    """
    Step control of the central finite difference.

    Args:
        step_rel: Step relative to the evaluation point.
        richardson: Whether to apply one level of Richardson extrapolation.
    """
    step_rel: float = 1e-6
    richardson: bool = True

    def __post_init__(self):
        assert 0 < self.step_rel < 1e-2, 'step_rel must lie in (0, 1e-2)'


def _checked(f: Callable[[float], float], x: float) -> float:
    value = f(x)
    if not np.all(np.isfinite(value)):
        raise FloatingPointError('function returned non-finite value %r at %r' % (value, x))
    return value


def _central(f: Callable[[float], float], x: float, h: float) -> float:
    # x + h and x - h are rounded, divide by the stencil actually used
    upper, lower = x + h, x - h
    return (_checked(f, upper) - _checked(f, lower))/(upper - lower)


def fd_derivative(f: Callable[[float], float], x: float, cfg: Optional[FdConfig] = None) -> float:
    """
    Central finite difference of a scalar function.

    Args:
        f: The function to be differentiated.
        x: Point of differentiation.
        cfg: Step control. Defaults to FdConfig().

    Returns:
        The derivative estimate. With cfg.richardson, the estimates at h and h/2 are
        combined as (4D(h/2) - D(h))/3.

    Raises:
        FloatingPointError: If f returns a non-finite value on the stencil.
    """
    if cfg is None:
        cfg = FdConfig()

    h = cfg.step_rel*abs(x) if x != 0 else cfg.step_rel
    coarse = _central(f, x, h)
    if not cfg.richardson:
        return coarse

    fine = _central(f, x, h/2)
    return (4*fine - coarse)/3


def wrap_to_pi(angle):
    """
    Maps angles onto (-pi, pi].
    """
    return np.angle(np.exp(1j*np.asarray(angle)))


def fd_phase_derivative(phase: Callable[[float], float], x: float, cfg: Optional[FdConfig] = None) -> float:
    """
    Finite difference of a phase that is only known modulo 2*pi.

    Every stencil value is unwrapped against the phase at x before differencing,
    which is exact as long as the phase moves by less than pi over one step.

    Args:
        phase: Function returning an angle.
        x: Point of differentiation.
        cfg: Step control.

    Returns:
        The derivative of the unwrapped phase.
    """
    reference = _checked(phase, x)

    def unwrapped(y: float) -> float:
        return reference + wrap_to_pi(phase(y) - reference)

    return fd_derivative(unwrapped, x, cfg)


def settled_phase_derivative(phase: Callable[[float], float], x: float, cfg: Optional[FdConfig] = None,
                             rtol: float = 1e-7, max_halvings: int = 8) -> Tuple[float, bool]:
    """
    Phase derivative with the step halved until two successive estimates agree.

    Next to a sharp resonance the phase turns over a scale of energy comparable to
    the default step, and a single stencil misses the slope by far more than its
    nominal error. Halving stops early once successive estimates drift apart again,
    which means rounding has taken over, and the last estimate before that is kept.

    Args:
        phase: Function returning an angle.
        x: Point of differentiation.
        cfg: Step control of the first estimate. Defaults to FdConfig().
        rtol: Relative agreement of two successive estimates.
        max_halvings: Maximum number of step halvings.

    Returns:
        The derivative estimate and whether it settled.
    """
    if cfg is None:
        cfg = FdConfig()

    step = cfg.step_rel
    previous = fd_phase_derivative(phase, x, cfg)
    previous_change = np.inf
    for _ in range(max_halvings):
        step /= 2
        current = fd_phase_derivative(phase, x, FdConfig(step_rel=step, richardson=cfg.richardson))
        change = abs(current - previous)
        if change <= rtol*abs(current):
            return current, True
        if change > previous_change:
            return previous, True
        previous, previous_change = current, change

    return previous, False


def unwrap(phases: Sequence[float]) -> np.ndarray:
    """
    Removes 2*pi jumps from a sampled phase curve.

    Args:
        phases: Phase samples on an ordered grid.

    Returns:
        The unwrapped phase, its first element unchanged.
    """
    phases = np.asarray(phases, dtype=float).reshape(-1, )
    unwrapped = np.unwrap(phases)

    if len(unwrapped) > 1 and np.any(np.abs(np.diff(unwrapped)) >= np.pi):
        warnings.warn('adjacent phase samples still differ by at least pi after unwrapping, '
                      'the grid is probably too coarse', RuntimeWarning)

    return unwrapped
