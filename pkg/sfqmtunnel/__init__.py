__version__ = '0.1.0'

from .params import ModelParams, FracQuantities, FracDerivatives, wavenumbers, derivatives
from .barrier import UnitCell, unit_cell, m1_complex_form, tau_single_limit_check
from .lattice import LatticeResult, compose, transmission, gamma_curve
from .asymptotics import (AsymptoticPrediction, w_alpha, gamma_limit, gamma_peak, f_coefficients,
                          std_qm_tau, std_qm_tau_limit)
from .utils.validation import DomainError

__all__ = [
    'ModelParams', 'FracQuantities', 'FracDerivatives', 'wavenumbers', 'derivatives',
    'UnitCell', 'unit_cell', 'm1_complex_form', 'tau_single_limit_check',
    'LatticeResult', 'compose', 'transmission', 'gamma_curve',
    'AsymptoticPrediction', 'w_alpha', 'gamma_limit', 'gamma_peak', 'f_coefficients', 'std_qm_tau', 'std_qm_tau_limit',
    'DomainError'
]
