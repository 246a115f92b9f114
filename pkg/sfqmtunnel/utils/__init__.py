from .chebyshev import chebyshev_t, chebyshev_u, chebyshev_u_scaled
from .config import load_config, threads_from_env
from .differentiation import FdConfig, fd_derivative, fd_phase_derivative, settled_phase_derivative, unwrap, wrap_to_pi
from .io import to_csv_text, to_json_text, read_csv_table
from .validation import DomainError, check_alpha, check_grid, check_model_params

__all__ = [
    'chebyshev_t', 'chebyshev_u', 'chebyshev_u_scaled',
    'load_config', 'threads_from_env',
    'FdConfig', 'fd_derivative', 'fd_phase_derivative', 'settled_phase_derivative', 'unwrap', 'wrap_to_pi',
    'to_csv_text', 'to_json_text', 'read_csv_table',
    'DomainError', 'check_alpha', 'check_grid', 'check_model_params'
]
