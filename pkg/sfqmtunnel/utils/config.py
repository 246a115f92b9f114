"""
Run configuration: INI files and environment variables.
"""
import configparser
import logging
import os
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

CONFIG_SECTION = 'sfqm'
THREADS_ENV_VAR = 'SFQM_TUNNEL_THREADS'


def _to_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('cannot interpret %r as a boolean' % value)


def _to_int_list(value: str):
    return [int(item) for item in value.replace(',', ' ').split()]


# config key (lowercased) -> (destination name, converter)
CONFIG_KEYS: Dict[str, Any] = {
    'alpha': ('alpha', float),
    'd_alpha': ('d_alpha', float),
    'v': ('v_height', float),
    'e': ('energy', float),
    'b': ('b', float),
    'l': ('l_gap', float),
    'n': ('n_barriers', int),
    'sweep': ('sweep', str),
    'from': ('start', float),
    'to': ('stop', float),
    'steps': ('steps', int),
    'n_list': ('n_list', _to_int_list),
    'format': ('format', str),
    'free_passage': ('free_passage', str),
    'paper_verbatim': ('paper_verbatim', _to_bool),
    'grid': ('grid', str),
}


def load_config(path: str) -> Dict[str, Any]:
    """
    Reads a flat key-value configuration file.

    The file holds a single [sfqm] section whose keys mirror the long command line
    flags with '-' replaced by '_', for instance::

        [sfqm]
        alpha = 1.995
        E = 3
        n_list = 1, 2, 3, 4

    Args:
        path: Path of the file.

    Returns:
        The converted values keyed by their destination names.

    Raises:
        ValueError: If the file is missing, lacks the section or holds unknown keys.
    """
    parser = configparser.ConfigParser()
    if not parser.read(path):
        raise ValueError('config file %r cannot be read' % path)
    if not parser.has_section(CONFIG_SECTION):
        raise ValueError('config file %r has no [%s] section' % (path, CONFIG_SECTION))

    values = {}
    for key, raw in parser.items(CONFIG_SECTION):
        key = key.lower()
        if key not in CONFIG_KEYS:
            raise ValueError('unknown config key %r in %r, valid keys are %s'
                             % (key, path, ', '.join(sorted(CONFIG_KEYS))))
        dest, convert = CONFIG_KEYS[key]
        values[dest] = convert(raw)

    logger.debug('loaded %d settings from %s', len(values), path)
    return values


def threads_from_env(environ: Optional[Dict[str, str]] = None) -> int:
    """
    Number of joblib workers allowed by SFQM_TUNNEL_THREADS.

    Args:
        environ: Mapping to read from, defaults to os.environ.

    Returns:
        The worker cap, 1 if the variable is unset.

    Raises:
        ValueError: If the variable is not a positive integer.
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == '':
        return 1

    try:
        n_threads = int(raw)
    except ValueError:
        raise ValueError('%s must be a positive integer, got %r' % (THREADS_ENV_VAR, raw))
    if n_threads < 1:
        raise ValueError('%s must be a positive integer, got %r' % (THREADS_ENV_VAR, raw))

    return n_threads
