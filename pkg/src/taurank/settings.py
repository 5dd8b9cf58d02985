"""
Library defaults and INI configuration.

Settings live in the ``[taurank]`` section of a PasteDeploy style INI
file, which may also carry the usual ``[loggers]``, ``[handlers]`` and
``[formatters]`` sections::

    [taurank]
    field = fp:2147483647
    trials = 16
    sentry_dsn = https://...
"""
import logging
import os
import plaster


from typing import Any


logger = logging.getLogger(__name__)


DEFAULTS: dict[str, Any] = {
    'field': 'q',
    'trials': 8,
    'seed': 42,
    'tmax': 4,
    'cap': 10,
    'max_len': 30,
    'sample_range': 1000,
    'oracle_max_params': 12,
    'oracle_max_dim': 40,
    'iso_attempts': 8,
    'iso_exhaustive_params': 6,
    'sentry_dsn': None,
    'sentry_environment': 'development',
}

SECTION = 'taurank'

# injected by the PasteDeploy loader
_LOADER_KEYS = frozenset(('here', '__file__'))


def coerce(key: str, value: str) -> Any:
    default = DEFAULTS[key]
    if isinstance(default, int):
        try:
            return int(value)
        except ValueError:
            raise ValueError(f'setting {key} expects an integer, got '
                             f'{value!r}') from None
    return value or None


def load_settings(config_uri: str | None = None) -> dict[str, Any]:
    settings = dict(DEFAULTS)
    if config_uri is None:
        return settings

    raw = plaster.get_settings(
        config_uri,
        SECTION,
        defaults={'here': os.getcwd()}
    )
    for key, value in raw.items():
        if key in _LOADER_KEYS:
            continue
        if key not in DEFAULTS:
            logger.warning('ignoring unknown setting %r in %s',
                           key, config_uri)
            continue
        settings[key] = coerce(key, value)
    return settings


def setup_logging(config_uri: str | None, verbosity: int = 0) -> None:
    """
    Logging from the INI file when one is given, otherwise a basic
    stderr configuration at WARNING, INFO (-v) or DEBUG (-vv).
    """
    if config_uri is not None:
        plaster.get_loader(config_uri).setup_logging()
    else:
        logging.basicConfig(
            level=logging.WARNING,
            format='%(levelname)s %(name)s: %(message)s'
        )
    if verbosity:
        level = logging.INFO if verbosity == 1 else logging.DEBUG
        logging.getLogger('taurank').setLevel(level)
