"""
    Run configuration of the command line interface: optional key=value config files, the RDP_WORKERS
    override and the effective configuration that is echoed into the metadata records.
"""
from dataclasses import dataclass, field
import os
import re
import numpy as np
from rdp.sources.model import SourceModel

WORKERS_VARIABLE = 'RDP_WORKERS'

_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off')


class ConfigError(ValueError):
    """
        Malformed config file or environment override (an argument error)
    """
    pass


@dataclass(frozen=True)
class RunConfig:
    """
        Effective configuration of one CLI run after defaulting: subcommand, source, output path, worker
        count and the remaining subcommand parameters
    """
    command: str
    source: SourceModel
    output: str
    workers: int = 1
    params: dict = field(default_factory=dict)

    def as_dict(self):
        """
            JSON compatible echo of the configuration (grids as lists, sources as parse strings)
        """
        echo = dict(command=self.command, source=self.source.to_string(), output=self.output,
                    workers=self.workers)
        echo.update({key: _jsonable(value) for key, value in sorted(self.params.items())})
        return echo


def _jsonable(value):
    if isinstance(value, SourceModel):
        return value.to_string()
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


def read_config_file(path):
    """
        Reads key=value lines. Blank lines and lines starting with '#' are ignored, '-' in keys is read
        as '_'.
    :param path: Path of the config file
    :return: dict of raw string values
    """
    values = {}
    try:
        with open(path, 'r') as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise ConfigError('Cannot read config file {}: {}'.format(path, e))
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if '=' not in line:
            raise ConfigError('{}:{}: expected key=value, got {!r}'.format(path, number, line))
        key, value = line.split('=', 1)
        key = key.strip().lstrip('-').replace('-', '_')
        if not re.fullmatch(r'[a-z_][a-z0-9_]*', key):
            raise ConfigError('{}:{}: invalid key {!r}'.format(path, number, key))
        values[key] = value.strip()
    return values


def parse_bool(text):
    text = str(text).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise ConfigError('Expected a boolean, got {!r}'.format(text))


def workers_override(default, environ=None):
    """
        Worker count from RDP_WORKERS if set (must be a positive integer), else default
    """
    environ = os.environ if environ is None else environ
    value = environ.get(WORKERS_VARIABLE, '').strip()
    if not value:
        return default
    try:
        workers = int(value)
    except ValueError:
        raise ConfigError('{} must be a positive integer, got {!r}'.format(WORKERS_VARIABLE, value))
    if workers < 1:
        raise ConfigError('{} must be a positive integer, got {!r}'.format(WORKERS_VARIABLE, value))
    return workers
