from rdp.cli.config import RunConfig, ConfigError, read_config_file, WORKERS_VARIABLE
from rdp.cli.main import run, main, build_parser
