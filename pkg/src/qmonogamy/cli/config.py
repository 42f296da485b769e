"""
Command configuration: YAML defaults merged under command-line flags
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from loguru import logger

from ..error_handler import InvalidInputError

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[3] / "config" / "config.yaml"


class Command(Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"
    LEMMAS = "lemmas"
    SWEEP_STATES = "sweep-states"
    SWEEP_VECTORS = "sweep-vectors"
    FAMILY = "family"
    SCAN = "scan"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


def load_defaults(path: Optional[Union[str, Path]] = None) -> Dict[str, Dict[str, Any]]:
    """Per-command defaults from a YAML file; a missing default file yields no defaults"""
    explicit = path is not None
    path = Path(path) if explicit else DEFAULT_CONFIG_PATH
    if not path.exists():
        if explicit:
            raise InvalidInputError(f"config file not found: {path}")
        logger.debug(f"No default config at {path}")
        return {}
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise InvalidInputError(f"could not parse config file {path}: {e}") from e
    if not isinstance(data, dict) or not all(isinstance(v, dict) for v in data.values()):
        raise InvalidInputError(f"config file {path} must map command names to parameter tables")
    logger.debug(f"Loaded defaults for {sorted(data)} from {path}")
    return data


@dataclass
class CliConfig:
    """Fully resolved parameters of one command invocation"""
    command: Command
    output_path: Optional[Path]
    format: OutputFormat
    seed: int
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.command = Command(self.command)
        self.format = OutputFormat(self.format)
        if self.output_path is not None:
            self.output_path = Path(self.output_path)
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidInputError(f"--seed must be an unsigned 64-bit integer, got {self.seed}")

    def echo(self) -> Dict[str, Any]:
        """Resolved parameters as written into JSON output"""
        return {"command": self.command.value, "format": self.format.value, "seed": self.seed, **self.params}
