"""
Global settings for the shifted W-infinity engine
"""
import json
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from common.errors import InvalidInputError

logger = logging.getLogger(__name__)

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent
CONFIG_DIR = PROJECT_ROOT / "config"
TEMPLATES_DIR = PROJECT_ROOT / "reports" / "templates"

# Config file lookup
CONFIG_ENV_VAR = "WINF_CONFIG"
DEFAULT_CONFIG_FILE = CONFIG_DIR / "winf.conf"

# Logging settings
LOG_LEVEL = os.getenv("WINF_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_FILE = os.getenv("WINF_LOG_FILE", "")

# Output settings
OUTPUT_FORMATS = ("json", "tsv", "pretty")
TSV_VERSION = "v1"


@dataclass(frozen=True)
class EngineSettings:
    """Computation bounds and execution settings"""
    hurwitz_max_n: int = 8
    hurwitz_hard_max_n: int = 12
    hurwitz_max_genus: int = 2
    operator_max_n: int = 6
    closed_form_max_n: int = 8
    genfun_max_n: int = 3
    genfun_max_u: int = 3
    threads: int = 1

    def to_dict(self) -> Dict[str, int]:
        """Convert to dictionary"""
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def with_overrides(self, **overrides: Optional[int]) -> 'EngineSettings':
        """Return a copy with every non-None override applied"""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)


DEFAULT_SETTINGS = EngineSettings()


def _parse_key_value(text: str, source: Path) -> Dict[str, str]:
    """
    Parse key=value lines

    Args:
        text: File content
        source: File path, for diagnostics

    Returns:
        Dictionary of raw string values
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise InvalidInputError(f"{source}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split('=', 1)
        values[key.strip()] = value.strip()
    return values


def load_config(config_file: Path) -> Dict[str, Any]:
    """
    Load configuration from a key=value or JSON file

    Args:
        config_file: Path to the configuration file

    Returns:
        Dictionary of raw configuration values
    """
    try:
        text = config_file.read_text(encoding='utf-8')
    except OSError as e:
        raise InvalidInputError(f"Cannot read config {config_file}: {e}") from e

    if config_file.suffix == '.json':
        try:
            data = json.loads(text)
        except ValueError as e:
            raise InvalidInputError(f"Invalid JSON in {config_file}: {e}") from e
        if not isinstance(data, dict):
            raise InvalidInputError(f"Config {config_file} must hold a JSON object")
        return data

    return _parse_key_value(text, config_file)


def resolve_config_path(explicit: Optional[str] = None) -> Optional[Path]:
    """Pick the config file: explicit flag, then environment, then the shipped winf.conf"""
    if explicit:
        return Path(explicit)
    from_env = os.getenv(CONFIG_ENV_VAR, "")
    if from_env:
        return Path(from_env)
    if DEFAULT_CONFIG_FILE.exists():
        return DEFAULT_CONFIG_FILE
    return None


def load_settings(config_path: Optional[Path] = None) -> EngineSettings:
    """
    Build engine settings from defaults and an optional config file

    Args:
        config_path: Optional configuration file

    Returns:
        EngineSettings instance
    """
    if config_path is None:
        return DEFAULT_SETTINGS

    raw = load_config(config_path)
    known = {f.name for f in fields(EngineSettings)}
    values = {}
    for key, value in raw.items():
        if key not in known:
            logger.warning(f"Ignoring unknown config key '{key}' in {config_path}")
            continue
        try:
            number = int(value)
        except (TypeError, ValueError) as e:
            raise InvalidInputError(f"Config key '{key}' needs an integer, got {value!r}") from e
        if number < 0:
            raise InvalidInputError(f"Config key '{key}' must be nonnegative, got {number}")
        values[key] = number

    logger.info(f"Loaded {len(values)} settings from {config_path}")
    return replace(DEFAULT_SETTINGS, **values)
