"""Configuration manager for loading and validating scenario configuration."""

import json
import os
import re
from dataclasses import fields
from typing import Any, Dict, List, Optional

from .models import (
    PI_RANGE,
    ST_INTENSITY_RANGE,
    SWEEPABLE_KEYS,
    LoggingConfig,
    ScenarioConfig,
    SweepRange,
    sweep_values,
)


class ConfigError(ValueError):
    """Raised when a configuration document is malformed or invalid."""


INT_KEYS = (
    "switches",
    "cycle_time_ns",
    "st_window_ns",
    "ttl",
    "be_intensity_bps",
    "st_frame_bytes",
    "be_frame_bytes",
    "queue_bits",
    "link_rate_bps",
    "sim_limit_ns",
    "warmup_ns",
    "source_phase_offset_ns",
    "seed",
    "replications",
)
FLOAT_KEYS = ("reservation_fraction", "hurst")
STR_KEYS = ("scheduler", "st_kind")
OPTIONAL_INT_KEYS = ("stream_duration_ns",)
LOGGING_KEYS = ("level", "file_path")

KNOWN_KEYS = set(INT_KEYS + FLOAT_KEYS + STR_KEYS + OPTIONAL_INT_KEYS + SWEEPABLE_KEYS) | {
    "logging"
}


class ConfigManager:
    """Manages loading, validation and dumping of scenario configuration."""

    def __init__(self, logger: Optional[Any] = None):
        """Initialize the ConfigManager.

        Args:
            logger: Optional logger receiving range warnings
        """
        self.logger = logger
        self.warnings: List[str] = []

    def load_config(self, config_path: str) -> ScenarioConfig:
        """Load configuration from a JSON file.

        Args:
            config_path: Path to the configuration file

        Returns:
            ScenarioConfig with defaults filled in

        Raises:
            FileNotFoundError: If config file doesn't exist
            ConfigError: If the document is malformed or invalid
        """
        if not os.path.exists(config_path):
            raise FileNotFoundError(
                f"Configuration file not found: {config_path}\n"
                f"Please create a configuration file at this location."
            )

        with open(config_path, "r") as f:
            text = f.read()
        return self.parse_config(text)

    def parse_config(self, text: str) -> ScenarioConfig:
        """Parse a JSON configuration document.

        An empty document yields the full default configuration.

        Args:
            text: JSON document

        Returns:
            Validated ScenarioConfig

        Raises:
            ConfigError: With a ``line N:`` prefix locating the offending key
        """
        self.warnings = []
        if not text.strip():
            data: Dict[str, Any] = {}
        else:
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise ConfigError(f"line {e.lineno}: Invalid JSON format: {e.msg}") from e

        if not isinstance(data, dict):
            raise ConfigError("line 1: Configuration document must be a JSON object")

        data = self._substitute_env_vars(data)

        for key in data:
            if key not in KNOWN_KEYS:
                raise ConfigError(f"line {_locate_key(text, key)}: Unknown configuration key '{key}'")

        kwargs: Dict[str, Any] = {}
        for key, value in data.items():
            try:
                kwargs.update(self._convert(key, value, text))
            except (ValueError, TypeError) as e:
                if isinstance(e, ConfigError):
                    raise
                raise ConfigError(f"line {_locate_key(text, key)}: {key}: {e}") from e

        config = ScenarioConfig(**kwargs)

        is_valid, error_message = config.validate()
        if not is_valid:
            raise ConfigError(
                f"line {self._blame_line(text, error_message)}: "
                f"Configuration validation error: {error_message}"
            )

        self._check_experiment_ranges(config)
        return config

    def dump_config(self, config: ScenarioConfig) -> str:
        """Render a configuration as a JSON document that parses back to it.

        Args:
            config: Configuration to render

        Returns:
            Indented JSON text
        """
        data: Dict[str, Any] = {}
        for f in fields(config):
            value = getattr(config, f.name)
            if f.name == "logging_config":
                data["logging"] = {"level": value.level, "file_path": value.file_path}
            elif isinstance(value, SweepRange):
                data[f.name] = value.to_json()
            else:
                data[f.name] = value
        return json.dumps(data, indent=2)

    def _convert(self, key: str, value: Any, text: str) -> Dict[str, Any]:
        """Convert one document entry into ScenarioConfig keyword arguments."""
        if key == "logging":
            if not isinstance(value, dict):
                raise TypeError("expected an object")
            for sub_key in value:
                if sub_key not in LOGGING_KEYS:
                    raise ConfigError(
                        f"line {_locate_key(text, sub_key)}: Unknown logging key '{sub_key}'"
                    )
            defaults = LoggingConfig()
            return {
                "logging_config": LoggingConfig(
                    level=str(value.get("level", defaults.level)),
                    file_path=str(value.get("file_path", defaults.file_path)),
                )
            }
        if key in SWEEPABLE_KEYS:
            return {key: _to_sweepable(value)}
        if key in INT_KEYS:
            return {key: _to_int(value)}
        if key in OPTIONAL_INT_KEYS:
            return {key: None if value is None else _to_int(value)}
        if key in FLOAT_KEYS:
            return {key: _to_float(value)}
        if not isinstance(value, str):
            raise TypeError("expected a string")
        return {key: value.lower()}

    def _substitute_env_vars(self, data):
        """Recursively substitute environment variables in configuration data.

        Environment variables should be in the format ${VAR_NAME}.

        Args:
            data: Configuration data (dict, list, or string)

        Returns:
            Data with environment variables substituted
        """
        if isinstance(data, dict):
            return {key: self._substitute_env_vars(value) for key, value in data.items()}
        elif isinstance(data, list):
            return [self._substitute_env_vars(item) for item in data]
        elif isinstance(data, str):
            pattern = r"\$\{([^}]+)\}"
            result = data
            for var_name in re.findall(pattern, data):
                result = result.replace(f"${{{var_name}}}", os.environ.get(var_name, ""))
            return result
        else:
            return data

    def _check_experiment_ranges(self, config: ScenarioConfig) -> None:
        """Warn about values outside the experiment ranges (still accepted)."""
        low, high = PI_RANGE
        outside = [v for v in sweep_values(config.pi) if not low <= v <= high]
        if outside:
            self._warn(f"pi values {outside} lie outside the experiment range {list(PI_RANGE)}")

        low, high = ST_INTENSITY_RANGE
        outside = [v for v in sweep_values(config.st_intensity_bps) if not low <= v <= high]
        if outside and config.st_kind == "sporadic":
            self._warn(
                f"st_intensity_bps values {outside} lie outside the experiment range "
                f"{list(ST_INTENSITY_RANGE)}"
            )

    def _warn(self, message: str) -> None:
        self.warnings.append(message)
        if self.logger:
            self.logger.log_warning(message)

    def _blame_line(self, text: str, error_message: str) -> int:
        """Best-effort line of the key a validation message refers to."""
        candidates = sorted(KNOWN_KEYS | set(LOGGING_KEYS), key=len, reverse=True)
        for key in candidates:
            if re.search(r"\b%s\b" % re.escape(key), error_message, re.IGNORECASE):
                return _locate_key(text, key)
        return 1


def _locate_key(text: str, key: str) -> int:
    """Return the 1-based line where ``"key"`` first appears, or 1."""
    match = re.search(r'"%s"\s*:' % re.escape(key), text)
    if match is None:
        return 1
    return text.count("\n", 0, match.start()) + 1


def _to_int(value: Any) -> int:
    if isinstance(value, bool):
        raise TypeError("expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"expected an integer, got {value}")
        return int(value)
    if isinstance(value, str):
        return int(value.strip())
    raise TypeError(f"expected an integer, got {type(value).__name__}")


def _to_float(value: Any) -> float:
    if isinstance(value, bool):
        raise TypeError("expected a number, got a boolean")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        return float(value.strip())
    raise TypeError(f"expected a number, got {type(value).__name__}")


def _to_sweepable(value: Any):
    """Convert a scalar, a list of values or a {from, to, step} object."""
    if isinstance(value, list):
        if not value:
            raise ValueError("sweep value list is empty")
        return SweepRange(explicit=tuple(_to_int(v) for v in value))
    if isinstance(value, dict):
        unknown = set(value) - {"from", "to", "step"}
        if unknown:
            raise ValueError(f"unknown sweep range keys {sorted(unknown)}")
        if "from" not in value or "to" not in value:
            raise ValueError("sweep range requires 'from' and 'to'")
        sweep = SweepRange(
            start=_to_int(value["from"]),
            stop=_to_int(value["to"]),
            step=_to_int(value.get("step", 1)),
        )
        is_valid, error = sweep.validate()
        if not is_valid:
            raise ValueError(error)
        return sweep
    return _to_int(value)
