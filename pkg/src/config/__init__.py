"""Configuration management module."""

from .models import LoggingConfig, ScenarioConfig, SweepRange
from .config_manager import ConfigError, ConfigManager

__all__ = ["LoggingConfig", "ScenarioConfig", "SweepRange", "ConfigError", "ConfigManager"]
