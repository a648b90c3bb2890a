"""Simulation logger with structured key=value context."""

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.config.models import LoggingConfig

LOGGER_NAME = "TsnSim"


def run_report_entries(result: Any) -> List[Tuple[str, Dict[str, Any]]]:
    """Messages and contexts describing one finished ScenarioResult."""
    entries = [
        (
            f"Run complete: {result.scheduler}",
            {
                "clock_ns": result.clock,
                "events": result.events_processed,
                "purged": result.purge_count,
                "overflow": result.overflow_count,
                "carryover": result.carryover_count,
                "transmitted": result.frames_transmitted,
                "max_link_util": f"{max(result.link_utilization.values(), default=0.0):.3f}",
            },
        )
    ]
    for row in result.class_rows:
        entries.append(
            (
                f"  - {row.klass}",
                {
                    "count": row.count,
                    "mean_ns": "-" if row.mean_delay_ns is None else f"{row.mean_delay_ns:.0f}",
                    "max_ns": "-" if row.max_delay_ns is None else row.max_delay_ns,
                    "loss": f"{row.loss_ratio:.6f}",
                },
            )
        )
    return entries


class SimLogger:
    """Logger for simulation runs and sweeps with structured context."""

    def __init__(self, config: LoggingConfig, name: str = LOGGER_NAME):
        """Initialize the simulation logger.

        Args:
            config: Logging configuration
            name: Name of the underlying stdlib logger
        """
        self.config = config
        self.logger = logging.getLogger(name)
        self.logger.setLevel(getattr(logging, config.level.upper()))

        # Remove existing handlers to avoid duplicates
        self.logger.handlers.clear()

        formatter = logging.Formatter(
            "[%(asctime)s] [%(levelname)s] %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
        )

        log_path = Path(config.file_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = RotatingFileHandler(
            config.file_path, maxBytes=10 * 1024 * 1024, backupCount=5  # 10 MB
        )
        file_handler.setLevel(getattr(logging, config.level.upper()))
        file_handler.setFormatter(formatter)
        self.logger.addHandler(file_handler)

        console_handler = logging.StreamHandler()
        console_handler.setLevel(getattr(logging, config.level.upper()))
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

    def _format_context(self, context: Optional[Dict[str, Any]]) -> str:
        """Format context dictionary for logging.

        Args:
            context: Context dictionary

        Returns:
            Formatted context string
        """
        if not context:
            return ""
        return " | " + " | ".join(f"{key}={value}" for key, value in context.items())

    def log_info(self, message: str, context: Optional[Dict[str, Any]] = None):
        """Log an info message.

        Args:
            message: Log message
            context: Optional context dictionary for structured data
        """
        self.logger.info(f"{message}{self._format_context(context)}")

    def log_warning(self, message: str, context: Optional[Dict[str, Any]] = None):
        """Log a warning message.

        Args:
            message: Log message
            context: Optional context dictionary for structured data
        """
        self.logger.warning(f"{message}{self._format_context(context)}")

    def log_error(
        self,
        message: str,
        error: Optional[Exception] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        """Log an error message.

        Args:
            message: Log message
            error: Optional exception object
            context: Optional context dictionary for structured data
        """
        context_str = self._format_context(context)
        if error:
            error_info = f" | Error: {type(error).__name__}: {str(error)}"
            self.logger.error(f"{message}{context_str}{error_info}", exc_info=True)
        else:
            self.logger.error(f"{message}{context_str}")

    def log_debug(self, message: str, context: Optional[Dict[str, Any]] = None):
        """Log a debug message.

        Args:
            message: Log message
            context: Optional context dictionary for structured data
        """
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug(f"{message}{self._format_context(context)}")

    def log_critical(
        self,
        message: str,
        error: Optional[Exception] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        """Log a critical error message.

        Args:
            message: Log message
            error: Optional exception object
            context: Optional context dictionary for structured data
        """
        context_str = self._format_context(context)
        if error:
            error_info = f" | Error: {type(error).__name__}: {str(error)}"
            self.logger.critical(f"{message}{context_str}{error_info}", exc_info=True)
        else:
            self.logger.critical(f"{message}{context_str}")

    def log_run_report(self, result: Any):
        """Log the outcome of one scenario run.

        Args:
            result: ScenarioResult of the finished run
        """
        for message, context in run_report_entries(result):
            self.log_info(message, context)

    def log_sweep_summary(self, summary: Any):
        """Log the summary of a parameter sweep.

        Args:
            summary: SweepSummary of the finished sweep
        """
        self.log_info(
            "Sweep complete",
            {
                "points": summary.points,
                "runs": summary.runs,
                "rows": summary.rows,
                "workers": summary.workers,
                "wall_s": f"{summary.wall_seconds:.2f}",
            },
        )
