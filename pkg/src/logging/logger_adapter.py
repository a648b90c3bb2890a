"""Logger adapter to make stdlib loggers compatible with the SimLogger interface."""

from typing import Any, Dict, Optional

from .sim_logger import run_report_entries


class LoggerAdapter:
    """Adapter giving any logger the ``log_*`` interface of SimLogger.

    Sweep workers run in separate processes and cannot share the parent's
    SimLogger instance, so they wrap the stdlib logger of the same name with this.
    """

    def __init__(self, logger):
        """Initialize the adapter with any logger.

        Args:
            logger: Any logger object (SimLogger, Python logger, etc.)
        """
        self.logger = logger

    def log_info(self, message: str, context: Optional[Dict[str, Any]] = None):
        if hasattr(self.logger, "log_info"):
            self.logger.log_info(message, context)
        elif hasattr(self.logger, "info"):
            self.logger.info(f"{message}{self._format_context(context)}")

    def log_warning(self, message: str, context: Optional[Dict[str, Any]] = None):
        if hasattr(self.logger, "log_warning"):
            self.logger.log_warning(message, context)
        elif hasattr(self.logger, "warning"):
            self.logger.warning(f"{message}{self._format_context(context)}")

    def log_error(
        self,
        message: str,
        error: Optional[Exception] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        if hasattr(self.logger, "log_error"):
            self.logger.log_error(message, error, context)
        elif hasattr(self.logger, "error"):
            error_str = f" | Error: {type(error).__name__}: {str(error)}" if error else ""
            self.logger.error(f"{message}{self._format_context(context)}{error_str}")

    def log_debug(self, message: str, context: Optional[Dict[str, Any]] = None):
        if hasattr(self.logger, "log_debug"):
            self.logger.log_debug(message, context)
        elif hasattr(self.logger, "debug"):
            self.logger.debug(f"{message}{self._format_context(context)}")

    def log_run_report(self, result: Any):
        if hasattr(self.logger, "log_run_report"):
            self.logger.log_run_report(result)
        else:
            for message, context in run_report_entries(result):
                self.log_info(message, context)

    def _format_context(self, context: Optional[Dict[str, Any]]) -> str:
        if not context:
            return ""
        return " | " + " | ".join(f"{key}={value}" for key, value in context.items())
