# core/logging_setup.py
import logging
import sys
from .config import LOG_FILE_PATH, LOG_LEVEL

LOGGER_NAME = "quotnef"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(lineno)d - %(message)s'

_configured_loggers = set()


def _resolve_level(level):
    numeric_level = getattr(logging, str(level).upper(), None)
    return numeric_level if isinstance(numeric_level, int) else None


def setup_logging(level=None, log_file_path=LOG_FILE_PATH, name=LOGGER_NAME):
    """
    Configures the toolkit logger once. Console records go to stderr because
    stdout carries JSON, SVG and TikZ output; QUOTNEF_LOG_FILE adds a file sink.
    """
    package_logger = logging.getLogger(name)
    if name in _configured_loggers:
        return package_logger

    numeric_level = _resolve_level(level or LOG_LEVEL)
    if numeric_level is None:
        logging.warning(f"Invalid log level: {level or LOG_LEVEL}. Falling back to WARNING.")
        numeric_level = logging.WARNING
    package_logger.setLevel(numeric_level)
    package_logger.propagate = False

    formatter = logging.Formatter(LOG_FORMAT)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    package_logger.addHandler(console_handler)

    if log_file_path:
        try:
            file_handler = logging.FileHandler(log_file_path, mode='a', encoding='utf-8')
            file_handler.setFormatter(formatter)
            package_logger.addHandler(file_handler)
        except OSError as e:
            package_logger.error(f"Failed to open log file {log_file_path}: {e}", exc_info=True)

    _configured_loggers.add(name)
    return package_logger


logger = setup_logging()


def set_log_level(level):
    numeric_level = _resolve_level(level)
    if numeric_level is None:
        logger.warning(f"Ignoring invalid log level {level!r}.")
        return
    logger.setLevel(numeric_level)


def handle_global_exception(exc_type, exc_value, exc_traceback):
    """Logs uncaught exceptions before the interpreter exits."""
    if issubclass(exc_type, KeyboardInterrupt):
        sys.__excepthook__(exc_type, exc_value, exc_traceback)
        return
    logger.critical("Unhandled global exception:", exc_info=(exc_type, exc_value, exc_traceback))
