from .config import *
from .errors import *
from .logging_setup import logger, setup_logging, set_log_level, handle_global_exception

__all__ = [
    # From config
    "DEFAULT_OUTPUT_FORMAT", "OUTPUT_FORMATS", "ALLOW_CONJECTURAL_T", "LOG_LEVEL", "LOG_FILE_PATH",
    "SVG_VIEWBOX_SIZE", "DECIMAL_PLACES", "GRID_DATABASE_URL", "RENDER_FORMAT_VERSION",
    "Settings", "TOverride", "load_settings",
    # From errors
    "QuotNefError", "DimensionMismatchError", "UnsupportedDimensionError", "ZeroGeneratorError",
    "InvalidParamsError", "InvalidBasisError", "InvalidCurveError", "NoUpperBoundError",
    "HypothesisError", "ConfigError", "ClassParseError",
    # From logging_setup
    "logger", "setup_logging", "set_log_level", "handle_global_exception",
]
