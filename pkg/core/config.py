# core/config.py
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import ConfigError

# Output Configuration
DEFAULT_OUTPUT_FORMAT = "json"  # json, table, tikz, svg
OUTPUT_FORMATS = ("json", "table", "tikz", "svg")
RENDER_FORMAT_VERSION = "1"

# Nagata parameter handling
ALLOW_CONJECTURAL_T = False

# Logging Configuration
LOG_LEVEL = os.environ.get("QUOTNEF_LOG_LEVEL", "WARNING")  # DEBUG, INFO, WARNING, ERROR, CRITICAL
LOG_FILE_PATH = os.environ.get("QUOTNEF_LOG_FILE") or None

# Rendering Settings
SVG_VIEWBOX_SIZE = 600
DECIMAL_PLACES = 6

# Batch grid persistence
GRID_DATABASE_URL = "sqlite:///quotnef_grid.sqlite"
DEFAULT_GRID_WORKERS = 1

# Environment variable names
ENV_CONFIG_PATH = "QUOTNEF_CONFIG"
ENV_ALLOW_CONJECTURAL_T = "QUOTNEF_ALLOW_CONJECTURAL_T"

_TRUE_STRINGS = {"1", "true", "yes", "on"}
_FALSE_STRINGS = {"0", "false", "no", "off", ""}


@dataclass(frozen=True)
class TOverride:
    genus: int
    value: Fraction
    provenance: str


@dataclass(frozen=True)
class Settings:
    output_format: str = DEFAULT_OUTPUT_FORMAT
    allow_conjectural_t: bool = ALLOW_CONJECTURAL_T
    database_url: str = GRID_DATABASE_URL
    t_overrides: dict = field(default_factory=dict)
    config_path: str = None

    def t_override_for(self, genus):
        return self.t_overrides.get(genus)


def _parse_bool(raw, source):
    if isinstance(raw, bool):
        return raw
    text = str(raw).strip().lower()
    if text in _TRUE_STRINGS:
        return True
    if text in _FALSE_STRINGS:
        return False
    raise ConfigError(f"Cannot interpret {raw!r} from {source} as a boolean.")


def _parse_t_overrides(table, allow_conjectural_t, source):
    from exactmath import parse_rat
    from services.symprod.nagata import TProvenance

    overrides = {}
    for genus_key, entry in (table or {}).items():
        try:
            genus = int(genus_key)
        except (TypeError, ValueError):
            raise ConfigError(f"t override key {genus_key!r} in {source} is not an integer genus.")
        if not isinstance(entry, dict) or "value" not in entry:
            raise ConfigError(f"t override for g={genus} in {source} needs a 'value' entry.")
        if "provenance" not in entry:
            raise ConfigError(f"t override for g={genus} in {source} carries no provenance tag.")
        try:
            provenance = TProvenance(str(entry["provenance"]).strip().lower())
        except ValueError:
            raise ConfigError(
                f"Unknown provenance {entry['provenance']!r} for g={genus} in {source}; "
                f"expected one of {[p.value for p in TProvenance]}.")
        try:
            value = parse_rat(str(entry["value"]))
        except ValueError as e:
            raise ConfigError(f"t override for g={genus} in {source}: {e}")
        if value <= 0:
            raise ConfigError(f"t override for g={genus} in {source} must be positive, got {value}.")
        if provenance is TProvenance.CONJECTURAL and not allow_conjectural_t:
            raise ConfigError(
                f"Conjectural t override for g={genus} in {source} refused; "
                f"set allow_conjectural_t or pass --allow-conjectural-t.")
        overrides[genus] = TOverride(genus=genus, value=value, provenance=provenance.value)
    return overrides


def read_config_file(path):
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}")
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"Config file {path} is not valid TOML: {e}")


def load_settings(cli_overrides=None, environ=None):
    """
    Resolves settings with precedence CLI flag > environment > config file > built-in.
    cli_overrides maps Settings field names to values; None entries are ignored.
    """
    cli_overrides = {k: v for k, v in (cli_overrides or {}).items() if v is not None}
    environ = os.environ if environ is None else environ

    settings = Settings()
    config_path = cli_overrides.pop("config_path", None) or environ.get(ENV_CONFIG_PATH) or None

    file_data = {}
    if config_path:
        file_data = read_config_file(config_path)
        settings = replace(settings, config_path=config_path)
        if "format" in file_data:
            settings = replace(settings, output_format=str(file_data["format"]))
        if "allow_conjectural_t" in file_data:
            settings = replace(settings, allow_conjectural_t=_parse_bool(file_data["allow_conjectural_t"], config_path))
        if "database_url" in file_data:
            settings = replace(settings, database_url=str(file_data["database_url"]))

    if environ.get(ENV_ALLOW_CONJECTURAL_T) is not None:
        settings = replace(settings, allow_conjectural_t=_parse_bool(environ[ENV_ALLOW_CONJECTURAL_T], ENV_ALLOW_CONJECTURAL_T))

    settings = replace(settings, **cli_overrides)

    if settings.output_format not in OUTPUT_FORMATS:
        raise ConfigError(f"Unknown output format {settings.output_format!r}; expected one of {OUTPUT_FORMATS}.")

    # Overrides are validated last so the final allow_conjectural_t decides refusal.
    if "t_overrides" in file_data:
        overrides = _parse_t_overrides(file_data["t_overrides"], settings.allow_conjectural_t, config_path)
        settings = replace(settings, t_overrides=overrides)
    return settings
