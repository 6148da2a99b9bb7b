"""Load config.yaml and .env for the construction engine."""
from pathlib import Path
import os
import yaml
from dotenv import load_dotenv

load_dotenv()

_PROJECT_ROOT = Path(__file__).resolve().parent.parent
_config_cache = None

BACKEND_ENV_VAR = "GEOM_BACKEND"


class ConfigError(ValueError):
    """Raised for malformed configuration values (bad GEOM_BACKEND, unknown backend kind)."""


def get_project_root() -> Path:
    return _PROJECT_ROOT


def load_config() -> dict:
    global _config_cache
    if _config_cache is not None:
        return _config_cache
    path = _PROJECT_ROOT / "config.yaml"
    if not path.exists():
        _config_cache = _default_config()
        return _config_cache
    with open(path) as f:
        _config_cache = yaml.safe_load(f) or {}
    for key, default in _default_config().items():
        if key not in _config_cache:
            _config_cache[key] = default
    return _config_cache


def reset_config_cache() -> None:
    """Forget the cached config so the next load_config() re-reads config.yaml."""
    global _config_cache
    _config_cache = None


def _default_config() -> dict:
    return {
        "backend": "machine",
        "precision_bits": 256,
        "eps": None,
        "tolerance_deg": 1e-9,
        "length_tolerance_rel": 1e-12,
        "fixed_point_tolerance_deg": 1e-12,
        "workers": 1,
        "log_runs": True,
        "log_dir": "logs",
        "constructions_dir": "constructions",
        "sweep": {
            "method1": {"start": 1, "stop": 59, "step": 0.5},
            "method2": {"start": 61, "stop": 89, "step": 0.5},
            "method3": {"start": 1, "stop": 89, "step": 0.5},
        },
        "render": {
            "width": 800,
            "height": 600,
            "margin": 40,
            "stroke_width": 1.5,
            "font_size": 14,
        },
    }


def _resolve(path_value: str) -> Path:
    p = Path(path_value)
    if not p.is_absolute():
        p = _PROJECT_ROOT / p
    return p


def get_constructions_dir() -> Path:
    """Directory holding the shipped .gcs scripts."""
    cfg = load_config()
    return _resolve(cfg.get("constructions_dir", "constructions"))


def get_log_dir() -> Path:
    cfg = load_config()
    return _resolve(cfg.get("log_dir", "logs"))


def get_backend_spec() -> tuple[str, int] | None:
    """
    Parse GEOM_BACKEND ("machine" or "bigfloat:<bits>"). Returns (kind, bits) or None when unset.
    """
    raw = os.environ.get(BACKEND_ENV_VAR, "").strip()
    if not raw:
        return None
    kind, _, bits = raw.partition(":")
    kind = kind.strip().lower()
    if kind == "machine":
        return "machine", 53
    if kind == "bigfloat":
        cfg = load_config()
        if not bits:
            return "bigfloat", int(cfg.get("precision_bits", 256))
        try:
            return "bigfloat", int(bits)
        except ValueError:
            raise ConfigError(f"{BACKEND_ENV_VAR}: precision must be an integer, got {bits!r}") from None
    raise ConfigError(f"{BACKEND_ENV_VAR}: expected machine or bigfloat:<bits>, got {raw!r}")


def get_sweep_defaults(method_key: str) -> dict:
    """Default (start, stop, step) grid for a method key like 'method1'."""
    cfg = load_config()
    sweeps = cfg.get("sweep") or {}
    defaults = _default_config()["sweep"]
    return sweeps.get(method_key) or defaults[method_key]
