"""Logging utilities for construction runs, sweeps and rendered figures."""
import json
import re
from datetime import datetime
from pathlib import Path

from .config import get_log_dir, load_config

# When set, log files go under <log dir>/<_run_log_subdir>/ instead of <log dir>/
_run_log_subdir: str | None = None
# Overrides the configured log dir (tests point this at a tmp path)
_log_dir_override: Path | None = None


def set_run_log_subdir(subdir: str | None) -> None:
    """Set the run subdirectory for this process. All subsequent log_* calls write under logs/<subdir>/."""
    global _run_log_subdir
    _run_log_subdir = subdir


def set_log_dir(path: Path | None) -> None:
    """Redirect all log records to path (None restores the configured log_dir)."""
    global _log_dir_override
    _log_dir_override = Path(path) if path is not None else None


def _logging_enabled() -> bool:
    return bool(load_config().get("log_runs", True))


def _ensure_logs_dir() -> Path:
    """Ensure logs directory exists and return its path. Uses run subdir if set."""
    base = _log_dir_override or get_log_dir()
    logs_dir = base / _run_log_subdir if _run_log_subdir else base
    logs_dir.mkdir(parents=True, exist_ok=True)
    return logs_dir


def _safe_filename(s: str, max_len: int = 50) -> str:
    """Create a filesystem-safe slug from a string."""
    slug = re.sub(r"[^\w\s-]", "", s)[:max_len].strip()
    slug = re.sub(r"[-\s]+", "_", slug)
    return slug or "unnamed"


def _write_record(prefix: str, name: str, payload: dict) -> Path | None:
    if not _logging_enabled():
        return None
    logs_dir = _ensure_logs_dir()
    ts = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
    filename = f"{prefix}_{_safe_filename(name, 40)}_{ts}.json"
    path = logs_dir / filename
    payload = {**payload, "timestamp": datetime.now().isoformat()}
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, ensure_ascii=False, default=str)
    return path


def log_execution(
    program: str,
    bindings: dict,
    status: str,
    *,
    backend: str = "",
    failed_step: int | None = None,
    extra: dict | None = None,
) -> Path | None:
    """
    Save one program execution (bindings + outcome) to a log file.
    Returns the path to the created log file, or None when logging is off.
    """
    payload = {
        "program": program,
        "bindings": {k: str(v) for k, v in bindings.items()},
        "backend": backend,
        "status": status,
    }
    if failed_step is not None:
        payload["failed_step"] = failed_step
    if extra:
        payload["extra"] = extra
    return _write_record("run", program, payload)


def log_sweep(
    method: str,
    summary: dict,
    *,
    extra: dict | None = None,
) -> Path | None:
    """
    Save a sweep summary (grid, pass counts, max residual, exclusions, fixed points).
    Returns the path to the created log file, or None when logging is off.
    """
    payload = {"method": method, "summary": summary}
    if extra:
        payload["extra"] = extra
    return _write_record("sweep", method, payload)


def log_render(name: str, out_path: Path, size_bytes: int) -> Path | None:
    """Record where a figure was written and how large it is."""
    payload = {"figure": name, "out_path": str(out_path), "bytes": size_bytes}
    return _write_record("render", name, payload)
