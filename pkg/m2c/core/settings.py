import os
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .singleton import singleton
from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULTS: Dict[str, Any] = {
    "depth": 2,
    "threads": min(8, os.cpu_count() or 1),
    "fail_fast": False,
    "report": "text",
    "fillers": "phi",
}

_TYPES = {
    "depth": int,
    "threads": int,
    "fail_fast": bool,
    "report": str,
    "fillers": str,
}

_CHOICES = {
    "report": {"text", "json"},
    "fillers": {"phi", "kv"},
}


@singleton
class Settings:
    """
    Run configuration shared by the suite and the command line.
    Values are layered: defaults, then an optional YAML file, then the environment,
    then explicit overrides from the command line.
    """

    def __init__(self, configPath: Optional[str] = None):
        self.values: Dict[str, Any] = dict(DEFAULTS)
        self.threadCap: Optional[int] = None

        threads = os.environ.get("M2C_THREADS")
        if threads is not None:
            try:
                self.threadCap = int(threads)
            except ValueError:
                raise ConfigError(f"M2C_THREADS must be an integer, got {threads!r}")
            if self.threadCap < 1:
                raise ConfigError("M2C_THREADS must be at least 1")
            self.values["threads"] = min(self.values["threads"], self.threadCap)

        path = configPath or os.environ.get("M2C_CONFIG")
        if path is None and Path("m2c.yaml").exists():
            path = "m2c.yaml"
        if path is not None:
            self.loadFile(path)

    def loadFile(self, path: str) -> None:
        """Merge a YAML mapping into the current values."""
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except (yaml.YAMLError, OSError) as e:
            raise ConfigError(f"Could not load config {path}: {e}")

        if not isinstance(data, dict):
            raise ConfigError(f"Config {path} must hold a mapping")
        self.update(**data)
        logger.info("Loaded config '%s'.", path)

    def update(self, **overrides: Any) -> None:
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in _TYPES:
                raise ConfigError(f"Unknown config key: {key}")
            expected = _TYPES[key]
            # bool is an int subclass; keep them apart
            if not isinstance(value, expected) or (expected is int and isinstance(value, bool)):
                raise ConfigError(f"Config key {key} expects {expected.__name__}, got {value!r}")
            if key in _CHOICES and value not in _CHOICES[key]:
                raise ConfigError(f"Config key {key} must be one of {sorted(_CHOICES[key])}")
            if key in ("depth", "threads") and value < 1:
                raise ConfigError(f"Config key {key} must be at least 1")
            if key == "threads" and self.threadCap is not None:
                value = min(value, self.threadCap)
            self.values[key] = value

    def get(self, key: str) -> Any:
        return self.values[key]

    @property
    def depth(self) -> int:
        return self.values["depth"]

    @property
    def threads(self) -> int:
        return self.values["threads"]

    @property
    def failFast(self) -> bool:
        return self.values["fail_fast"]

    @property
    def report(self) -> str:
        return self.values["report"]

    @property
    def fillers(self) -> str:
        return self.values["fillers"]
