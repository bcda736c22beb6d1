"""Configuration management for qdeform."""

import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Mapping, Optional


@dataclass
class EngineConfig:
    """Degree bounds used when a command gives none."""
    default_degree: int = 6
    hopf_degree: int = 4
    cocycle_degree: int = 3
    double_degree: int = 5
    confluence_degree: int = 5
    root_of_unity_degree: int = 10


@dataclass
class OutputConfig:
    """Report rendering."""
    verbose: bool = False
    use_color: bool = False


@dataclass
class LoggingConfig:
    """Logging configuration."""
    level: str = "INFO"
    log_dir: Optional[str] = None
    enabled: bool = True
    backup_count: int = 7
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


_ENV_KEYS = {
    "QDEFORM_DEFAULT_DEGREE": ("engine", "default_degree"),
    "QDEFORM_HOPF_DEGREE": ("engine", "hopf_degree"),
    "QDEFORM_COCYCLE_DEGREE": ("engine", "cocycle_degree"),
    "QDEFORM_DOUBLE_DEGREE": ("engine", "double_degree"),
    "QDEFORM_CONFLUENCE_DEGREE": ("engine", "confluence_degree"),
    "QDEFORM_ROOT_OF_UNITY_DEGREE": ("engine", "root_of_unity_degree"),
    "QDEFORM_VERBOSE": ("output", "verbose"),
    "QDEFORM_USE_COLOR": ("output", "use_color"),
    "QDEFORM_LOG_LEVEL": ("logging", "level"),
    "QDEFORM_LOG_DIR": ("logging", "log_dir"),
    "QDEFORM_LOG_ENABLED": ("logging", "enabled"),
}


def _coerce(raw: str, current: Any) -> Any:
    if isinstance(current, bool):
        return raw.strip().lower() in ("1", "true", "yes", "on")
    if isinstance(current, int):
        return int(raw)
    return raw


class QDeformConfig:
    """Main configuration class for qdeform."""

    def __init__(self):
        self.engine = EngineConfig()
        self.output = OutputConfig()
        self.logging = LoggingConfig()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "engine": asdict(self.engine),
            "output": asdict(self.output),
            "logging": asdict(self.logging),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QDeformConfig":
        config = cls()
        if "engine" in data:
            config.engine = EngineConfig(**data["engine"])
        if "output" in data:
            config.output = OutputConfig(**data["output"])
        if "logging" in data:
            config.logging = LoggingConfig(**data["logging"])
        return config

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "QDeformConfig":
        """Defaults overridden by QDEFORM_* variables."""
        environ = os.environ if environ is None else environ
        config = cls()
        for key, (section, name) in _ENV_KEYS.items():
            raw = environ.get(key)
            if raw is None or raw == "":
                continue
            target = getattr(config, section)
            field_types = {f.name for f in fields(target)}
            if name in field_types:
                current = getattr(target, name)
                setattr(target, name, raw if current is None else _coerce(raw, current))
        return config


# Global configuration instance
_config: Optional[QDeformConfig] = None


def get_config() -> QDeformConfig:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = QDeformConfig()
    return _config


def set_config(config: QDeformConfig):
    """Set the global configuration instance."""
    global _config
    _config = config


def load_config_from_env(environ: Optional[Mapping[str, str]] = None) -> QDeformConfig:
    """Build the configuration from the environment and set it as global."""
    config = QDeformConfig.from_env(environ)
    set_config(config)
    return config
