"""Utility modules for qdeform."""

from .config import (
    QDeformConfig,
    EngineConfig,
    OutputConfig,
    LoggingConfig,
    get_config,
    set_config,
    load_config_from_env
)

# presets import spec_loader; import them directly:
# from .presets import get_preset, is_preset

from .expressions import ExpressionError, parse_group_element, parse_poly, parse_scalar
from .spec_loader import JobSpec, SpecParseError, load_spec, load_spec_async, parse_spec, reorder_components

__all__ = [
    # Configuration
    "QDeformConfig",
    "EngineConfig",
    "OutputConfig",
    "LoggingConfig",
    "get_config",
    "set_config",
    "load_config_from_env",

    # Expressions
    "ExpressionError",
    "parse_group_element",
    "parse_poly",
    "parse_scalar",

    # Job specifications
    "JobSpec",
    "SpecParseError",
    "load_spec",
    "load_spec_async",
    "parse_spec",
    "reorder_components",
]
