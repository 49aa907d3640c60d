"""
Configuration helpers for nonvanishing.

Configuration is a flat mapping. Defaults come from `get_default_config`,
an optional YAML file overrides them, and `validate_config` puts any value
of the wrong type back to its default.
"""

import warnings
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

DEFAULT_CONFIG_FILE = "nonvanishing.yml"


def get_default_config() -> dict:
    """
    Get default configuration values.

    Returns:
        dict: Default configuration
    """
    return {
        'max_k': 100,
        'max_thickening_k': 200,
        'refutation_k': 2,
        'beyond_range': False,
        'search_max_n_factor': 3,
        'html_style': 'monokai',
    }


def validate_config(config: dict) -> dict:
    """
    Validate and sanitize configuration parameters.

    Args:
        config: Configuration dictionary

    Returns:
        dict: Validated configuration
    """
    defaults = get_default_config()
    validated = config.copy()

    for key in ('max_k', 'max_thickening_k', 'search_max_n_factor'):
        value = validated.get(key)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            validated[key] = defaults[key]

    # The refutation needs k >= 2
    value = validated.get('refutation_k')
    if isinstance(value, bool) or not isinstance(value, int) or value < 2:
        validated['refutation_k'] = defaults['refutation_k']

    if not isinstance(validated.get('beyond_range'), bool):
        validated['beyond_range'] = defaults['beyond_range']

    if not isinstance(validated.get('html_style'), str):
        validated['html_style'] = defaults['html_style']

    return validated


def merge_configs(default: dict, user: Optional[dict]) -> dict:
    """
    Merge user configuration with defaults.

    Args:
        default: Default configuration
        user: User-provided configuration

    Returns:
        dict: Merged configuration
    """
    merged = default.copy()

    if user:
        for key, value in user.items():
            if value is not None:  # Only override if user provided a value
                merged[key] = value

    return merged


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a YAML configuration file.

    Unknown keys are dropped with a warning. An empty file yields {}.
    """
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}

    if not isinstance(data, dict):
        warnings.warn(f"Ignoring configuration in {path}: expected a mapping")
        return {}

    known = get_default_config()
    for key in sorted(set(data) - set(known)):
        warnings.warn(f"Unknown configuration key '{key}' in {path}")
    return {key: value for key, value in data.items() if key in known}


def load_config(path: Optional[Union[str, Path]] = None) -> dict:
    """
    Build the effective configuration.

    Args:
        path: Explicit YAML file; when None, `nonvanishing.yml` in the
            working directory is used if it exists

    Returns:
        dict: Defaults overlaid with the file and validated
    """
    if path is None and Path(DEFAULT_CONFIG_FILE).exists():
        path = DEFAULT_CONFIG_FILE

    user = load_config_file(path) if path is not None else {}
    return validate_config(merge_configs(get_default_config(), user))
