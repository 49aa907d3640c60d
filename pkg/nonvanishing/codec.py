"""
Exact JSON encoding of dossiers.

Integers, including integral Fractions, are written as plain numbers. Any
other Fraction is written as {"num": ..., "den": ...} with den > 1 in lowest
terms, which Fraction guarantees. Mappings keep their insertion order so
output is byte-stable.
"""

import json
from fractions import Fraction
from typing import Any

from .errors import InvalidArgument

RATIONAL_KEYS = {"num", "den"}


def encode(value: Any) -> Any:
    """Turn a dossier value into JSON-ready data."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, dict):
        return {str(key): encode(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(item) for item in value]
    raise InvalidArgument(f"cannot encode {type(value).__name__} value {value!r} exactly")


def decode(value: Any) -> Any:
    """Inverse of `encode`."""
    if isinstance(value, dict):
        if set(value) == RATIONAL_KEYS:
            return Fraction(value["num"], value["den"])
        return {key: decode(item) for key, item in value.items()}
    if isinstance(value, list):
        return [decode(item) for item in value]
    if isinstance(value, float):
        raise InvalidArgument(f"inexact number {value} in dossier JSON")
    return value


def render_json(data: Any) -> str:
    return json.dumps(encode(data), indent=2)


def parse_json(text: str) -> Any:
    return decode(json.loads(text))
