"""JSON schemas for the machine-readable outputs.

Three document kinds are emitted: character tables, condition
certificates, and classification reports.  The schemas are plain dicts
in draft 2020-12 form so callers can validate output with any standard
validator.  Integers whose magnitude exceeds 2^53 are serialized as
decimal strings to stay safe for consumers that read JSON numbers as
doubles; `jsonable` applies that rule recursively.
"""
from __future__ import annotations

from fractions import Fraction

__all__ = [
    "jsonable",
    "CHAR_TABLE_SCHEMA",
    "CERTIFICATE_SCHEMA",
    "CLASSIFICATION_SCHEMA",
]

_SAFE_INT = 2**53


def jsonable(value):
    """Recursively convert to JSON-safe types; big ints become strings."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) < _SAFE_INT else str(value)
    if isinstance(value, float) or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


_INT_ARRAY = {"type": "array", "items": {"type": "integer"}}
_BIG_INT = {"type": ["integer", "string"]}

CHAR_TABLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["group", "order", "conductor", "prime", "class_sizes",
                 "class_representatives", "representative_orders",
                 "power_maps", "characters"],
    "properties": {
        "group": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "conductor": {"type": "integer", "minimum": 1},
        "prime": {"type": "integer", "minimum": 2},
        "class_sizes": _INT_ARRAY,
        "class_representatives": _INT_ARRAY,
        "representative_orders": _INT_ARRAY,
        "power_maps": {
            "type": "object",
            "additionalProperties": _INT_ARRAY,
        },
        "characters": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "values"],
                "properties": {
                    "degree": {"type": "integer", "minimum": 1},
                    "values": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["num", "den"],
                            "properties": {
                                "num": _INT_ARRAY,
                                "den": {"type": "integer", "minimum": 1},
                            },
                        },
                    },
                },
            },
        },
    },
}

CERTIFICATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["group", "n", "d", "e", "p", "k", "m", "conditions",
                 "character_degree_check", "passed"],
    "properties": {
        "group": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 0},
        "e": {"type": "integer", "minimum": 0},
        "p": {"type": ["integer", "null"]},
        "k": {"type": ["integer", "null"]},
        "m": {"type": ["integer", "null"]},
        "conditions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "pass", "witness"],
                "properties": {
                    "id": {"type": "string"},
                    "pass": {"type": "boolean"},
                    "witness": {"type": "object"},
                },
            },
        },
        "character_degree_check": {"type": "boolean"},
        "passed": {"type": "boolean"},
    },
}

CLASSIFICATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["e", "mode", "bounds", "cases", "groups", "notes"],
    "properties": {
        "e": {"type": "integer", "minimum": 0},
        "mode": {"type": "string", "enum": ["exhaustive", "family"]},
        "bounds": {"type": "object"},
        "cases": {"type": "array", "items": {"type": "object"}},
        "groups": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "order", "degree"],
                "properties": {
                    "name": {"type": "string"},
                    "order": {"type": "integer"},
                    "degree": {"type": "integer"},
                },
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}
