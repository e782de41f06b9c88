"""JSON Schemas for every document the command line emits.

Integers that can grow past 2**53 (ranks and sums) are serialized as decimal
strings so that any JSON reader keeps them exact.
"""

from __future__ import annotations

_INT_STRING = {"type": "string", "pattern": "^-?[0-9]+$"}
_ELEMENT = {"type": "array", "items": {"type": "integer", "minimum": 0}}

LABELING = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["graph6", "ranks", "sums", "sum_count"],
    "properties": {
        "graph6": {"type": "string"},
        "ranks": {"type": "array", "items": _INT_STRING},
        "sums": {"type": "array", "items": _INT_STRING},
        "sum_count": {"type": "integer", "minimum": 0},
    },
}

CONSTRUCTION = {
    **LABELING,
    "required": LABELING["required"] + ["claimed", "achieved"],
    "properties": {
        **LABELING["properties"],
        "claimed": {"type": "integer", "minimum": 0},
        "achieved": {"type": "integer", "minimum": 0},
    },
}

CERTIFICATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["graph6", "sum_index", "witness", "lower_evidence", "status", "budget_used"],
    "properties": {
        "graph6": {"type": "string"},
        "sum_index": {"type": ["integer", "null"]},
        "witness": {"oneOf": [LABELING, {"type": "null"}]},
        "lower_evidence": {
            "type": "object",
            "required": ["method"],
            "properties": {"method": {"enum": ["bound", "exhaustion", "none"]}},
        },
        "status": {"enum": ["exact", "unknown"]},
        "budget_used": {"type": "integer", "minimum": 0},
        "bracket": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
    },
}

BOUND_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "max_degree", "chromatic_index_lower", "chromatic_index_upper", "chromatic_index_exact",
        "haslegrave", "trivial_upper", "best_lower", "best_upper", "lower_method", "upper_method",
    ],
    "properties": {
        "chromatic_index_exact": {"type": "boolean"},
        "lower_method": {"type": "string"},
        "upper_method": {"type": "string"},
    },
    "additionalProperties": {"type": ["integer", "boolean", "string"]},
}

TABLE_ENTRY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n", "N", "max_edges", "witness", "lbeg", "ubeg", "turan", "status"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "N": {"type": "integer", "minimum": 1},
        "max_edges": {"type": ["integer", "null"]},
        "witness": {"type": ["string", "null"]},
        "lbeg": {"type": "integer"},
        "ubeg": {"type": "integer"},
        "turan": {"type": "integer"},
        "closed_form": {"type": ["integer", "null"]},
        "conjecture_tight": {"type": ["boolean", "null"]},
        "status": {"enum": ["exact", "empty", "unknown"]},
    },
}

SUBSET_SCAN = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["group", "m", "value", "witness", "status"],
    "properties": {
        "group": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "m": {"type": "integer"},
        "value": {"type": "integer"},
        "witness": {"type": "array", "items": _ELEMENT},
        "status": {"const": "exact"},
        "subsets_examined": {"type": "integer"},
    },
}

SCHEMAS = {
    "labeling": LABELING,
    "construction": CONSTRUCTION,
    "certificate": CERTIFICATE,
    "bound_report": BOUND_REPORT,
    "table_entry": TABLE_ENTRY,
    "subset_scan": SUBSET_SCAN,
}
