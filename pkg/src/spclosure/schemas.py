"""JSON schemas for the ``--json`` output of the CLI (schema_version 1)."""

SCHEMA_VERSION = 1

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

CERTIFICATE = {
    "type": "object",
    "required": ["coefficients", "strict_coordinate"],
    "properties": {
        "coefficients": {"type": "array", "items": RATIONAL},
        "strict_coordinate": {"type": ["integer", "null"], "minimum": 1},
    },
    "additionalProperties": False,
}

MEMBERSHIP = {
    "type": "object",
    "required": ["verdict", "monomial"],
    "properties": {
        "verdict": {"enum": ["In", "NotIn"]},
        "monomial": {"type": "string"},
        "certificate": {"anyOf": [CERTIFICATE, {"type": "null"}]},
    },
}

IDEAL = {
    "type": "object",
    "required": ["generators"],
    "properties": {"generators": {"type": "array", "items": {"type": "string"}}},
}

FROBENIUS_VERDICT = {
    "type": "object",
    "required": ["verdict", "kind"],
    "properties": {
        "verdict": {"enum": ["In", "NotInUpTo"]},
        "e": {"type": "integer", "minimum": 0},
        "e_max": {"type": "integer", "minimum": 0},
        "kind": {"enum": ["Closure", "SpecialPart"]},
    },
    "oneOf": [{"required": ["e"]}, {"required": ["e_max"]}],
}

SPREAD_TABLE = {
    "type": "object",
    "required": ["e", "mu", "stable"],
    "properties": {
        "e": {"type": "array", "items": {"type": "integer"}},
        "mu": {"type": "array", "items": {"type": "integer"}},
        "stable": {"type": "boolean"},
    },
}

AXIOM_REPORT = {
    "type": "object",
    "required": ["operation", "instances", "axioms"],
    "properties": {
        "operation": {"type": "string"},
        "instances": {"type": "integer"},
        "axioms": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["pass", "checked", "failures"],
                "properties": {
                    "pass": {"type": "boolean"},
                    "checked": {"type": "integer"},
                    "failures": {
                        "type": "array",
                        "items": {"type": "object", "additionalProperties": {"type": ["string", "integer", "null"]}},
                    },
                },
            },
        },
    },
}

ENVELOPE = {
    "type": "object",
    "required": ["schema_version", "command", "ok", "result"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "ok": {"type": "boolean"},
        "result": {"type": "object"},
    },
}

# which result schema each command's payload follows (None: only the envelope)
RESULT_SCHEMAS = {
    "frobenius": FROBENIUS_VERDICT,
    "special-frobenius": FROBENIUS_VERDICT,
    "f-spread": SPREAD_TABLE,
}
