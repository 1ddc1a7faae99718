//! JSON Schemas for the input documents and the report.

use serde_json::{json, Value};

/// Which document to describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SchemaKind {
    Algebra,
    Monoid,
    Report,
}

const DRAFT: &str = "https://json-schema.org/draft/2020-12/schema";

fn check_report() -> Value {
    json!({
        "type": "object",
        "required": ["name", "status", "cases"],
        "properties": {
            "name": {"type": "string"},
            "status": {"enum": ["pass", "fail", "undecided"]},
            "cases": {"type": "integer", "minimum": 0},
            "witness": {"type": "string"},
            "note": {"type": "string"},
            "homology": {"type": "object", "additionalProperties": {"type": "integer"}}
        }
    })
}

fn defs() -> Value {
    json!({
        "coeff": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
        "vector": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "coeff"],
                "properties": {"label": {"type": "string"}, "coeff": {"$ref": "#/$defs/coeff"}}
            }
        },
        "operator": {
            "type": "object",
            "required": ["index", "n", "images"],
            "properties": {
                "index": {"type": "integer"},
                "n": {"type": "integer"},
                "images": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["from", "result"],
                        "properties": {"from": {"type": "string"}, "result": {"$ref": "#/$defs/vector"}}
                    }
                }
            }
        }
    })
}

pub fn schema(kind: SchemaKind) -> Value {
    match kind {
        SchemaKind::Algebra => json!({
            "$schema": DRAFT,
            "title": "dg algebra",
            "description": "Finite-dimensional dg algebra over ℚ on a graded basis. Coefficients are decimal strings such as \"2\" or \"-1/3\".",
            "type": "object",
            "required": ["schema_version", "basis", "unit"],
            "properties": {
                "schema_version": {"const": 1},
                "name": {"type": "string"},
                "basis": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["label", "degree"],
                        "properties": {
                            "label": {"type": "string"},
                            "degree": {"type": "integer"},
                            "multidegree": {"type": "array", "items": {"type": "integer"}}
                        }
                    }
                },
                "unit": {"type": ["string", "null"]},
                "differential": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["from", "to", "coeff"],
                        "properties": {"from": {"type": "string"}, "to": {"type": "string"}, "coeff": {"$ref": "#/$defs/coeff"}}
                    }
                },
                "product": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["left", "right", "result"],
                        "properties": {
                            "left": {"type": "string"},
                            "right": {"type": "string"},
                            "result": {"$ref": "#/$defs/vector"}
                        }
                    }
                }
            },
            "$defs": defs()
        }),
        SchemaKind::Monoid => json!({
            "$schema": DRAFT,
            "title": "Leinster monoid tables",
            "description": "Truncated monoid given by explicit tables. components[n] is the basis of X_n; faces, degeneracies and betas list images of basis elements.",
            "type": "object",
            "required": ["schema_version", "components"],
            "properties": {
                "schema_version": {"const": 1},
                "components": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["label", "multidegree"],
                            "properties": {"label": {"type": "string"}, "multidegree": {"type": "array", "items": {"type": "integer"}}}
                        }
                    }
                },
                "differential": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["n", "from", "result"],
                        "properties": {"n": {"type": "integer"}, "from": {"type": "string"}, "result": {"$ref": "#/$defs/vector"}}
                    }
                },
                "faces": {"type": "array", "items": {"$ref": "#/$defs/operator"}},
                "degeneracies": {"type": "array", "items": {"$ref": "#/$defs/operator"}},
                "betas": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["a", "b", "images"],
                        "properties": {
                            "a": {"type": "integer"},
                            "b": {"type": "integer"},
                            "images": {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "required": ["from", "result"],
                                    "properties": {
                                        "from": {"type": "string"},
                                        "result": {
                                            "type": "array",
                                            "items": {
                                                "type": "object",
                                                "required": ["left", "right", "coeff"],
                                                "properties": {"left": {"type": "string"}, "right": {"type": "string"}, "coeff": {"$ref": "#/$defs/coeff"}}
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            },
            "$defs": defs()
        }),
        SchemaKind::Report => json!({
            "$schema": DRAFT,
            "title": "verification report",
            "type": "object",
            "required": ["schema_version", "tool", "version", "input", "config", "status", "checks", "failed", "suites"],
            "properties": {
                "schema_version": {"const": 1},
                "tool": {"const": "leinster"},
                "version": {"type": "string"},
                "input": {"type": "string"},
                "config": {"type": "object"},
                "status": {"enum": ["pass", "fail", "undecided"]},
                "checks": {"type": "integer"},
                "failed": {"type": "integer"},
                "suites": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["suite", "status", "reports"],
                        "properties": {
                            "suite": {"type": "string"},
                            "status": {"enum": ["pass", "fail", "undecided"]},
                            "reports": {"type": "array", "items": {"$ref": "#/$defs/check"}},
                            "diagnostics": {"type": "array", "items": {"$ref": "#/$defs/check"}},
                            "details": {"type": "object"},
                            "error": {"type": "string"}
                        }
                    }
                }
            },
            "$defs": {"check": check_report()}
        }),
    }
}
