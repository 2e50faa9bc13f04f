"""JSON Schemas for every document the command line emits or reads."""

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/[1-9]\d*)?$"}
RATIONAL_OR_NULL = {"anyOf": [RATIONAL, {"type": "null"}]}
POINT = {"type": "array", "items": RATIONAL, "minItems": 2, "maxItems": 2}
FLOAT_POINT = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}

EXACT_OR_APPROX = {
    "type": "object",
    "required": ["exact", "approx", "error_bound"],
    "properties": {
        "exact": RATIONAL_OR_NULL,
        "approx": {"type": "number"},
        "error_bound": {"type": "number", "minimum": 0},
    },
}

STEWART_REPORT = {
    "type": "object",
    "required": [
        "r", "companion_cubic", "a_squared", "a", "b", "b_bar", "real_roots",
        "complex_pair", "reducible", "c1_witness", "constructibility",
        "galois_class", "discriminant",
    ],
    "properties": {
        "r": RATIONAL,
        "companion_cubic": {
            "type": "object",
            "required": ["coefficients", "text"],
            "properties": {"coefficients": {"type": "array", "items": RATIONAL}, "text": {"type": "string"}},
        },
        "a_squared": EXACT_OR_APPROX,
        "a": EXACT_OR_APPROX,
        "b": EXACT_OR_APPROX,
        "b_bar": EXACT_OR_APPROX,
        "real_roots": {"type": "array", "items": EXACT_OR_APPROX, "minItems": 2, "maxItems": 2},
        "complex_pair": {
            "type": "object",
            "required": ["re", "im"],
            "properties": {"re": EXACT_OR_APPROX, "im": EXACT_OR_APPROX},
        },
        "reducible": {"type": "boolean"},
        "c1_witness": RATIONAL_OR_NULL,
        "c2_witness": {"type": "null"},
        "constructibility": {"enum": ["Constructible", "NotConstructible", "ReducibleCase"]},
        "galois_class": {"enum": ["S4", "A4", "V4", "D4orC4", "Reducible"]},
        "discriminant": RATIONAL,
    },
}

SCENARIO = {
    "type": "object",
    "required": ["A", "B"],
    "properties": {"center": POINT, "radius": RATIONAL, "A": POINT, "B": POINT},
}

SOLUTION = {
    "type": "object",
    "required": ["point", "z", "residual_H", "residual_angle", "classification"],
    "properties": {
        "point": FLOAT_POINT,
        "z": {"anyOf": [{"type": "number"}, {"const": "infinity"}]},
        "residual_H": {"type": "number", "minimum": 0},
        "residual_angle": {"type": "number", "minimum": 0},
        "harmonic_residual": {"type": ["number", "null"]},
        "classification": {"enum": ["TrueReflection", "TangentBisector"]},
        "multiple": {"type": "boolean"},
    },
}

MIRROR_REPORT = {
    "type": "object",
    "required": ["scenario", "quartic", "hyperbola", "solutions"],
    "properties": {
        "scenario": SCENARIO,
        "quartic": {"type": "array", "items": RATIONAL, "minItems": 5, "maxItems": 5},
        "hyperbola": {
            "type": "object",
            "required": ["h_sq", "h_xy", "h_x", "h_y"],
            "additionalProperties": RATIONAL,
        },
        "solutions": {"type": "array", "items": SOLUTION, "maxItems": 4},
    },
}

EMBED_REPORT = {
    "type": "object",
    "required": ["r", "scenario", "lambda", "quartic", "identity_holds"],
    "properties": {
        "r": RATIONAL,
        "scenario": SCENARIO,
        "lambda": RATIONAL,
        "quartic": {"type": "array", "items": RATIONAL, "minItems": 5, "maxItems": 5},
        "identity_holds": {"const": True},
    },
}

DIOPH_REPORT = {
    "type": "object",
    "required": ["bound", "solutions", "checked_pairs"],
    "properties": {
        "bound": {"type": "integer", "minimum": 1},
        "solutions": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 3, "maxItems": 3},
        },
        "checked_pairs": {"type": "integer", "minimum": 1},
    },
}

PLOT_REPORT = {
    "type": "object",
    "required": ["path", "solutions"],
    "properties": {"path": {"type": "string"}, "solutions": {"type": "integer", "minimum": 0}},
}

ERROR_REPORT = {
    "type": "object",
    "required": ["error", "message"],
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
}

BY_COMMAND = {
    "stewart-analyze": STEWART_REPORT,
    "mirror-solve": MIRROR_REPORT,
    "mirror-embed": EMBED_REPORT,
    "dioph-search": DIOPH_REPORT,
    "plot": PLOT_REPORT,
}
