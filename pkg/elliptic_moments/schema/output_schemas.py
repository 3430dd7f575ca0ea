"""Schemas for command output records."""

from marshmallow import Schema, fields, validate

_INTEGER_TEXT = validate.Regexp(r"^-?\d+$", error="Not a decimal integer: {input}")


class ProvenanceSchema(Schema):
    """Schema for the provenance block of an output record."""

    version = fields.String(required=True)
    seed = fields.String(allow_none=True, load_default=None)


class OutputRecordSchema(Schema):
    """Schema for one JSON record printed by the CLI."""

    command = fields.String(required=True)
    inputs = fields.Dict(keys=fields.String(), required=True)
    result = fields.Dict(keys=fields.String(), required=True)
    provenance = fields.Nested(ProvenanceSchema, required=True)


class PolynomialSchema(Schema):
    """Schema for a moment polynomial; exponents and coefficients travel as decimal strings."""

    coefficients = fields.Dict(
        keys=fields.String(validate=_INTEGER_TEXT),
        values=fields.String(validate=_INTEGER_TEXT),
        required=True,
    )
    text = fields.String()


class FigureRowSchema(Schema):
    """Schema for a row of figure data; the trailing fields depend on the sweep."""

    rho = fields.Float(required=True)
    n = fields.Integer(required=True)
    m = fields.Integer(required=True)
    exact = fields.Float(required=True, allow_nan=True)
    normalized = fields.Float(required=True, allow_nan=True, allow_none=True)
    estimate = fields.Float(required=True, allow_nan=True)
    ratio = fields.Float(required=True, allow_nan=True, allow_none=True)

    # Asymptotic sweep
    v = fields.Integer()
    q = fields.Float()
    phi = fields.Float(allow_nan=True)
    psi = fields.Float(allow_nan=True)
    regime = fields.String(validate=validate.OneOf(["saddle", "crossover", "half_gaussian"]))

    # Monte Carlo sweep
    stderr = fields.Float(allow_nan=True)
    z = fields.Float(allow_nan=True, allow_none=True)
    passed = fields.Boolean()


# Schema instances
output_record_schema = OutputRecordSchema()

polynomial_schema = PolynomialSchema()

figure_row_schema = FigureRowSchema()
figure_rows_schema = FigureRowSchema(many=True)
