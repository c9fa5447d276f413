from marshmallow import EXCLUDE, Schema, ValidationError, fields, post_load, validate, validates_schema

from monoid_duality.models.simulation import ExpectationEstimate, PathwiseReport


def validate_matrix(matrix) -> None:
    k = len(matrix)
    if k == 0:
        raise ValidationError('the matrix needs at least one site')
    if any(len(row) != k for row in matrix):
        raise ValidationError(f'the matrix must be {k} x {k}')
    lengths = {len(entry) for row in matrix for entry in row}
    if len(lengths) != 1:
        raise ValidationError('all value tables must have the same length')


class SiteMatrixSchema(Schema):
    '''
    Schema for the matrix of a site map: a K x K array whose entry (i, j) is
    the value table of the local map from site i to site j.
    '''
    matrix = fields.List(fields.List(fields.List(fields.Integer())), required=True, validate=validate_matrix)

    @post_load
    def make_matrix(self, data, **kwargs):
        return tuple(tuple(tuple(entry) for entry in row) for row in data['matrix'])


class RatedMatrixSchema(Schema):
    id = fields.Str(load_default=None)
    matrix = fields.List(fields.List(fields.List(fields.Integer())), required=True, validate=validate_matrix)
    rate = fields.Float(required=True, validate=validate.Range(min=0))


class RatesSchema(Schema):
    '''
    Schema for a rates file: {"maps": [{"id": ..., "matrix": ..., "rate": ...}, ...]}.

    Maps without an id are named m0, m1, ... by position.
    '''
    maps = fields.List(fields.Nested(RatedMatrixSchema), required=True)

    @validates_schema
    def validate_ids(self, data, **kwargs):
        ids = [item['id'] for item in data['maps'] if item['id'] is not None]
        if len(ids) != len(set(ids)):
            raise ValidationError('map ids must be unique', 'maps')

    @post_load
    def make_rates(self, data, **kwargs):
        return [
            (item['id'] or f'm{position}', tuple(tuple(tuple(e) for e in row) for row in item['matrix']), item['rate'])
            for position, item in enumerate(data['maps'])
        ]


class DualMapSchema(Schema):
    '''
    Schema for the output of a dual-map computation.
    '''
    psi = fields.Str()
    sites = fields.Integer()
    matrix = fields.List(fields.List(fields.List(fields.Integer())))
    dual = fields.List(fields.List(fields.List(fields.Integer())))


class PathwiseReportSchema(Schema):
    class Meta:
        unknown = EXCLUDE

    seed = fields.Integer(required=True)
    events = fields.Integer(required=True)
    coverage = fields.Str(required=True)
    pairs_checked = fields.Integer(required=True)
    violations = fields.Integer(required=True)
    window = fields.List(fields.Float(), required=True)
    passed = fields.Boolean(dump_only=True)

    @post_load
    def make_report(self, data, **kwargs):
        data['window'] = tuple(data['window'])
        return PathwiseReport(**data)


class ExpectationEstimateSchema(Schema):
    '''
    Schema for ExpectationEstimate; ``combined_se`` and ``agree`` are dumped only.
    '''
    class Meta:
        unknown = EXCLUDE

    t = fields.Float(required=True)
    replicates = fields.Integer(required=True)
    seed = fields.Integer(required=True)
    lhs = fields.Float(required=True)
    lhs_se = fields.Float(required=True)
    rhs = fields.Float(required=True)
    rhs_se = fields.Float(required=True)
    exact = fields.Float(allow_none=True, load_default=None)
    combined_se = fields.Float(dump_only=True)
    agree = fields.Boolean(dump_only=True)

    @post_load
    def make_estimate(self, data, **kwargs):
        return ExpectationEstimate(**data)
