from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.monoid import Monoid


class CayleyTableSchema(Schema):
    '''
    Schema for CayleyTable, encoded as {"order": n, "table": [[...], ...]}.
    '''
    order = fields.Integer(required=True, validate=validate.Range(min=1))
    table = fields.List(fields.List(fields.Integer()), required=True)

    @validates_schema
    def validate_shape(self, data, **kwargs):
        n = data['order']
        table = data['table']
        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError(f'table must be {n} x {n}', 'table')
        if any(not 0 <= v < n for row in table for v in row):
            raise ValidationError(f'entries must lie in 0..{n - 1}', 'table')

    @post_load
    def make_table(self, data, **kwargs):
        return CayleyTable(tuple(tuple(row) for row in data['table']))


class MonoidSchema(Schema):
    '''
    Schema for Monoid: its operation table and the index of its neutral element.
    '''
    op = fields.Nested(CayleyTableSchema, required=True)
    neutral = fields.Integer(required=True)

    @post_load
    def make_monoid(self, data, **kwargs):
        return Monoid(data['op'], data['neutral'])
