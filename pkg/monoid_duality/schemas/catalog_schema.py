from marshmallow import Schema, fields, post_load

from monoid_duality.models.catalog_entry import CatalogEntry, NamedDuality, SemiringCatalogEntry
from monoid_duality.schemas.cayley_table_schema import CayleyTableSchema


class CatalogEntrySchema(Schema):
    '''
    Schema for CatalogEntry.
    '''
    label = fields.Str(required=True)
    table = fields.Nested(CayleyTableSchema, required=True)
    neutral = fields.Integer(load_default=0)
    commutative = fields.Boolean(load_default=True)
    absorbing = fields.Integer(allow_none=True, load_default=None)
    almost_absorbing = fields.Integer(allow_none=True, load_default=None)

    @post_load
    def make_entry(self, data, **kwargs):
        return CatalogEntry(**data)


class SemiringCatalogEntrySchema(Schema):
    '''
    Schema for a listed semiring multiplication.
    '''
    additive = fields.Str(required=True)
    mul = fields.Nested(CayleyTableSchema, required=True)
    mult_label = fields.Str(required=True)

    @post_load
    def make_entry(self, data, **kwargs):
        return SemiringCatalogEntry(**data)


class NamedDualitySchema(Schema):
    name = fields.Str(required=True)
    s_label = fields.Str(required=True)
    r_label = fields.Str(required=True)
    t_label = fields.Str(required=True)
    table = fields.List(fields.List(fields.Integer()), required=True)
    real_embedding = fields.List(fields.Float(), allow_none=True, load_default=None)

    @post_load
    def make_duality(self, data, **kwargs):
        data['table'] = tuple(tuple(row) for row in data['table'])
        if data['real_embedding'] is not None:
            data['real_embedding'] = tuple(data['real_embedding'])
        return NamedDuality(**data)
