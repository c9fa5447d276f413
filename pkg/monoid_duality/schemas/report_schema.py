from marshmallow import Schema, fields, post_load

from monoid_duality.models.enumeration_report import EnumerationReport, SemiringClass
from monoid_duality.models.monoid import Monoid
from monoid_duality.models.semiring import Semiring
from monoid_duality.schemas.cayley_table_schema import CayleyTableSchema


class EnumerationReportSchema(Schema):
    '''
    Schema for EnumerationReport.
    '''
    order = fields.Integer(required=True)
    count = fields.Integer(required=True)
    representatives = fields.List(fields.Nested(CayleyTableSchema), required=True)
    catalog_labels = fields.List(fields.Str(allow_none=True), allow_none=True, load_default=None)

    @post_load
    def make_report(self, data, **kwargs):
        data['representatives'] = tuple(data['representatives'])
        if data['catalog_labels'] is not None:
            data['catalog_labels'] = tuple(data['catalog_labels'])
        return EnumerationReport(**data)


class SemiringClassSchema(Schema):
    '''
    Schema for SemiringClass, the semiring flattened to its two tables and unit.
    '''
    additive_label = fields.Str(allow_none=True, load_default=None)
    mult_label = fields.Str(allow_none=True, load_default=None)
    add = fields.Function(lambda obj: CayleyTableSchema().dump(obj.semiring.add.op),
                          deserialize=lambda value: CayleyTableSchema().load(value), required=True)
    mul = fields.Function(lambda obj: CayleyTableSchema().dump(obj.semiring.mul),
                          deserialize=lambda value: CayleyTableSchema().load(value), required=True)
    unit = fields.Function(lambda obj: obj.semiring.unit, deserialize=int, required=True)

    @post_load
    def make_class(self, data, **kwargs):
        add = data.pop('add')
        semiring = Semiring(Monoid(add, add.neutral_element()), data.pop('mul'), data.pop('unit'))
        return SemiringClass(semiring, **data)
