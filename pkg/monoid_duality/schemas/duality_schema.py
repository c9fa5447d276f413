from marshmallow import EXCLUDE, Schema, fields, post_load

from monoid_duality.models.duality_function import (
    AdjointCensusEntry,
    DualityClass,
    DualityFunction,
    DualityQuadruple,
    VerificationRecord
)
from monoid_duality.schemas.cayley_table_schema import MonoidSchema


class VerificationRecordSchema(Schema):
    '''
    Schema for VerificationRecord. Failures are dumped as error dictionaries
    and are not loaded back.
    '''
    class Meta:
        unknown = EXCLUDE

    rows_distinct = fields.Boolean(required=True)
    columns_cover_homs = fields.Boolean(required=True)
    columns_distinct = fields.Boolean(required=True)
    rows_cover_homs = fields.Boolean(required=True)
    passed = fields.Boolean(dump_only=True)
    failures = fields.Function(lambda obj: [failure.to_dict() for failure in obj.failures], dump_only=True)

    @post_load
    def make_record(self, data, **kwargs):
        return VerificationRecord(**data)


class DualityFunctionSchema(Schema):
    '''
    Schema for DualityFunction: carriers with their tables and labels, the
    psi table with rows indexed by S, and the verification record.
    '''
    name = fields.Str(allow_none=True, load_default=None)
    s_label = fields.Str(allow_none=True, load_default=None)
    r_label = fields.Str(allow_none=True, load_default=None)
    t_label = fields.Str(allow_none=True, load_default=None)
    s = fields.Nested(MonoidSchema, required=True)
    r = fields.Nested(MonoidSchema, required=True)
    t = fields.Nested(MonoidSchema, required=True)
    table = fields.List(fields.List(fields.Integer()), required=True)
    verified = fields.Nested(VerificationRecordSchema, allow_none=True, load_default=None)
    real_embedding = fields.List(fields.Float(), allow_none=True, load_default=None)

    @post_load
    def make_duality(self, data, **kwargs):
        if data['real_embedding'] is not None:
            data['real_embedding'] = tuple(data['real_embedding'])
        return DualityFunction(**data)


class QuadrupleSchema(Schema):
    s_label = fields.Str(required=True)
    r_label = fields.Str(required=True)
    t_label = fields.Str(required=True)
    psi = fields.Nested(DualityFunctionSchema, required=True)

    @post_load
    def make_quadruple(self, data, **kwargs):
        return DualityQuadruple(**data)


class ReducedClassSchema(Schema):
    '''
    Schema for DualityClass, a class of quadruples after reduction with its
    matched name.
    '''
    s_label = fields.Str(required=True)
    r_label = fields.Str(required=True)
    t_label = fields.Str(required=True)
    name = fields.Str(allow_none=True, load_default=None)
    size = fields.Integer(required=True)
    representative = fields.Nested(DualityFunctionSchema, required=True)

    @post_load
    def make_class(self, data, **kwargs):
        return DualityClass(**data)


class AdjointCensusEntrySchema(Schema):
    s_label = fields.Str(required=True)
    t_label = fields.Str(required=True)
    hom_count = fields.Integer(required=True)
    r_label = fields.Str(allow_none=True, load_default=None)

    @post_load
    def make_entry(self, data, **kwargs):
        return AdjointCensusEntry(**data)
