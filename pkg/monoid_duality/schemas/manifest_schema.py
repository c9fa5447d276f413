from marshmallow import EXCLUDE, Schema, fields, post_load

from monoid_duality.models.manifest import ReproductionCheck, ReproductionManifest


class ReproductionCheckSchema(Schema):
    name = fields.Str(required=True)
    description = fields.Str(required=True)
    depends_on = fields.List(fields.Str(), load_default=list)
    slow = fields.Boolean(load_default=False)
    passed = fields.Boolean(load_default=False)
    skipped = fields.Boolean(load_default=False)
    diff = fields.Str(load_default='')

    @post_load
    def make_check(self, data, **kwargs):
        data['depends_on'] = tuple(data['depends_on'])
        return ReproductionCheck(**data)


class ReproductionManifestSchema(Schema):
    '''
    Schema for ReproductionManifest; ``passed`` is dumped only.
    '''
    class Meta:
        unknown = EXCLUDE

    checks = fields.List(fields.Nested(ReproductionCheckSchema), required=True)
    passed = fields.Boolean(dump_only=True)

    @post_load
    def make_manifest(self, data, **kwargs):
        return ReproductionManifest(checks=data['checks'])
