from .cayley_table_schema import CayleyTableSchema, MonoidSchema
from .catalog_schema import CatalogEntrySchema, NamedDualitySchema, SemiringCatalogEntrySchema
from .report_schema import EnumerationReportSchema, SemiringClassSchema
from .duality_schema import (
    AdjointCensusEntrySchema,
    DualityFunctionSchema,
    QuadrupleSchema,
    ReducedClassSchema,
    VerificationRecordSchema
)
from .simulation_schema import (
    DualMapSchema,
    ExpectationEstimateSchema,
    PathwiseReportSchema,
    RatesSchema,
    SiteMatrixSchema
)
from .manifest_schema import ReproductionCheckSchema, ReproductionManifestSchema
