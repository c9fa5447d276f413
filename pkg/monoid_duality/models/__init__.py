from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.monoid import Monoid
from monoid_duality.models.semiring import Semiring
from monoid_duality.models.lattice import Lattice
from monoid_duality.models.catalog_entry import CatalogEntry, CatalogMatch, NamedDuality, SemiringCatalogEntry
from monoid_duality.models.hom import AdjointMonoid, FunctionTable, Hom
from monoid_duality.models.duality_function import (
    AdjointCensusEntry,
    DualityClass,
    DualityFunction,
    DualityQuadruple,
    VerificationRecord
)
from monoid_duality.models.enumeration_report import EnumerationReport, SemiringClass
from monoid_duality.models.site_space import LiftedDuality, SiteMap, SiteSpace
from monoid_duality.models.simulation import (
    EventStream,
    ExpectationEstimate,
    Flow,
    PathwiseReport,
    RatedMap,
    RateModel
)
from monoid_duality.models.manifest import ReproductionCheck, ReproductionManifest
