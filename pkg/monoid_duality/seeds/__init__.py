from monoid_duality.seeds.monoid_seeds import seed_monoids
from monoid_duality.seeds.semiring_seeds import seed_semirings
from monoid_duality.seeds.duality_seeds import seed_dualities
