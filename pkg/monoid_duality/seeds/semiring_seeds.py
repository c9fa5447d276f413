from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.schemas.catalog_schema import SemiringCatalogEntrySchema


# (additive monoid, multiplication table, label of the multiplicative monoid),
# one row per semiring up to isomorphism. M0, M5, M12, M16, M18 and M19 carry
# no semiring structure.
SEMIRING_MULTIPLICATIONS = [
    ("M1", "00 01", "M1"),
    ("M2", "00 01", "M1"),
    ("M3", "000 012 022", "M4"),
    ("M4", "000 001 012", "M3"),
    ("M4", "000 012 022", "M4"),
    ("M4", "000 011 012", "M4"),
    ("M6", "000 012 022", "M4"),
    ("M7", "000 012 021", "M5"),
    ("M8", "0000 0123 0233 0333", "M14"),
    ("M8", "0000 0123 0223 0333", "M15"),
    ("M8", "0000 0123 0213 0333", "M16"),
    ("M9", "0000 0123 0233 0333", "M14"),
    ("M10", "0000 0123 0202 0323", "M13"),
    ("M10", "0000 0123 0222 0323", "M15"),
    ("M11", "0000 0101 0022 0123", "M11"),
    ("M11", "0000 0123 0202 0323", "M13"),
    ("M11", "0000 0123 0233 0333", "M14"),
    ("M11", "0000 0123 0222 0323", "M15"),
    ("M11", "0000 0123 0213 0333", "M16"),
    ("M13", "0000 0123 0202 0323", "M13"),
    ("M13", "0000 0123 0222 0323", "M15"),
    ("M14", "0000 0123 0223 0333", "M15"),
    ("M15", "0000 0001 0002 0123", "M8"),
    ("M15", "0000 0001 0012 0123", "M9"),
    ("M15", "0000 0001 0022 0123", "M10"),
    ("M15", "0000 0011 0123 0133", "M13"),
    ("M15", "0000 0011 0122 0123", "M13"),
    ("M15", "0000 0123 0233 0333", "M14"),
    ("M15", "0000 0111 0112 0123", "M14"),
    ("M15", "0000 0123 0223 0333", "M15"),
    ("M15", "0000 0113 0123 0333", "M15"),
    ("M15", "0000 0111 0123 0133", "M15"),
    ("M15", "0000 0111 0122 0123", "M15"),
    ("M15", "0000 0001 0122 0123", "N1"),
    ("M15", "0000 0111 0123 0333", "N2"),
    ("M17", "0000 0123 0223 0333", "M15"),
    ("M20", "0000 0123 0202 0323", "M13"),
    ("M20", "0000 0123 0222 0323", "M15"),
    ("M21", "0000 0123 0200 0303", "M10"),
    ("M22", "0000 0123 0223 0333", "M15"),
    ("M23", "0000 0123 0220 0303", "M11"),
    ("M24", "0000 0123 0213 0333", "M16"),
    ("M25", "0000 0123 0220 0303", "M11"),
    ("M25", "0000 0123 0213 0330", "M12"),
    ("M25", "0000 0123 0231 0312", "M18"),
    ("M26", "0000 0123 0202 0321", "M12"),
]


def seed_semirings(catalog_repository):
    for additive, rows, mult_label in SEMIRING_MULTIPLICATIONS:
        mul = CayleyTable.from_rows(rows)
        entry = SemiringCatalogEntrySchema().load({
            'additive': additive,
            'mul': {'order': mul.order, 'table': [list(row) for row in mul.table]},
            'mult_label': mult_label,
        })
        catalog_repository.create_semiring(entry)
