from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.schemas.catalog_schema import CatalogEntrySchema


# Addition tables, rows written as digit strings. M0..M26 are the commutative
# monoids with at most four elements; N1 and N2 are the two noncommutative
# monoids of order four with an absorbing element; F4-mult is the
# multiplicative monoid of the field with four elements.
MONOID_TABLES = [
    ("M0", "0"),
    ("M1", "01 11"),
    ("M2", "01 10"),
    ("M3", "012 122 222"),
    ("M4", "012 112 222"),
    ("M5", "012 102 222"),
    ("M6", "012 121 212"),
    ("M7", "012 120 201"),
    ("M8", "0123 1333 2333 3333"),
    ("M9", "0123 1233 2333 3333"),
    ("M10", "0123 1333 2323 3333"),
    ("M11", "0123 1133 2323 3333"),
    ("M12", "0123 1023 2233 3333"),
    ("M13", "0123 1313 2123 3333"),
    ("M14", "0123 1223 2223 3333"),
    ("M15", "0123 1123 2223 3333"),
    ("M16", "0123 1023 2223 3333"),
    ("M17", "0123 1213 2123 3333"),
    ("M18", "0123 1203 2013 3333"),
    ("M19", "0123 1223 2223 3332"),
    ("M20", "0123 1311 2123 3133"),
    ("M21", "0123 1311 2103 3133"),
    ("M22", "0123 1332 2332 3223"),
    ("M23", "0123 1331 2301 3113"),
    ("M24", "0123 1231 2312 3123"),
    ("M25", "0123 1032 2301 3210"),
    ("M26", "0123 1230 2301 3012"),
    ("N1", "0000 0001 0122 0123"),
    ("N2", "0000 0111 0123 0333"),
    ("F4-mult", "0000 0123 0231 0312"),
]


def seed_monoids(catalog_repository):
    for label, rows in MONOID_TABLES:
        table = CayleyTable.from_rows(rows)
        entry = CatalogEntrySchema().load({
            'label': label,
            'table': {'order': table.order, 'table': [list(row) for row in table.table]},
            'neutral': table.neutral_element(),
            'commutative': table.is_commutative(),
            'absorbing': table.absorbing_element(),
            'almost_absorbing': table.almost_absorbing_element(),
        })
        catalog_repository.create_monoid(entry)
