from monoid_duality.schemas.catalog_schema import NamedDualitySchema


# Monoid homomorphisms from T into the reals under multiplication.
REAL_EMBEDDINGS = {
    'M1': (1.0, 0.0),
    'M2': (1.0, -1.0),
    'M5': (1.0, -1.0, 0.0),
}

# (name, S, R, T, table); rows are indexed by S, columns by R.
NAMED_DUALITIES = [
    ("psi1", "M1", "M1", "M1", "00 01"),
    ("psi2", "M2", "M2", "M2", "00 01"),
    ("psi3", "M3", "M3", "M3", "000 012 022"),
    ("psi4", "M4", "M4", "M1", "000 001 011"),
    ("psi5", "M5", "M6", "M5", "000 010 022"),
    ("psi6", "M6", "M6", "M6", "000 012 022"),
    ("psi7", "M7", "M7", "M7", "000 012 021"),
    ("psi9", "M9", "M9", "M9", "0000 0123 0233 0333"),
    ("psi10", "M10", "M10", "M3", "0000 0122 0202 0222"),
    ("psi11", "M11", "M11", "M1", "0000 0011 0101 0111"),
    ("psi13", "M13", "M14", "M3", "0000 0122 0002 0222"),
    ("psi15", "M15", "M15", "M1", "0000 0001 0011 0111"),
    ("psi16", "M16", "M20", "M5", "0000 0100 0202 0222"),
    ("psi17", "M17", "M17", "M5", "0000 0102 0002 0222"),
    ("psi18", "M18", "M24", "M18", "0000 0120 0210 0333"),
    ("psi21", "M21", "M21", "M5", "0000 0212 0100 0202"),
    ("psi22", "M22", "M22", "M22", "0000 0123 0223 0333"),
    ("psi23", "M23", "M23", "M23", "0000 0123 0220 0303"),
    ("psi235", "M23", "M23", "M5", "0000 0212 0110 0202"),
    ("psi24", "M24", "M24", "M24", "0000 0123 0213 0333"),
    ("psi25", "M25", "M25", "M2", "0000 0011 0101 0110"),
    ("psi26", "M26", "M26", "M26", "0000 0123 0202 0321"),
]


def seed_dualities(catalog_repository):
    for name, s_label, r_label, t_label, rows in NAMED_DUALITIES:
        entry = NamedDualitySchema().load({
            'name': name,
            's_label': s_label,
            'r_label': r_label,
            't_label': t_label,
            'table': [[int(c) for c in row] for row in rows.split()],
            'real_embedding': REAL_EMBEDDINGS.get(t_label),
        })
        catalog_repository.create_duality(entry)
