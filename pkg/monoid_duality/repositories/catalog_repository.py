from dataclasses import replace

from monoid_duality.errors import UnknownLabel
from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.seeds import seed_dualities, seed_monoids, seed_semirings


class CatalogRepository:
    '''
    Repository layer for the embedded catalog of monoids, semiring
    multiplications and named duality functions.

    A repository built with ``seeded=True`` (the default) loads the whole
    catalog from ``monoid_duality.seeds``; an unseeded one starts empty and is
    filled through the ``create_*`` methods.
    '''
    def __init__(self, seeded: bool = True) -> None:
        self._monoids = {}
        self._semirings = []
        self._dualities = {}
        if seeded:
            seed_monoids(self)
            seed_semirings(self)
            seed_dualities(self)

    def create_monoid(self, entry):
        '''
        Add a monoid entry, replacing any entry with the same label.
        '''
        self._monoids[entry.label] = entry
        return entry

    def create_semiring(self, entry):
        '''
        Add a semiring multiplication for an additive catalog monoid.
        '''
        self._semirings.append(entry)
        return entry

    def create_duality(self, entry):
        '''
        Add a named duality function.
        '''
        self._dualities[entry.name] = entry
        return entry

    def get(self, label):
        '''
        Get a monoid entry by label.
        '''
        try:
            return self._monoids[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def get_all(self):
        '''
        Get all monoid entries in catalog order.
        '''
        return list(self._monoids.values())

    def get_by_order(self, order):
        '''
        Get the M-labelled entries with the given number of elements.
        '''
        return [entry for entry in self._monoids.values() if entry.label.startswith('M') and entry.order == order]

    def get_lookup_candidates(self, order):
        '''
        Get the entries catalog lookups match against: M-labels first, then N1 and N2.
        '''
        return self.get_by_order(order) + [
            entry for entry in self._monoids.values() if entry.label.startswith('N') and entry.order == order
        ]

    def get_semirings(self, additive=None):
        '''
        Get the listed semiring multiplications, optionally for one additive monoid.
        '''
        return [entry for entry in self._semirings if additive is None or entry.additive == additive]

    def get_dualities(self):
        '''
        Get all named duality functions.
        '''
        return list(self._dualities.values())

    def get_duality(self, name):
        '''
        Get a named duality function, e.g. "psi5".
        '''
        try:
            return self._dualities[name]
        except KeyError:
            raise UnknownLabel(name) from None

    def replace_monoid_table(self, label, table):
        '''
        Return a copy of the repository where ``label`` has a different table.

        The original repository is left untouched.
        '''
        entry = self.get(label)
        if not isinstance(table, CayleyTable):
            table = CayleyTable.from_rows(table)
        copy = CatalogRepository(seeded=False)
        copy._monoids = dict(self._monoids)
        copy._semirings = list(self._semirings)
        copy._dualities = dict(self._dualities)
        copy._monoids[label] = replace(
            entry,
            table=table,
            neutral=table.neutral_element() if table.neutral_element() is not None else entry.neutral,
            commutative=table.is_commutative(),
            absorbing=table.absorbing_element(),
            almost_absorbing=table.almost_absorbing_element(),
        )
        return copy
