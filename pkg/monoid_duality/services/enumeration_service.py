import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import numpy as np

from monoid_duality import config
from monoid_duality.errors import DualityToolkitError, MalformedTable, OrderTooLarge
from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.enumeration_report import EnumerationReport, SemiringClass
from monoid_duality.models.monoid import Monoid
from monoid_duality.models.semiring import Semiring
from monoid_duality.services.algebra_service import (
    AlgebraService,
    as_table,
    canonical_flat,
    relabeled_flat,
    table_from_flat
)

logger = logging.getLogger(__name__)

# Orders the absorbing-element search is run for.
MAX_ABSORBING_ORDER = 4


def _associative_so_far(table, n: int) -> bool:
    for a in range(1, n):
        row = table[a]
        for b in range(1, n):
            ab = row[b]
            if ab is None:
                continue
            for c in range(1, n):
                bc = table[b][c]
                if bc is None:
                    continue
                left = table[ab][c]
                right = row[bc]
                if left is not None and right is not None and left != right:
                    return False
    return True


def commutative_completions(n: int, prefix: tuple = ()) -> set:
    """
    Canonical forms of every commutative monoid table on 0..n-1 with neutral 0.

    The upper triangle is filled cell by cell, row 0 and column 0 being the
    identity; a branch is cut as soon as a fully defined triple violates
    associativity. ``prefix`` pins the values of the first free cells, which is
    how the search is split between workers.
    """
    table = [[None] * n for _ in range(n)]
    for x in range(n):
        table[0][x] = x
        table[x][0] = x
    cells = [(x, y) for x in range(1, n) for y in range(x, n)]
    found = set()

    def fill(depth: int) -> None:
        if depth == len(cells):
            found.add(canonical_flat(table, 0))
            return
        x, y = cells[depth]
        values = (prefix[depth],) if depth < len(prefix) else range(n)
        for value in values:
            table[x][y] = table[y][x] = value
            if _associative_so_far(table, n):
                fill(depth + 1)
        table[x][y] = table[y][x] = None

    fill(0)
    return found


def _completions_worker(args) -> set:
    n, prefix = args
    return commutative_completions(n, prefix)


def _is_associative(op: np.ndarray) -> bool:
    return bool((op[op, :] == op[:, op]).all())


class EnumerationService:
    """
    Service layer for the exhaustive, isomorphism-quotiented enumeration of
    commutative monoids, monoids with an absorbing element and semiring
    multiplications.

    Attributes:
    ----------
    algebra_service : AlgebraService
        Used for validation, canonical forms and catalog labels.
    settings : DevConfig or ProductionConfig
        Supplies MAX_MONOID_ORDER, MAX_SEMIRING_ORDER and WORKERS.
    """

    def __init__(self, algebra_service: AlgebraService = AlgebraService(), settings=config) -> None:
        self.algebra_service = algebra_service
        self.settings = settings

    def _report(self, order: int, flats) -> EnumerationReport:
        representatives = tuple(table_from_flat(flat) for flat in sorted(flats))
        labels = None
        if order <= 4:
            labels = tuple(
                self.algebra_service.catalog_label(Monoid(table, table.neutral_element()))
                for table in representatives
            )
        return EnumerationReport(order, len(representatives), representatives, labels)

    def enumerate_commutative_monoids(self, order: int, workers: int = None) -> EnumerationReport:
        """
        All commutative monoids with ``order`` elements, up to isomorphism.

        Parameters:
        ----------
        order : int
            Between 1 and MAX_MONOID_ORDER.
        workers : int, optional
            Processes to split the search over; defaults to the WORKERS setting.
            The result does not depend on it.

        Returns:
        -------
        EnumerationReport
            Canonical representatives sorted by flattened table, with catalog
            labels for orders up to 4.

        Raises:
        ------
        OrderTooLarge
        """
        if order < 1:
            raise MalformedTable('order must be at least 1', order=order)
        if order > self.settings.MAX_MONOID_ORDER:
            raise OrderTooLarge(order, self.settings.MAX_MONOID_ORDER)
        workers = workers or self.settings.WORKERS
        if workers > 1 and order > 1:
            prefixes = [(order, (value,)) for value in range(order)]
            flats = set()
            with ProcessPoolExecutor(max_workers=workers) as executor:
                for found in executor.map(_completions_worker, prefixes):
                    flats |= found
        else:
            flats = commutative_completions(order)
        logger.info('order %d: %d commutative monoids', order, len(flats))
        return self._report(order, flats)

    def enumerate_commutative_monoids_naive(self, order: int) -> EnumerationReport:
        """
        Reference enumeration: every n x n table is validated and the survivors
        are quotiented by canonical form. Only feasible for order <= 3.
        """
        if order > 3:
            raise OrderTooLarge(order, 3)
        n = order
        flats = set()
        for flat in product(range(n), repeat=n * n):
            rows = tuple(flat[i * n:(i + 1) * n] for i in range(n))
            try:
                monoid = self.algebra_service.validate_monoid(CayleyTable(rows), require_commutative=True)
            except DualityToolkitError:
                continue
            flats.add(canonical_flat(monoid.op.table, monoid.neutral))
        return self._report(order, flats)

    def enumerate_monoids_with_absorbing(self, order: int, commutative: bool = None) -> EnumerationReport:
        """
        Monoids, not necessarily commutative, that have an absorbing element.

        ``commutative`` True keeps the commutative classes only, False the
        noncommutative ones and None keeps both.
        """
        if order < 1:
            raise MalformedTable('order must be at least 1', order=order)
        if order > MAX_ABSORBING_ORDER:
            raise OrderTooLarge(order, MAX_ABSORBING_ORDER)
        n = order
        flats = set()
        if n == 1:
            if commutative is not False:
                flats.add((0,))
            return self._report(n, flats)

        absorbing = n - 1
        inner = range(1, absorbing)
        cells = [(x, y) for x in inner for y in inner]
        base = np.zeros((n, n), dtype=int)
        base[0, :] = np.arange(n)
        base[:, 0] = np.arange(n)
        base[absorbing, 1:] = absorbing
        base[1:, absorbing] = absorbing
        for values in product(range(n), repeat=len(cells)):
            op = base.copy()
            for (x, y), value in zip(cells, values):
                op[x, y] = value
            if not _is_associative(op):
                continue
            is_commutative = bool((op == op.T).all())
            if commutative is not None and is_commutative != commutative:
                continue
            flats.add(canonical_flat(op.tolist(), 0))
        logger.info('order %d: %d monoids with an absorbing element', n, len(flats))
        return self._report(n, flats)

    def enumerate_semiring_multiplications(self, add) -> list:
        """
        Every multiplication turning ``add`` into a semiring, one per semiring
        isomorphism class.

        Parameters:
        ----------
        add : Monoid or table
            A commutative monoid with at most MAX_SEMIRING_ORDER elements.

        Returns:
        -------
        list[SemiringClass]
            Sorted by (unit, multiplication table) in canonical position, each
            carrying the catalog label of its multiplicative monoid.
        """
        if not isinstance(add, Monoid):
            add = self.algebra_service.validate_monoid(as_table(add), require_commutative=True)
        else:
            add = self.algebra_service.validate_monoid(add.op, require_commutative=True)
        n = add.order
        if n > self.settings.MAX_SEMIRING_ORDER:
            raise OrderTooLarge(n, self.settings.MAX_SEMIRING_ORDER)
        zero = add.neutral
        automorphisms = list(self.algebra_service.iter_isomorphisms(add, add))
        additive_label = self.algebra_service.catalog_label(add)

        found = set()
        for unit in ([zero] if n == 1 else [u for u in range(n) if u != zero]):
            free = [x for x in range(n) if x not in (zero, unit)]
            cells = [(x, y) for x in free for y in free]
            base = [[0] * n for _ in range(n)]
            for x in range(n):
                base[unit][x] = x
                base[x][unit] = x
            base[zero] = [zero] * n
            for x in range(n):
                base[x][zero] = zero
            for values in product(range(n), repeat=len(cells)):
                rows = [list(row) for row in base]
                for (x, y), value in zip(cells, values):
                    rows[x][y] = value
                mul = CayleyTable(rows)
                try:
                    self.algebra_service.validate_semiring(add.op, mul)
                except DualityToolkitError:
                    continue
                # automorphisms of the addition keep its table, so the key is a semiring on add
                found.add(min((p[unit], relabeled_flat(mul.table, p)) for p in automorphisms))

        classes = []
        for unit, flat in sorted(found):
            semiring = Semiring(add, table_from_flat(flat), unit)
            mult_label = self.algebra_service.catalog_label(semiring.mul_monoid)
            classes.append(SemiringClass(semiring, mult_label, additive_label))
        logger.info('%s: %d semiring structures', additive_label or add.op.rows(), len(classes))
        return classes

    def is_listed_semiring(self, semiring: Semiring, listed) -> bool:
        '''True when ``semiring`` is isomorphic to one of the listed (add, mul) pairs.'''
        for candidate in listed:
            if self.algebra_service.are_semirings_isomorphic(semiring, candidate) is not None:
                return True
        return False
