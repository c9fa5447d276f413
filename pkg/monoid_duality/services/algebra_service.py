import logging
from itertools import permutations
from typing import Iterator, Optional

import numpy as np

from monoid_duality.errors import (
    AdditiveNotCommutativeMonoid,
    InvalidLattice,
    MalformedTable,
    MulNotMonoid,
    NoNeutralElement,
    NotAssociative,
    NotCommutative,
    NotDistributive,
    ZeroNotAbsorbing
)
from monoid_duality.models.catalog_entry import CatalogMatch
from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.lattice import Lattice
from monoid_duality.models.monoid import Monoid
from monoid_duality.models.semiring import Semiring
from monoid_duality.repositories.catalog_repository import CatalogRepository

logger = logging.getLogger(__name__)


def as_table(table) -> CayleyTable:
    '''Accepts a CayleyTable, nested rows or a digit-string such as "012 121 212".'''
    if isinstance(table, CayleyTable):
        return table
    return CayleyTable.from_rows(table)


def inverse_permutation(perm) -> list:
    inverse = [0] * len(perm)
    for x, image in enumerate(perm):
        inverse[image] = x
    return inverse


def relabeled_flat(table, perm) -> tuple:
    '''
    Flattened form of ``table`` transported along ``perm`` (old -> new),
    without building an intermediate CayleyTable.
    '''
    inverse = inverse_permutation(perm)
    n = len(perm)
    return tuple(perm[table[inverse[i]][inverse[j]]] for i in range(n) for j in range(n))


def canonical_flat(table, neutral: int = 0) -> tuple:
    '''Smallest flattened relabeling of ``table`` over the permutations sending ``neutral`` to 0.'''
    n = len(table)
    others = [x for x in range(n) if x != neutral]
    best = None
    for images in permutations(range(1, n)):
        perm = [0] * n
        for x, image in zip(others, images):
            perm[x] = image
        flat = relabeled_flat(table, perm)
        if best is None or flat < best:
            best = flat
    return best


def table_from_flat(flat) -> CayleyTable:
    n = int(round(len(flat) ** 0.5))
    return CayleyTable(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def element_signature(tables, x: int) -> tuple:
    '''
    Isomorphism invariants of x: idempotency, number of distinct multiples,
    occurrences in the table and distinct entries in its row, per table.
    '''
    signature = []
    for table in tables:
        powers = [x]
        power = table[x][x]
        while power not in powers:
            powers.append(power)
            power = table[power][x]
        occurrences = sum(row.count(x) for row in table)
        signature.append((table[x][x] == x, len(powers), occurrences, len(set(table[x]))))
    return tuple(signature)


def iter_table_isomorphisms(tables_a, tables_b, fixed=None) -> Iterator[tuple]:
    '''
    Yield every bijection p with p(a(x, y)) = b(p(x), p(y)) for each pair of
    tables, in lexicographic order.

    Parameters:
    ----------
    tables_a, tables_b : sequence of n x n nested tuples
        The operations to preserve, matched pairwise.
    fixed : dict, optional
        Forced images, e.g. {neutral_a: neutral_b}.
    '''
    n = len(tables_a[0])
    if n != len(tables_b[0]):
        return
    sig_a = [element_signature(tables_a, x) for x in range(n)]
    sig_b = [element_signature(tables_b, x) for x in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return

    perm = [None] * n
    used = [False] * n
    for x, image in (fixed or {}).items():
        if perm[x] is not None and perm[x] != image:
            return
        if sig_a[x] != sig_b[image] or (used[image] and perm[x] != image):
            return
        perm[x] = image
        used[image] = True

    pairs = list(zip(tables_a, tables_b))

    def consistent() -> bool:
        assigned = [x for x in range(n) if perm[x] is not None]
        for table_a, table_b in pairs:
            for x in assigned:
                for y in assigned:
                    image = table_b[perm[x]][perm[y]]
                    result = perm[table_a[x][y]]
                    if result is None:
                        if used[image]:
                            return False
                    elif result != image:
                        return False
        return True

    if not consistent():
        return
    free = [x for x in range(n) if perm[x] is None]

    def extend(depth: int):
        if depth == len(free):
            yield tuple(perm)
            return
        x = free[depth]
        for image in range(n):
            if used[image] or sig_a[x] != sig_b[image]:
                continue
            perm[x] = image
            used[image] = True
            if consistent():
                yield from extend(depth + 1)
            perm[x] = None
            used[image] = False

    yield from extend(0)


class AlgebraService:
    """
    Service layer for finite monoids, semirings and lattices.

    Validates operation tables, tests isomorphism, computes canonical forms and
    matches monoids against the embedded catalog.

    Attributes:
    ----------
    catalog_repository : CatalogRepository
        The catalog that lookups match against.

    Methods:
    -------
    validate_monoid(table, require_commutative=False, normalize=False) -> Monoid
    validate_semiring(add, mul) -> Semiring
    validate_lattice(leq) -> Lattice
    are_isomorphic(a, b) -> tuple or None
    catalog_lookup(monoid) -> CatalogMatch or None
    lattice_join_monoid(lattice) -> Monoid
    dual_lattice(lattice) -> (Lattice, tuple)
    one_generates_addition(semiring) -> bool
    render_table(label, rows) -> str
    """

    def __init__(self, catalog_repository: CatalogRepository = CatalogRepository()) -> None:
        self.catalog_repository = catalog_repository

    def validate_monoid(self, table, require_commutative: bool = False, normalize: bool = False) -> Monoid:
        """
        Check a table for the monoid axioms.

        Parameters:
        ----------
        table : CayleyTable or rows
            The operation table.
        require_commutative : bool, optional
            Reject noncommutative tables.
        normalize : bool, optional
            Swap the neutral element with 0 so that the returned monoid has neutral 0.

        Returns:
        -------
        Monoid

        Raises:
        ------
        MalformedTable, NotAssociative, NoNeutralElement, NotCommutative
        """
        table = as_table(table)
        op = np.array(table.table)
        # left[x, y, z] = (x+y)+z, right[x, y, z] = x+(y+z)
        left = op[op, :]
        right = op[:, op]
        bad = np.argwhere(left != right)
        if len(bad):
            raise NotAssociative(*(int(v) for v in bad[0]))
        neutral = table.neutral_element()
        if neutral is None:
            raise NoNeutralElement()
        if require_commutative:
            bad = np.argwhere(op != op.T)
            if len(bad):
                raise NotCommutative(int(bad[0][0]), int(bad[0][1]))
        monoid = Monoid(table, neutral)
        if normalize and neutral != 0:
            perm = list(range(table.order))
            perm[0], perm[neutral] = neutral, 0
            monoid = monoid.relabel(perm)
        return monoid

    def validate_semiring(self, add, mul) -> Semiring:
        """
        Check (add, mul) for the semiring axioms: commutative additive monoid,
        multiplicative monoid, absorbing zero and distributivity on both sides.

        Raises:
        ------
        AdditiveNotCommutativeMonoid, MulNotMonoid, ZeroNotAbsorbing, NotDistributive
        """
        add, mul = as_table(add), as_table(mul)
        if add.order != mul.order:
            raise MalformedTable(f'addition has {add.order} elements, multiplication {mul.order}')
        try:
            additive = self.validate_monoid(add, require_commutative=True)
        except (NotAssociative, NoNeutralElement, NotCommutative) as error:
            raise AdditiveNotCommutativeMonoid(f'addition: {error.message}', cause=error.code, **error.context) from error
        try:
            multiplicative = self.validate_monoid(mul)
        except (NotAssociative, NoNeutralElement) as error:
            raise MulNotMonoid(f'multiplication: {error.message}', cause=error.code, **error.context) from error

        zero = additive.neutral
        a = np.array(add.table)
        m = np.array(mul.table)
        bad = np.flatnonzero((m[:, zero] != zero) | (m[zero, :] != zero))
        if len(bad):
            raise ZeroNotAbsorbing(int(bad[0]))

        # x(y+z) against xy+xz
        bad = np.argwhere(m[:, a] != a[m[:, :, None], m[:, None, :]])
        if len(bad):
            raise NotDistributive(*(int(v) for v in bad[0]), side='left')
        # (y+z)x against yx+zx, indexed [x, y, z]
        mt = m.T
        bad = np.argwhere(m[a].transpose(2, 0, 1) != a[mt[:, :, None], mt[:, None, :]])
        if len(bad):
            raise NotDistributive(*(int(v) for v in bad[0]), side='right')
        return Semiring(additive, mul, multiplicative.neutral)

    def validate_lattice(self, leq) -> Lattice:
        """
        Check a relation matrix for being a finite lattice order.

        Raises:
        ------
        InvalidLattice
        """
        lattice = leq if isinstance(leq, Lattice) else Lattice(leq)
        n = lattice.order
        if n == 0 or any(len(row) != n for row in lattice.leq):
            raise InvalidLattice('relation must be a nonempty square matrix')
        rel = np.array(lattice.leq, dtype=bool)
        if not rel.diagonal().all():
            raise InvalidLattice('relation is not reflexive', x=int(np.flatnonzero(~rel.diagonal())[0]))
        bad = np.argwhere(rel & rel.T & ~np.eye(n, dtype=bool))
        if len(bad):
            raise InvalidLattice('relation is not antisymmetric', x=int(bad[0][0]), y=int(bad[0][1]))
        # x <= y <= z must give x <= z
        through = (rel.astype(int) @ rel.astype(int)) > 0
        bad = np.argwhere(through & ~rel)
        if len(bad):
            raise InvalidLattice('relation is not transitive', x=int(bad[0][0]), z=int(bad[0][1]))
        for x in range(n):
            for y in range(n):
                if lattice.join(x, y) is None:
                    raise InvalidLattice(f'{x} and {y} have no least upper bound', x=x, y=y)
                if lattice.meet(x, y) is None:
                    raise InvalidLattice(f'{x} and {y} have no greatest lower bound', x=x, y=y)
        return lattice

    def iter_isomorphisms(self, a: Monoid, b: Monoid) -> Iterator[tuple]:
        '''All monoid isomorphisms a -> b in lexicographic order.'''
        return iter_table_isomorphisms((a.op.table,), (b.op.table,), {a.neutral: b.neutral})

    def are_isomorphic(self, a: Monoid, b: Monoid) -> Optional[tuple]:
        """
        Find the lexicographically smallest isomorphism from a to b.

        Returns:
        -------
        tuple or None
            ``p`` with ``p[x]`` the image of x, or None when a and b are not isomorphic.
        """
        return next(self.iter_isomorphisms(a, b), None)

    def iter_semiring_isomorphisms(self, a: Semiring, b: Semiring) -> Iterator[tuple]:
        '''Bijections preserving both tables, mapping zero to zero and unit to unit.'''
        if a.order != b.order:
            return iter(())
        fixed = {a.zero: b.zero}
        if a.unit in fixed and fixed[a.unit] != b.unit:
            return iter(())
        fixed[a.unit] = b.unit
        return iter_table_isomorphisms((a.add.op.table, a.mul.table), (b.add.op.table, b.mul.table), fixed)

    def are_semirings_isomorphic(self, a: Semiring, b: Semiring) -> Optional[tuple]:
        return next(self.iter_semiring_isomorphisms(a, b), None)

    def canonical_form(self, monoid: Monoid) -> CayleyTable:
        """
        Lexicographically smallest flattened table over the relabelings that
        send the neutral element to 0.
        """
        return table_from_flat(canonical_flat(monoid.op.table, monoid.neutral))

    def catalog_lookup(self, monoid: Monoid) -> Optional[CatalogMatch]:
        """
        Match a monoid against the catalog.

        M-labels are tried first, then N1 and N2. Monoids with more than four
        elements are not catalogued.

        Returns:
        -------
        CatalogMatch or None
        """
        if monoid.order > 4:
            return None
        for entry in self.catalog_repository.get_lookup_candidates(monoid.order):
            bijection = self.are_isomorphic(monoid, entry.monoid)
            if bijection is not None:
                return CatalogMatch(entry, bijection)
        logger.debug('no catalog entry matches %s', monoid.op.rows())
        return None

    def catalog_label(self, monoid: Monoid) -> Optional[str]:
        match = self.catalog_lookup(monoid)
        return match.label if match else None

    def lattice_join_monoid(self, lattice: Lattice) -> Monoid:
        '''(S, join) with the bottom element as neutral element.'''
        lattice = self.validate_lattice(lattice)
        n = lattice.order
        table = CayleyTable(tuple(tuple(lattice.join(x, y) for y in range(n)) for x in range(n)))
        return self.validate_monoid(table, require_commutative=True)

    def dual_lattice(self, lattice: Lattice):
        """
        The order-reversed lattice and the star bijection x -> x*.

        The carrier is kept, so the bijection is the identity and only the
        relation is reversed.
        """
        lattice = self.validate_lattice(lattice)
        return self.validate_lattice(lattice.reversed()), tuple(range(lattice.order))

    def one_generates_addition(self, semiring: Semiring) -> bool:
        '''True when every nonzero element is a finite sum 1 + ... + 1.'''
        add = semiring.add
        multiples = {semiring.unit}
        acc = semiring.unit
        while True:
            acc = add(acc, semiring.unit)
            if acc in multiples:
                break
            multiples.add(acc)
        return all(x in multiples for x in add.elements if x != semiring.zero)

    def render_table(self, label: str, rows) -> str:
        """
        Render a table with a header row and a header column of element names:

            M6 | 0 1 2
            ---+------
             0 | 0 1 2
        """
        rows = [tuple(row) for row in (rows.table if isinstance(rows, CayleyTable) else rows)]
        columns = range(len(rows[0]))
        width = max(len(label), len(str(len(rows) - 1)))
        cells = max(len(str(v)) for v in [*columns, *(v for row in rows for v in row)])
        header = ' '.join(str(y).rjust(cells) for y in columns)
        lines = [f'{label.rjust(width)} | {header}', '-' * (width + 1) + '+' + '-' * (len(header) + 1)]
        for x, row in enumerate(rows):
            lines.append(f'{str(x).rjust(width)} | ' + ' '.join(str(v).rjust(cells) for v in row))
        return '\n'.join(lines)
