import logging
from dataclasses import replace
from typing import Iterator, Optional

import numpy as np

from monoid_duality import config
from monoid_duality.errors import (
    AdjointNotClosed,
    Condition1Fail,
    Condition2Fail,
    Condition3Fail,
    Condition4Fail,
    NotCommutative,
    NotIsomorphism,
    OrderTooLarge,
    SizeBudgetExceeded,
    UnmatchedClass
)
from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.catalog_entry import NamedDuality
from monoid_duality.models.duality_function import (
    AdjointCensusEntry,
    DualityClass,
    DualityFunction,
    DualityQuadruple,
    VerificationRecord
)
from monoid_duality.models.hom import AdjointMonoid
from monoid_duality.models.monoid import Monoid
from monoid_duality.services.algebra_service import AlgebraService

logger = logging.getLogger(__name__)


def generated_submonoid(t: Monoid, values) -> set:
    generated = {t.neutral} | set(values)
    frontier = list(generated)
    while frontier:
        x = frontier.pop()
        for y in list(generated):
            for z in (t(x, y), t(y, x)):
                if z not in generated:
                    generated.add(z)
                    frontier.append(z)
    return generated


def generating_set(s: Monoid) -> list:
    '''Elements picked in index order until they generate S.'''
    generators = []
    generated = {s.neutral}
    for x in s.elements:
        if x not in generated:
            generators.append(x)
            generated = generated_submonoid(s, generators)
    return generators


def search_homs(s: Monoid, t: Monoid, budget: int) -> list:
    """
    Value tables of all homomorphisms S -> T, sorted.

    Values are chosen on a generating set of S and pushed through products
    with the generators already fixed; a branch stops at the first clash.

    Raises:
    ------
    SizeBudgetExceeded
        When more than ``budget`` partial assignments are visited.
    """
    source, target = s.op.table, t.op.table
    generators = generating_set(s)
    found = []
    visited = 0

    def propagate(values) -> bool:
        fixed = [g for g in generators if values[g] is not None]
        frontier = [x for x in s.elements if values[x] is not None]
        while frontier:
            x = frontier.pop()
            for g in fixed:
                for z, v in ((source[x][g], target[values[x]][values[g]]),
                             (source[g][x], target[values[g]][values[x]])):
                    if values[z] is None:
                        values[z] = v
                        frontier.append(z)
                    elif values[z] != v:
                        return False
        return True

    def extend(values, depth: int) -> None:
        nonlocal visited
        if depth == len(generators):
            if all(values[source[x][y]] == target[values[x]][values[y]] for x in s.elements for y in s.elements):
                found.append(tuple(values))
            return
        g = generators[depth]
        for v in t.elements:
            visited += 1
            if visited > budget:
                raise SizeBudgetExceeded(visited, budget)
            trial = list(values)
            trial[g] = v
            if propagate(trial):
                extend(trial, depth + 1)

    start = [None] * s.order
    start[s.neutral] = t.neutral
    extend(start, 0)
    return sorted(found)


class HomDualService:
    """
    Service layer for homomorphism sets, adjoint monoids and duality functions.

    The quadruple search follows the census approach: tabulate H(S, T) for all
    catalogued S and T, keep the triples with R = H(S, T) and S = H(R, T), and
    test the candidate psi(x, y) = f_y(x) for every isomorphism R -> H(S, T).

    Attributes:
    ----------
    algebra_service : AlgebraService
    settings : DevConfig or ProductionConfig
        Supplies SIZE_BUDGET and MAX_DUALITY_ORDER.
    """

    def __init__(self, algebra_service: AlgebraService = AlgebraService(), settings=config) -> None:
        self.algebra_service = algebra_service
        self.settings = settings

    @property
    def catalog_repository(self):
        return self.algebra_service.catalog_repository

    def hom_set(self, s: Monoid, t: Monoid, budget: int = None) -> AdjointMonoid:
        """
        Compute H(S, T) by backtracking over the values on a generating set of S.

        Parameters:
        ----------
        s, t : Monoid
            Source and target; t must be commutative.
        budget : int, optional
            Largest number of partial assignments visited, SIZE_BUDGET by default.

        Returns:
        -------
        AdjointMonoid
            The homomorphisms in lexicographic order with their pointwise sum table.

        Raises:
        ------
        NotCommutative, SizeBudgetExceeded, AdjointNotClosed
        """
        target = np.array(t.op.table)
        bad = np.argwhere(target != target.T)
        if len(bad):
            raise NotCommutative(int(bad[0][0]), int(bad[0][1]))
        n = s.order
        base = tuple(search_homs(s, t, budget or self.settings.SIZE_BUDGET))
        homs = np.array(base, dtype=int).reshape(len(base), n)
        index = {values: i for i, values in enumerate(base)}

        sums = target[homs[:, None, :], homs[None, :, :]]
        op = []
        for i in range(len(base)):
            row = []
            for j in range(len(base)):
                values = tuple(int(v) for v in sums[i, j])
                if values not in index:
                    raise AdjointNotClosed('pointwise sum of two homomorphisms is not a homomorphism', f=base[i], g=base[j])
                row.append(index[values])
            op.append(tuple(row))
        zero = index[(t.neutral,) * n]
        logger.debug('|H| = %d for %s -> %s', len(base), s.op.rows(), t.op.rows())
        return AdjointMonoid(s, t, base, CayleyTable(tuple(op)), zero)

    def _embedding(self, s: Monoid, t: Monoid):
        adjoint = self.hom_set(s, t)
        double = self.hom_set(adjoint.monoid, t)
        index = {values: i for i, values in enumerate(double.base)}
        embedding = []
        for x in s.elements:
            functional = tuple(f[x] for f in adjoint.base)
            if functional not in index:
                raise AdjointNotClosed(f'evaluation at {x} is not a homomorphism of the adjoint', x=x)
            embedding.append(index[functional])
        op = double.op
        if embedding[s.neutral] != double.index_of_zero or any(
            embedding[s(x, y)] != op(embedding[x], embedding[y]) for x in s.elements for y in s.elements
        ):
            raise AdjointNotClosed('x -> L_x is not a homomorphism')
        return tuple(embedding), double

    def adjoint_embedding(self, s: Monoid, t: Monoid) -> tuple:
        """
        The map x -> L_x from S into H(H(S, T), T), where L_x(h) = h(x).

        Returns:
        -------
        tuple
            ``embedding[x]`` is the index of L_x in the double adjoint.
        """
        return self._embedding(s, t)[0]

    def is_reflexive(self, s: Monoid, t: Monoid) -> bool:
        '''True when x -> L_x is a bijection onto H(H(S, T), T).'''
        embedding, double = self._embedding(s, t)
        return len(set(embedding)) == s.order == double.order

    def check_duality(self, psi: DualityFunction, s_homs=None, r_homs=None) -> VerificationRecord:
        """
        Check the four duality conditions and collect a witness for each failure.

        Parameters:
        ----------
        psi : DualityFunction
        s_homs, r_homs : collection of value tables, optional
            H(S, T) and H(R, T) when already known (product spaces, module maps).

        Returns:
        -------
        VerificationRecord
            ``failures`` holds the Condition*Fail errors that apply.
        """
        if s_homs is None:
            s_homs = self.hom_set(psi.s, psi.t).base
        if r_homs is None:
            r_homs = self.hom_set(psi.r, psi.t).base
        rows, columns = psi.rows(), psi.columns()
        failures = []

        repeat = first_repeat(rows)
        if repeat:
            failures.append(Condition1Fail(*repeat))
        missing = sorted(set(s_homs) - set(columns))
        extra = sorted(set(columns) - set(s_homs))
        if missing or extra:
            failures.append(Condition2Fail(missing, extra))
        repeat = first_repeat(columns)
        if repeat:
            failures.append(Condition3Fail(*repeat))
        missing = sorted(set(r_homs) - set(rows))
        extra = sorted(set(rows) - set(r_homs))
        if missing or extra:
            failures.append(Condition4Fail(missing, extra))

        codes = {failure.code for failure in failures}
        return VerificationRecord(
            rows_distinct=Condition1Fail.code not in codes,
            columns_cover_homs=Condition2Fail.code not in codes,
            columns_distinct=Condition3Fail.code not in codes,
            rows_cover_homs=Condition4Fail.code not in codes,
            failures=tuple(failures),
        )

    def verify_duality(self, psi: DualityFunction, s_homs=None, r_homs=None) -> DualityFunction:
        """
        Like check_duality, but raises the first failed condition.

        Returns:
        -------
        DualityFunction
            ``psi`` with its verification record attached.
        """
        record = self.check_duality(psi, s_homs, r_homs)
        if record.failures:
            raise record.failures[0]
        return replace(psi, verified=record)

    def candidate_duality(self, s: Monoid, t: Monoid, r: Monoid, iso, adjoint: AdjointMonoid = None) -> DualityFunction:
        """
        The candidate psi(x, y) = f_y(x), where f_y is the homomorphism ``iso`` sends y to.

        The returned function carries a full verification record; whether it is a
        duality function is ``psi.verified.passed``.

        Raises:
        ------
        NotIsomorphism
            When ``iso`` is not an isomorphism from R onto H(S, T).
        """
        adjoint = adjoint or self.hom_set(s, t)
        iso = tuple(iso)
        target = adjoint.monoid
        if (
            len(iso) != r.order
            or r.order != target.order
            or sorted(iso) != list(range(target.order))
            or iso[r.neutral] != target.neutral
            or any(iso[r(x, y)] != target(iso[x], iso[y]) for x in r.elements for y in r.elements)
        ):
            raise NotIsomorphism('map is not an isomorphism from R onto H(S, T)', iso=iso)
        table = tuple(tuple(adjoint.base[iso[y]][x] for y in r.elements) for x in s.elements)
        psi = DualityFunction(s, r, t, table)
        return replace(psi, verified=self.check_duality(psi, s_homs=adjoint.base))

    def evaluation_duality(self, s: Monoid, t: Monoid) -> DualityFunction:
        '''psi(x, h) = h(x) on S x H(S, T), with its verification record.'''
        adjoint = self.hom_set(s, t)
        table = tuple(tuple(h[x] for h in adjoint.base) for x in s.elements)
        psi = DualityFunction(s, adjoint.monoid, t, table)
        return replace(psi, verified=self.check_duality(psi, s_homs=adjoint.base))

    def transpose(self, psi: DualityFunction) -> DualityFunction:
        '''psi^T(y, x) = psi(x, y), re-verified when psi was.'''
        transposed = psi.transpose()
        if psi.verified is None:
            return transposed
        return replace(transposed, verified=self.check_duality(transposed))

    def _catalog_monoids(self, max_order: int) -> list:
        return [
            entry for order in range(2, max_order + 1)
            for entry in self.catalog_repository.get_by_order(order)
        ]

    def _census(self, max_order: int):
        entries = self._catalog_monoids(max_order)
        census = {}
        adjoints = {}
        for s_entry in entries:
            for t_entry in entries:
                adjoint = self.hom_set(s_entry.monoid, t_entry.monoid)
                adjoints[(s_entry.label, t_entry.label)] = adjoint
                census[(s_entry.label, t_entry.label)] = self.algebra_service.catalog_label(adjoint.monoid)
        return entries, census, adjoints

    def adjoint_census(self, max_order: int = 4) -> list:
        """
        For every pair of catalogued monoids S, T with 2 to ``max_order``
        elements, the size of H(S, T) and the catalog label of its isomorphism
        type (None when it has more than four elements).

        Returns:
        -------
        list[AdjointCensusEntry]
        """
        self._check_order(max_order)
        entries, census, adjoints = self._census(max_order)
        return [
            AdjointCensusEntry(s.label, t.label, adjoints[(s.label, t.label)].order, census[(s.label, t.label)])
            for s in entries for t in entries
        ]

    def _check_order(self, max_order: int) -> None:
        if max_order > self.settings.MAX_DUALITY_ORDER:
            raise OrderTooLarge(max_order, self.settings.MAX_DUALITY_ORDER)

    def iter_duality_candidates(self, max_order: int = 4) -> Iterator[DualityFunction]:
        """
        Every candidate psi for the triples with R = H(S, T) and S = H(R, T),
        one per isomorphism R -> H(S, T), labelled and verified.
        """
        self._check_order(max_order)
        entries, census, adjoints = self._census(max_order)
        labels = {entry.label for entry in entries}
        for s_entry in entries:
            for t_entry in entries:
                r_label = census[(s_entry.label, t_entry.label)]
                if r_label not in labels or census.get((r_label, t_entry.label)) != s_entry.label:
                    continue
                adjoint = adjoints[(s_entry.label, t_entry.label)]
                r = self.catalog_repository.get(r_label).monoid
                for iso in self.algebra_service.iter_isomorphisms(r, adjoint.monoid):
                    psi = self.candidate_duality(s_entry.monoid, t_entry.monoid, r, iso, adjoint)
                    yield replace(psi, s_label=s_entry.label, r_label=r_label, t_label=t_entry.label)

    def find_all_duality_quadruples(self, max_order: int = 4) -> list:
        """
        All quadruples (R, S, T, psi) of catalogued monoids with 2 to
        ``max_order`` elements where S is T-dual to R with duality function psi.

        Returns:
        -------
        list[DualityQuadruple]
        """
        quadruples = []
        for psi in self.iter_duality_candidates(max_order):
            if psi.verified.passed:
                quadruples.append(DualityQuadruple(psi.s_label, psi.r_label, psi.t_label, psi))
            else:
                logger.warning('candidate on %s x %s -> %s fails: %s', psi.s_label, psi.r_label, psi.t_label,
                               [failure.code for failure in psi.verified.failures])
        logger.info('%d duality quadruples up to order %d', len(quadruples), max_order)
        return quadruples

    def is_minimal(self, psi: DualityFunction) -> bool:
        '''True when the values of psi generate T.'''
        return len(generated_submonoid(psi.t, psi.values())) == psi.t.order

    def _label_rank(self, label: str) -> int:
        labels = [entry.label for entry in self.catalog_repository.get_all()]
        return labels.index(label) if label in labels else len(labels)

    def _orientation_key(self, psi: DualityFunction) -> tuple:
        return (self._label_rank(psi.s_label), self._label_rank(psi.r_label), psi.flat)

    def reduce_duality_quadruples(self, quadruples) -> list:
        """
        Merge quadruples under the reduction moves.

        Non-minimal psi (values not generating T) are dropped. The remaining
        quadruples are merged when they differ by an isomorphism of R or by
        transposition; all candidates of one triple are related by an
        automorphism of R, so a class is determined by {S, R} and T.

        Each class gets the smallest orientation as representative and the name
        of the listed table it matches.

        Raises:
        ------
        UnmatchedClass
        """
        groups = {}
        for quadruple in quadruples:
            psi = quadruple.psi
            if not self.is_minimal(psi):
                continue
            key = (frozenset((quadruple.s_label, quadruple.r_label)), quadruple.t_label)
            groups.setdefault(key, []).append(psi)

        classes = []
        for members in groups.values():
            orientations = members + [member.transpose() for member in members]
            representative = min(orientations, key=self._orientation_key)
            name = self.match_named(representative)
            if name is None:
                raise UnmatchedClass(
                    f'no listed table for {representative.s_label} x {representative.r_label} -> {representative.t_label}',
                    table=representative.table,
                )
            classes.append(DualityClass(
                representative.s_label, representative.r_label, representative.t_label,
                replace(representative, name=name), len(members), name,
            ))
        classes.sort(key=lambda c: (self._label_rank(c.t_label), self._orientation_key(c.representative)))
        logger.info('%d classes after reduction', len(classes))
        return classes

    def equivalent_duality(self, a: DualityFunction, b: DualityFunction) -> bool:
        """
        True when b, or its transpose, is a relabeling of a: there are isomorphisms
        sigma, rho, tau with tau(a(x, y)) = b(sigma(x), rho(y)).
        """
        algebra = self.algebra_service
        for target in (b, b.transpose()):
            if (a.s.order, a.r.order, a.t.order) != (target.s.order, target.r.order, target.t.order):
                continue
            for tau in algebra.iter_isomorphisms(a.t, target.t):
                for sigma in algebra.iter_isomorphisms(a.s, target.s):
                    for rho in algebra.iter_isomorphisms(a.r, target.r):
                        if all(
                            tau[a(x, y)] == target(sigma[x], rho[y])
                            for x in a.s.elements for y in a.r.elements
                        ):
                            return True
        return False

    def duality_from_named(self, named) -> DualityFunction:
        '''The listed table as a DualityFunction on catalog carriers.'''
        if not isinstance(named, NamedDuality):
            named = self.catalog_repository.get_duality(named)
        repository = self.catalog_repository
        return DualityFunction(
            repository.get(named.s_label).monoid,
            repository.get(named.r_label).monoid,
            repository.get(named.t_label).monoid,
            named.table,
            name=named.name,
            s_label=named.s_label,
            r_label=named.r_label,
            t_label=named.t_label,
            real_embedding=named.real_embedding,
        )

    def match_named(self, psi: DualityFunction) -> Optional[str]:
        '''Name of the listed table psi is equivalent to, if any.'''
        for named in self.catalog_repository.get_dualities():
            if named.t_label != psi.t_label or {named.s_label, named.r_label} != {psi.s_label, psi.r_label}:
                continue
            if self.equivalent_duality(psi, self.duality_from_named(named)):
                return named.name
        return None

    def label_duality(self, psi: DualityFunction) -> DualityFunction:
        """
        Transport psi onto catalog carriers, labelling S, R and T.

        Carriers without a catalog entry are left as they are.
        """
        matches = [self.algebra_service.catalog_lookup(m) for m in (psi.s, psi.r, psi.t)]
        if any(match is None for match in matches):
            return psi
        s_match, r_match, t_match = matches
        table = [[0] * psi.r.order for _ in range(psi.s.order)]
        for x in psi.s.elements:
            for y in psi.r.elements:
                table[s_match.bijection[x]][r_match.bijection[y]] = t_match.bijection[psi(x, y)]
        embedding = None
        if psi.real_embedding is not None:
            embedding = [0.0] * psi.t.order
            for v in psi.t.elements:
                embedding[t_match.bijection[v]] = psi.real_embedding[v]
            embedding = tuple(embedding)
        labelled = DualityFunction(
            s_match.entry.monoid, r_match.entry.monoid, t_match.entry.monoid, table,
            s_label=s_match.label, r_label=r_match.label, t_label=t_match.label,
            verified=psi.verified, real_embedding=embedding,
        )
        return replace(labelled, name=self.match_named(labelled))

