import logging

import numpy as np

from monoid_duality import config
from monoid_duality.errors import DualityToolkitError, NoDual
from monoid_duality.models.duality_function import DualityFunction
from monoid_duality.models.lattice import Lattice
from monoid_duality.models.manifest import ReproductionCheck, ReproductionManifest
from monoid_duality.models.semiring import Semiring
from monoid_duality.models.site_space import SiteMap, SiteSpace
from monoid_duality.repositories.catalog_repository import CatalogRepository
from monoid_duality.services.algebra_service import AlgebraService
from monoid_duality.services.enumeration_service import EnumerationService
from monoid_duality.services.homdual_service import HomDualService
from monoid_duality.services.product_service import ProductService, is_hom
from monoid_duality.services.simulation_service import SimulationService

logger = logging.getLogger(__name__)

MONOID_COUNTS = {1: 1, 2: 2, 3: 5, 4: 19, 5: 78}
QUADRUPLE_COUNT = 110
CLASS_COUNT = 22
F4_ADDITIVE_WITHOUT_DUAL = 12
PATHWISE_SEEDS = range(100)
PATHWISE_WINDOW = (0.0, 20.0)

# psi5 on M6 x {-1, 0, 1}, columns ordered by the real value of y.
PSI5_REAL_MATRIX = ((1.0, 1.0, 1.0), (-1.0, 0.0, 1.0), (1.0, 0.0, 1.0))

LATTICES = {
    'lattice-chain2': (Lattice.chain(2), 'psi1', ('M1',)),
    'lattice-chain3': (Lattice.chain(3), 'psi4', ('M1', 'M4')),
    'lattice-diamond': (Lattice.diamond(), 'psi11', ('M1', 'M11')),
    'lattice-chain4': (Lattice.chain(4), 'psi15', ('M1', 'M15')),
}

PRODUCTS = {
    'product-M1xM1': (('M1', 'M1'), 'M11'),
    'product-M2xM2': (('M2', 'M2'), 'M25'),
    'product-M1xM2': (('M1', 'M2'), 'M23'),
}


def diff_text(expected, actual) -> str:
    return '' if expected == actual else f'expected {expected!r}, got {actual!r}'


def spread_map(space: SiteSpace, identity, zero) -> SiteMap:
    '''m(x)_0 = m(x)_1 = x_0 + x_1, all other sites kept.'''
    k = space.sites
    matrix = [[identity if i == j else zero for j in range(k)] for i in range(k)]
    matrix[0][1] = identity
    matrix[1][0] = identity
    return SiteMap(space, tuple(tuple(row) for row in matrix))


def shift_map(space: SiteSpace, identity, zero) -> SiteMap:
    '''Moves the value at site i to site i + 1, cyclically.'''
    k = space.sites
    return SiteMap(space, tuple(tuple(identity if j == (i + 1) % k else zero for j in range(k)) for i in range(k)))


class ReproductionService:
    """
    Service layer running the acceptance checks of the toolkit against the
    embedded catalog.

    Every check names the catalog labels it reads in ``depends_on``, so a
    corrupted catalog entry fails exactly the checks that read it. Failures
    are recorded in the manifest, never raised.

    Attributes:
    ----------
    catalog_repository : CatalogRepository
        The catalog all services of the run read from.
    settings : DevConfig or ProductionConfig
    """

    def __init__(self, catalog_repository: CatalogRepository = CatalogRepository(), settings=config) -> None:
        self.catalog_repository = catalog_repository
        self.settings = settings
        self.algebra_service = AlgebraService(catalog_repository)
        self.enumeration_service = EnumerationService(self.algebra_service, settings)
        self.homdual_service = HomDualService(self.algebra_service, settings)
        self.product_service = ProductService(self.homdual_service, settings)
        self.simulation_service = SimulationService(self.product_service, settings)

    def _labels_of_order(self, order: int) -> tuple:
        return tuple(entry.label for entry in self.catalog_repository.get_by_order(order))

    def checks(self) -> list:
        '''(ReproductionCheck, callable returning a diff) pairs, in run order.'''
        checks = []

        def add(name, description, run, depends_on=(), slow=False):
            checks.append((ReproductionCheck(name, description, tuple(depends_on), slow), run))

        for order in range(1, 6):
            add(f'monoid-count-{order}', f'{MONOID_COUNTS[order]} commutative monoids with {order} elements',
                lambda order=order: self._check_monoid_count(order), slow=order == 5)
        for order in range(1, 5):
            add(f'catalog-order-{order}', f'every class of order {order} matches exactly one catalog entry',
                lambda order=order: self._check_catalog_order(order), self._labels_of_order(order))
        add('absorbing-order-2', 'one monoid of order 2 with an absorbing element, commutative',
            self._check_absorbing_order_2, ('M1',))
        add('absorbing-order-3', 'monoids of order 3 with an absorbing element are commutative',
            lambda: diff_text(0, self.enumeration_service.enumerate_monoids_with_absorbing(3, False).count))
        add('absorbing-noncommutative-4', 'the noncommutative absorbing monoids of order 4 are N1 and N2',
            self._check_absorbing_order_4, ('N1', 'N2'))

        for entry in self.catalog_repository.get_all():
            if not entry.label.startswith('M') or entry.order == 1:
                continue
            listed = self.catalog_repository.get_semirings(entry.label)
            add(f'semiring-{entry.label}', f'semiring structures on {entry.label}',
                lambda label=entry.label: self._check_semirings(label),
                (entry.label,) + tuple(sorted({item.mult_label for item in listed})))

        add('duality-order-2', 'dualities between monoids of order 2 reduce to psi1 and psi2',
            self._check_duality_order_2, ('M1', 'M2'))
        add('duality-census', f'{QUADRUPLE_COUNT} quadruples up to order 4, {CLASS_COUNT} classes',
            self._check_duality_census,
            sum((self._labels_of_order(order) for order in range(2, 5)), ()), slow=True)

        for name, (lattice, expected, depends_on) in LATTICES.items():
            add(name, f'lattice duality matches {expected}',
                lambda lattice=lattice, expected=expected: self._check_lattice(lattice, expected), depends_on)
        add('f4-count', f'{F4_ADDITIVE_WITHOUT_DUAL} additive maps of F4 have no dual',
            self._check_f4, ('M25', 'F4-mult'))
        for name, (factors, expected) in PRODUCTS.items():
            add(name, f'{" x ".join(factors)} is isomorphic to {expected}',
                lambda factors=factors, expected=expected: self._check_product(factors, expected),
                tuple(sorted(set(factors))) + (expected,))

        named = self.catalog_repository.get_dualities()
        add('named-dualities-valid', 'every listed duality function passes the four conditions',
            self._check_named, sorted({label for item in named for label in (item.s_label, item.r_label, item.t_label)}))
        add('psi5-real-matrix', 'psi5 on M6 x {-1, 0, 1} in real coordinates', self._check_psi5_real, ('M5', 'M6'))
        add('psi5-dual-map', 'dual maps for psi5 on two sites agree with brute force', self._check_psi5_dual_maps,
            ('M5', 'M6'))
        add('pathwise-psi5', 'pathwise duality for a psi5 model on three sites',
            lambda: self._check_pathwise('psi5', transpose=True), ('M5', 'M6'))
        add('pathwise-psi1', 'pathwise duality for an additive model on three sites',
            lambda: self._check_pathwise('psi1'), ('M1',))
        add('pathwise-psi2', 'pathwise duality for a cancellative model on three sites',
            lambda: self._check_pathwise('psi2'), ('M2',))
        add('expectation-psi5', 'expectation duality for a psi5 model on two sites', self._check_expectation,
            ('M5', 'M6'))
        return checks

    def reproduce_all(self, skip_slow: bool = False) -> ReproductionManifest:
        """
        Run every check.

        Parameters:
        ----------
        skip_slow : bool
            Mark the slow checks as skipped instead of running them.

        Returns:
        -------
        ReproductionManifest
        """
        manifest = ReproductionManifest()
        for check, run in self.checks():
            if check.slow and skip_slow:
                check.skipped = True
                manifest.checks.append(check)
                continue
            try:
                check.diff = run()
            except DualityToolkitError as e:
                check.diff = f'{e.code}: {e.message}'
            except Exception as e:
                logger.exception('check %s crashed', check.name)
                check.diff = f'{type(e).__name__}: {e}'
            check.passed = not check.diff
            logger.info('%s: %s', check.name, 'pass' if check.passed else 'FAIL')
            manifest.checks.append(check)
        return manifest

    # Monoids

    def _check_monoid_count(self, order: int) -> str:
        return diff_text(MONOID_COUNTS[order], self.enumeration_service.enumerate_commutative_monoids(order).count)

    def _check_catalog_order(self, order: int) -> str:
        report = self.enumeration_service.enumerate_commutative_monoids(order)
        expected = sorted(self._labels_of_order(order))
        return diff_text(expected, sorted(label or '?' for label in report.catalog_labels))

    def _check_absorbing_order_2(self) -> str:
        everything = self.enumeration_service.enumerate_monoids_with_absorbing(2)
        noncommutative = self.enumeration_service.enumerate_monoids_with_absorbing(2, False)
        return diff_text((('M1',), 0), (everything.catalog_labels, noncommutative.count))

    def _check_absorbing_order_4(self) -> str:
        report = self.enumeration_service.enumerate_monoids_with_absorbing(4, False)
        return diff_text(['N1', 'N2'], sorted(label or '?' for label in report.catalog_labels))

    # Semirings

    def _check_semirings(self, label: str) -> str:
        add = self.catalog_repository.get(label).monoid
        found = self.enumeration_service.enumerate_semiring_multiplications(add)
        listed = self.catalog_repository.get_semirings(label)
        listed_semirings = []
        for item in listed:
            unit = item.mul.neutral_element()
            if unit is None:
                return f'listed multiplication {item.mul.rows()} has no unit'
            listed_semirings.append(Semiring(add, item.mul, unit))
        lines = []
        if len(found) != len(listed):
            lines.append(f'expected {len(listed)} semirings, found {len(found)}')
        for semiring_class in found:
            if not self.enumeration_service.is_listed_semiring(semiring_class.semiring, listed_semirings):
                lines.append(f'unlisted multiplication {semiring_class.semiring.mul.rows()}')
        expected_labels = sorted(item.mult_label for item in listed)
        actual_labels = sorted(c.mult_label or '?' for c in found)
        if expected_labels != actual_labels:
            lines.append(diff_text(expected_labels, actual_labels))
        return '\n'.join(lines)

    def _check_f4(self) -> str:
        add = self.catalog_repository.get('M25').monoid
        mul = self.catalog_repository.get('F4-mult').table
        field = self.algebra_service.validate_semiring(add.op, mul)
        psi = DualityFunction(field.add, field.add, field.add, field.mul.table)
        without_dual = 0
        for h in self.homdual_service.hom_set(add, add).base:
            try:
                self.product_service.local_dual(psi, h)
            except NoDual:
                without_dual += 1
        return diff_text(F4_ADDITIVE_WITHOUT_DUAL, without_dual)

    # Dualities

    def _check_duality_order_2(self) -> str:
        quadruples = self.homdual_service.find_all_duality_quadruples(2)
        classes = self.homdual_service.reduce_duality_quadruples(quadruples)
        return diff_text(['psi1', 'psi2'], sorted(c.name for c in classes))

    def _check_duality_census(self) -> str:
        homdual = self.homdual_service
        candidates = list(homdual.iter_duality_candidates(4))
        lines = [
            f'candidate on {psi.s_label} x {psi.r_label} -> {psi.t_label} is not a duality function'
            for psi in candidates if not psi.verified.passed
        ]
        quadruples = homdual.find_all_duality_quadruples(4)
        if len(quadruples) != QUADRUPLE_COUNT:
            lines.append(f'expected {QUADRUPLE_COUNT} quadruples, found {len(quadruples)}')
        lines += [
            f'{q.s_label} and {q.r_label} differ in size'
            for q in quadruples if q.psi.s.order != q.psi.r.order
        ]
        classes = homdual.reduce_duality_quadruples(quadruples)
        if len(classes) != CLASS_COUNT:
            lines.append(f'expected {CLASS_COUNT} classes, found {len(classes)}')
        names = sorted(item.name for item in self.catalog_repository.get_dualities())
        if sorted(c.name for c in classes) != names:
            lines.append(diff_text(names, sorted(c.name for c in classes)))
        lines += [
            f'{c.name}: T larger than S or R'
            for c in classes if c.representative.t.order > min(c.representative.s.order, c.representative.r.order)
        ]
        into_m1 = sorted(c.name for c in classes if c.t_label == 'M1')
        if into_m1 != ['psi1', 'psi11', 'psi15', 'psi4']:
            lines.append(f'classes into M1: {into_m1}')
        return '\n'.join(lines)

    def _check_lattice(self, lattice: Lattice, expected: str) -> str:
        return diff_text(expected, self.product_service.lattice_duality_function(lattice).name)

    def _check_product(self, factors, expected: str) -> str:
        monoids = [self.catalog_repository.get(label).monoid for label in factors]
        product = self.product_service.direct_product(monoids)
        return diff_text(expected, self.algebra_service.catalog_label(product))

    def _check_named(self) -> str:
        lines = []
        for named in self.catalog_repository.get_dualities():
            try:
                psi = self.homdual_service.verify_duality(self.homdual_service.duality_from_named(named))
            except DualityToolkitError as e:
                lines.append(f'{named.name}: {e.code}')
                continue
            embedding = psi.real_embedding
            if embedding is not None:
                t = psi.t
                if embedding[t.neutral] != 1.0 or any(
                    embedding[t(a, b)] != embedding[a] * embedding[b] for a in t.elements for b in t.elements
                ):
                    lines.append(f'{named.name}: real embedding is not multiplicative')
        return '\n'.join(lines)

    def _verified_named(self, name: str, transpose: bool = False) -> DualityFunction:
        psi = self.homdual_service.verify_duality(self.homdual_service.duality_from_named(name))
        return self.homdual_service.transpose(psi) if transpose else psi

    def _check_psi5_real(self) -> str:
        psi = self._verified_named('psi5', transpose=True)
        real = np.array(psi.real_table())
        order = np.argsort([psi.real_embedding[y] for y in psi.r.elements])
        return diff_text(PSI5_REAL_MATRIX, tuple(tuple(float(v) for v in row) for row in real[:, order]))

    def _check_psi5_dual_maps(self) -> str:
        psi = self._verified_named('psi5', transpose=True)
        lifted = self.product_service.lift_duality(psi, 2)
        space = lifted.s_space
        table = self.product_service.lifted_table(lifted)
        homs = self.homdual_service.hom_set(psi.s, psi.s).base
        lines = []
        for entries in np.ndindex(*(len(homs),) * 4):
            matrix = ((homs[entries[0]], homs[entries[1]]), (homs[entries[2]], homs[entries[3]]))
            m = SiteMap(space, matrix)
            dual = self.product_service.dual_map(lifted, m)
            candidates = self.product_service.find_dual_by_search(table, self.product_service.global_index_map(m))
            if candidates != [[int(v)] for v in self.product_service.global_index_map(dual)]:
                lines.append(f'dual of {matrix} differs from the brute-force search')

        product = self.product_service.product_monoid(psi.s, 2)
        rng = np.random.default_rng(0)
        for _ in range(20):
            index_map = rng.integers(0, space.size, size=space.size)
            if is_hom(product, product, index_map):
                continue
            if all(self.product_service.find_dual_by_search(table, index_map)):
                lines.append(f'non-homomorphism {index_map.tolist()} has a dual')
        return '\n'.join(lines)

    def _pathwise_model(self, psi: DualityFunction, sites: int):
        space = SiteSpace(psi.s, sites)
        identity = tuple(psi.s.elements)
        zero = (psi.s.neutral,) * psi.s.order
        maps = [('spread', spread_map(space, identity, zero), 1.0), ('shift', shift_map(space, identity, zero), 2.0)]
        return self.simulation_service.build_rate_model(space, maps)

    def _check_pathwise(self, name: str, transpose: bool = False) -> str:
        psi = self._verified_named(name, transpose)
        lifted = self.product_service.lift_duality(psi, 3)
        model = self._pathwise_model(psi, 3)
        short = []
        for seed in PATHWISE_SEEDS:
            report = self.simulation_service.check_pathwise_duality(model, lifted, PATHWISE_WINDOW, seed, 'exhaustive')
            if report.events < 20:
                short.append(seed)
        return f'fewer than 20 events for seeds {short}' if short else ''

    def _check_expectation(self) -> str:
        psi = self._verified_named('psi5', transpose=True)
        lifted = self.product_service.lift_duality(psi, 2)
        model = self._pathwise_model(psi, 2)
        x, y = (1, 2), (1, 0)
        estimate = self.simulation_service.estimate_expectation_duality(
            model, lifted, x, y, 1.0, self.settings.EXPECTATION_REPLICATES, 7,
        )
        lines = []
        if not estimate.agree:
            lines.append(f'lhs {estimate.lhs} and rhs {estimate.rhs} differ by more than 4 standard errors')
        dual_exact = self.simulation_service.exact_semigroup_expectation(model, lifted, x, y, 1.0, dual=True)
        if abs(estimate.exact - dual_exact) > 1e-9:
            lines.append(f'uniformization gives {estimate.exact} forward and {dual_exact} dual')
        for side, value, se in (('lhs', estimate.lhs, estimate.lhs_se), ('rhs', estimate.rhs, estimate.rhs_se)):
            if abs(value - estimate.exact) > 1e-9 + 4 * se:
                lines.append(f'{side} {value} is far from the exact value {estimate.exact}')

        identity = tuple(psi.s.elements)
        zero = (psi.s.neutral,) * psi.s.order
        projection = next(
            h for h in self.homdual_service.hom_set(psi.s, psi.s).base
            if h not in (identity, zero) and all(h[h[v]] == h[v] for v in psi.s.elements)
        )
        idempotent = SiteMap(lifted.s_space, ((projection, zero), (zero, identity)))
        single = self.simulation_service.build_rate_model(lifted.s_space, [('m', idempotent, 1.3)])
        closed = self.simulation_service.idempotent_map_expectation(lifted, idempotent, 1.3, x, y, 0.7)
        exact = self.simulation_service.exact_semigroup_expectation(single, lifted, x, y, 0.7)
        if abs(closed - exact) > 1e-9:
            lines.append(f'closed form {closed} and uniformization {exact} differ')
        return '\n'.join(lines)

