import logging
from itertools import product
from typing import Callable, Optional

import numpy as np

from monoid_duality import config
from monoid_duality.errors import (
    DualityViolation,
    MalformedTable,
    NoDual,
    SizeBudgetExceeded
)
from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.duality_function import DualityFunction
from monoid_duality.models.lattice import Lattice
from monoid_duality.models.monoid import Monoid
from monoid_duality.models.semiring import Semiring
from monoid_duality.models.site_space import LiftedDuality, SiteMap, SiteSpace
from monoid_duality.services.homdual_service import HomDualService, search_homs

logger = logging.getLogger(__name__)

# Lifts are re-verified at the product level up to this many sites and local order.
MAX_VERIFIED_SITES = 3
MAX_VERIFIED_LOCAL_ORDER = 3


def configuration_array(orders) -> np.ndarray:
    '''All configurations of a product of carriers with the given orders, in itertools.product order.'''
    orders = tuple(orders)
    return np.indices(orders).reshape(len(orders), -1).T


def encode(configs: np.ndarray, orders) -> np.ndarray:
    return np.ravel_multi_index(tuple(np.asarray(configs).T), tuple(orders))


def is_hom(s: Monoid, t: Monoid, values) -> bool:
    '''True when the value table is a monoid homomorphism s -> t.'''
    values = np.asarray(values)
    if values[s.neutral] != t.neutral:
        return False
    source = np.array(s.op.table)
    target = np.array(t.op.table)
    return bool((values[source] == target[values[:, None], values[None, :]]).all())


class ProductService:
    """
    Service layer for product spaces S^L, site maps in matrix form, lifted
    duality functions and their dual maps.

    Attributes:
    ----------
    homdual_service : HomDualService
        Used for hom sets and for checking the four duality conditions.
    settings : DevConfig or ProductionConfig
        Supplies SIZE_BUDGET and SAMPLE_PAIRS.
    """

    def __init__(self, homdual_service: HomDualService = HomDualService(), settings=config) -> None:
        self.homdual_service = homdual_service
        self.settings = settings

    @property
    def algebra_service(self):
        return self.homdual_service.algebra_service

    @property
    def catalog_repository(self):
        return self.homdual_service.catalog_repository

    def _budget(self, budget: Optional[int]) -> int:
        return budget or self.settings.SIZE_BUDGET

    def direct_product(self, monoids, budget: int = None) -> Monoid:
        """
        The product S_1 x ... x S_n with componentwise operation.

        Elements are numbered in itertools.product order, the first factor
        varying slowest; the neutral element is the tuple of neutral elements.

        Raises:
        ------
        SizeBudgetExceeded
            When the product table has more than ``budget`` cells.
        """
        monoids = list(monoids)
        if not monoids:
            raise MalformedTable('a product needs at least one factor')
        orders = [m.order for m in monoids]
        size = int(np.prod(orders))
        budget = self._budget(budget)
        if size * size > budget:
            raise SizeBudgetExceeded(size * size, budget)
        configs = configuration_array(orders)
        table = np.zeros((size, size), dtype=int)
        for i, monoid in enumerate(monoids):
            op = np.array(monoid.op.table)
            column = configs[:, i]
            table = table * orders[i] + op[column[:, None], column[None, :]]
        neutral = int(np.ravel_multi_index(tuple(m.neutral for m in monoids), tuple(orders)))
        return Monoid(CayleyTable(table.tolist()), neutral)

    def product_monoid(self, local: Monoid, k: int, budget: int = None) -> Monoid:
        '''The k-fold product local^k.'''
        return self.direct_product([local] * k, budget)

    def hom_tuple_to_global(self, sources, target: Monoid, fs) -> tuple:
        """
        F(x) = f_1(x_1) + ... + f_n(x_n), the homomorphism out of the product
        determined by one homomorphism per factor.

        Returns:
        -------
        tuple
            Value table of F on the product, indexed like ``direct_product``.
        """
        configs = configuration_array([s.order for s in sources])
        op = np.array(target.op.table)
        values = np.full(len(configs), target.neutral)
        for i, f in enumerate(fs):
            values = op[values, np.asarray(f)[configs[:, i]]]
        return tuple(int(v) for v in values)

    def global_to_hom_tuple(self, sources, target: Monoid, values) -> tuple:
        '''Restrictions of F to the single-factor configurations.'''
        orders = [s.order for s in sources]
        zero = [s.neutral for s in sources]
        fs = []
        for i, source in enumerate(sources):
            local = []
            for v in source.elements:
                config = list(zero)
                config[i] = v
                local.append(int(values[np.ravel_multi_index(tuple(config), tuple(orders))]))
            fs.append(tuple(local))
        return tuple(fs)

    def product_homs(self, sources, target: Monoid) -> list:
        '''H(S_1 x ... x S_n, T) generated from tuples of local homomorphisms.'''
        local = [self.homdual_service.hom_set(s, target).base for s in sources]
        return [self.hom_tuple_to_global(sources, target, fs) for fs in product(*local)]

    def _matrix_array(self, site_map: SiteMap) -> np.ndarray:
        return np.array(site_map.matrix, dtype=int).reshape(site_map.space.sites, site_map.space.sites, -1)

    def apply_site_map(self, site_map: SiteMap, configs) -> np.ndarray:
        """
        Apply m to an array of configurations, one per row:
        m(x)_j = sum over i of M_ij(x_i), summed in ascending site order.
        """
        configs = np.atleast_2d(np.asarray(configs, dtype=int))
        local = site_map.space.local
        op = np.array(local.op.table)
        matrix = self._matrix_array(site_map)
        k = site_map.space.sites
        out = np.full(configs.shape, local.neutral)
        for j in range(k):
            for i in range(k):
                out[:, j] = op[out[:, j], matrix[i, j][configs[:, i]]]
        return out

    def global_index_map(self, site_map: SiteMap) -> np.ndarray:
        '''``g[idx]`` is the index of m(x) for the configuration x with index idx.'''
        space = site_map.space
        orders = (space.local.order,) * space.sites
        return encode(self.apply_site_map(site_map, configuration_array(orders)), orders)

    def validate_site_map(self, site_map: SiteMap, semiring: Semiring = None) -> SiteMap:
        """
        Check that every entry M_ij is a homomorphism of the local monoid, or a
        left module map when ``semiring`` is given.

        Raises:
        ------
        NoDual
        """
        local = site_map.space.local
        left_maps = None
        if semiring is not None:
            left_maps = set(self.module_maps(semiring, 1, 'left'))
        for i, row in enumerate(site_map.matrix):
            for j, entry in enumerate(row):
                if len(entry) != local.order:
                    raise MalformedTable(f'entry ({i}, {j}) has {len(entry)} values, expected {local.order}', i=i, j=j)
                ok = tuple(entry) in left_maps if left_maps is not None else is_hom(local, local, entry)
                if not ok:
                    raise NoDual(f'matrix entry ({i}, {j}) is not a structure-preserving map', i=i, j=j, entry=entry)
        return site_map

    def global_hom_set_matrix_check(self, space: SiteSpace, f: Callable) -> Optional[SiteMap]:
        """
        Recover the matrix form of an arbitrary map f: S^L -> S^L.

        M_ij(v) is read off f at the configuration with v at site i and the
        neutral element elsewhere.

        Returns:
        -------
        SiteMap or None
            The matrix when f is a homomorphism, None otherwise.
        """
        local = space.local
        k = space.sites
        matrix = []
        for i in range(k):
            images = [f(space.unit_vector(i, v)) for v in local.elements]
            matrix.append(tuple(tuple(image[j] for image in images) for j in range(k)))
        if not all(is_hom(local, local, entry) for row in matrix for entry in row):
            return None
        site_map = SiteMap(space, tuple(matrix))
        configs = configuration_array((local.order,) * k)
        rebuilt = self.apply_site_map(site_map, configs)
        for x, image in zip(configs, rebuilt):
            if tuple(f(tuple(int(v) for v in x))) != tuple(int(v) for v in image):
                return None
        return site_map

    def lift_heterogeneous(self, psis, verify: bool = None) -> LiftedDuality:
        """
        Psi(x, y) = sum over sites of psi_i(x_i, y_i), one local duality per site.

        All local duality functions must share T. With ``verify`` left to None
        the lift is checked at the product level when it is small enough.
        """
        psis = tuple(psis)
        if not psis:
            raise MalformedTable('a lift needs at least one site')
        if any(psi.t != psis[0].t for psi in psis):
            raise MalformedTable('local duality functions take values in different monoids')
        lifted = LiftedDuality(psis)
        small = len(psis) <= MAX_VERIFIED_SITES and all(
            max(psi.s.order, psi.r.order) <= MAX_VERIFIED_LOCAL_ORDER for psi in psis
        )
        if verify or (verify is None and small):
            self.verify_lifted(lifted)
        return lifted

    def lift_duality(self, psi: DualityFunction, k: int, verify: bool = None) -> LiftedDuality:
        '''The homogeneous lift of psi to k sites.'''
        if k < 1:
            raise MalformedTable('a lift needs at least one site', sites=k)
        return self.lift_heterogeneous((psi,) * k, verify)

    def lifted_table(self, lifted: LiftedDuality, budget: int = None) -> np.ndarray:
        '''Psi on all configuration pairs, rows indexed by S-configurations.'''
        s_orders = [psi.s.order for psi in lifted.local_psis]
        r_orders = [psi.r.order for psi in lifted.local_psis]
        pairs = int(np.prod(s_orders)) * int(np.prod(r_orders))
        budget = self._budget(budget)
        if pairs > budget:
            raise SizeBudgetExceeded(pairs, budget)
        xs = configuration_array(s_orders)
        ys = configuration_array(r_orders)
        op = np.array(lifted.t.op.table)
        table = np.full((len(xs), len(ys)), lifted.t.neutral)
        for i, psi in enumerate(lifted.local_psis):
            local = np.array(psi.table)
            table = op[table, local[xs[:, i][:, None], ys[:, i][None, :]]]
        return table

    def evaluate_pairs(self, lifted: LiftedDuality, xs, ys) -> np.ndarray:
        '''Psi(x_b, y_b) for matching rows of two configuration arrays.'''
        xs = np.atleast_2d(np.asarray(xs, dtype=int))
        ys = np.atleast_2d(np.asarray(ys, dtype=int))
        op = np.array(lifted.t.op.table)
        values = np.full(len(xs), lifted.t.neutral)
        for i, psi in enumerate(lifted.local_psis):
            values = op[values, np.array(psi.table)[xs[:, i], ys[:, i]]]
        return values

    def verify_lifted(self, lifted: LiftedDuality) -> LiftedDuality:
        """
        Check the four conditions for Psi between the product spaces, with the
        hom sets of the products generated from local hom tuples.

        Raises:
        ------
        Condition1Fail, Condition2Fail, Condition3Fail, Condition4Fail, SizeBudgetExceeded
        """
        psis = lifted.local_psis
        s_factors = [psi.s for psi in psis]
        r_factors = [psi.r for psi in psis]
        table = self.lifted_table(lifted)
        global_psi = DualityFunction(
            self.direct_product(s_factors), self.direct_product(r_factors), lifted.t, table.tolist(),
        )
        self.homdual_service.verify_duality(
            global_psi,
            s_homs=self.product_homs(s_factors, lifted.t),
            r_homs=self.product_homs(r_factors, lifted.t),
        )
        logger.debug('lift to %d sites verified', lifted.sites)
        return lifted

    def local_dual(self, psi: DualityFunction, h) -> tuple:
        """
        The unique h^ with psi(h(x), y) = psi(x, h^(y)) for all x and y.

        For each y the column x -> psi(h(x), y) is looked up among the columns
        of psi; distinct columns make the answer unique.

        Raises:
        ------
        NoDual
            When some column x -> psi(h(x), y) is not a column of psi.
        """
        columns = {column: y for y, column in enumerate(psi.columns())}
        dual = []
        for y in psi.r.elements:
            wanted = tuple(psi(h[x], y) for x in psi.s.elements)
            if wanted not in columns:
                raise NoDual(f'no dual value at {y}', y=y, map=tuple(h))
            dual.append(columns[wanted])
        return tuple(dual)

    def find_dual_by_search(self, table, m_index) -> list:
        """
        Every candidate for the dual of a map, found by comparing columns.

        Parameters:
        ----------
        table : array
            Any |X| x |Y| table.
        m_index : array
            The map on X, as image indices.

        Returns:
        -------
        list[list[int]]
            For each y the values y' with table[m(x), y] = table[x, y'] for all x.
            A dual exists iff no list is empty; it is unique iff all have length one.
        """
        table = np.asarray(table)
        target = table[np.asarray(m_index), :]
        matches = (target[:, :, None] == table[:, None, :]).all(axis=0)
        return [np.flatnonzero(row).tolist() for row in matches]

    def dual_map(self, lifted: LiftedDuality, m: SiteMap, budget: int = None) -> SiteMap:
        """
        The dual map m^ on R^L with Psi(m(x), y) = Psi(x, m^(y)).

        The matrix of m^ is the transpose of the matrix of local duals:
        N_ji is the local dual of M_ij. The identity is then checked on every
        configuration pair when there are at most ``budget`` of them, and on
        SAMPLE_PAIRS random pairs otherwise.

        Raises:
        ------
        NoDual
            When an entry of m is not a homomorphism (a left module map for
            semiring lifts).
        DualityViolation
        """
        if not lifted.is_homogeneous():
            raise MalformedTable('dual maps are built for homogeneous lifts')
        psi = lifted.local_psi
        k = m.space.sites
        if k != lifted.sites:
            raise MalformedTable(f'map acts on {k} sites, the duality on {lifted.sites}', sites=k)
        self.validate_site_map(m, lifted.semiring if lifted.kind == 'semiring' else None)

        duals = [[self.local_dual(psi, m.matrix[i][j]) for j in range(k)] for i in range(k)]
        dual = SiteMap(SiteSpace(psi.r, k), tuple(tuple(duals[i][j] for i in range(k)) for j in range(k)))
        self.check_dual_identity(lifted, m, dual, budget)
        return dual

    def check_dual_identity(self, lifted: LiftedDuality, m: SiteMap, dual: SiteMap, budget: int = None) -> int:
        """
        Check Psi(m(x), y) = Psi(x, m^(y)), exhaustively within ``budget`` and
        by sampling above it.

        Returns:
        -------
        int
            Number of pairs checked.

        Raises:
        ------
        DualityViolation
        """
        s_space, r_space = m.space, dual.space
        pairs = s_space.size * r_space.size
        budget = self._budget(budget)
        if pairs <= budget:
            table = self.lifted_table(lifted, budget)
            gx = self.global_index_map(m)
            gy = self.global_index_map(dual)
            bad = np.argwhere(table[gx, :] != table[:, gy])
            if len(bad):
                x, y = bad[0]
                raise DualityViolation(s_space.config(int(x)), r_space.config(int(y)))
            return pairs

        rng = np.random.default_rng(0)
        samples = self.settings.SAMPLE_PAIRS
        xs = rng.integers(0, s_space.local.order, size=(samples, s_space.sites))
        ys = rng.integers(0, r_space.local.order, size=(samples, r_space.sites))
        lhs = self.evaluate_pairs(lifted, self.apply_site_map(m, xs), ys)
        rhs = self.evaluate_pairs(lifted, xs, self.apply_site_map(dual, ys))
        bad = np.flatnonzero(lhs != rhs)
        if len(bad):
            b = bad[0]
            raise DualityViolation(tuple(int(v) for v in xs[b]), tuple(int(v) for v in ys[b]))
        logger.info('dual identity checked on %d sampled pairs', samples)
        return samples

    def module_maps(self, semiring: Semiring, k: int, side: str = 'left', budget: int = None) -> list:
        """
        L(S^k, S) (``side='left'``) or R(S^k, S) (``side='right'``): additive
        maps h with h(z.x) = z.h(x), respectively h(x.z) = h(x).z.

        Every additive map S^k -> S is found by the homomorphism search, then
        the ones that commute with scaling on the given side are kept.

        Raises:
        ------
        SizeBudgetExceeded
            When the search visits more than ``budget`` partial assignments.

        Returns:
        -------
        list[tuple]
            Value tables on S^k in product order, sorted.
        """
        if side not in ('left', 'right'):
            raise MalformedTable(f'unknown side {side!r}', side=side)
        n = semiring.order
        orders = (n,) * k
        product_add = self.product_monoid(semiring.add, k)
        additive = np.array(search_homs(product_add, semiring.add, self._budget(budget)), dtype=int)

        mul = np.array(semiring.mul.table)
        configs = configuration_array(orders)
        keep = np.ones(len(additive), dtype=bool)
        for z in range(n):
            if side == 'left':
                scaled, image = encode(mul[z, configs], orders), mul[z, additive]
            else:
                scaled, image = encode(mul[configs, z], orders), mul[additive, z]
            keep &= (additive[:, scaled] == image).all(axis=1)
        return sorted(tuple(int(v) for v in f) for f in additive[keep])

    def semiring_inner_duality(self, semiring: Semiring, k: int, verify: bool = None) -> LiftedDuality:
        """
        Psi(x, y) = x_1.y_1 + ... + x_k.y_k on S^k x S^k.

        Columns must be exactly the left module maps L(S^k, S) and rows the
        right module maps R(S^k, S); checked when the pair table fits the size
        budget, or always with ``verify=True``.
        """
        add = semiring.add
        local = DualityFunction(add, add, add, semiring.mul.table)
        lifted = LiftedDuality((local,) * k, 'semiring', semiring)
        if verify is False:
            return lifted
        size = semiring.order ** k
        if verify or size * size <= self.settings.SIZE_BUDGET:
            product_add = self.product_monoid(add, k)
            global_psi = DualityFunction(product_add, product_add, add, self.lifted_table(lifted).tolist())
            self.homdual_service.verify_duality(
                global_psi,
                s_homs=self.module_maps(semiring, k, 'left'),
                r_homs=self.module_maps(semiring, k, 'right'),
            )
        return lifted

    def lattice_duality_function(self, lattice: Lattice) -> DualityFunction:
        """
        psi(x, y) = 0 if x <= y* and 1 otherwise, between (L, join) and
        (L*, join), with values in M1.

        L* is L with the order reversed and x* = x, so the join of L* is the
        meet of L and its neutral element is the top of L.

        Returns:
        -------
        DualityFunction
            Verified, and labelled when the carriers are catalogued.
        """
        algebra = self.algebra_service
        lattice = algebra.validate_lattice(lattice)
        reversed_lattice, star = algebra.dual_lattice(lattice)
        s = algebra.lattice_join_monoid(lattice)
        r = algebra.lattice_join_monoid(reversed_lattice)
        t = self.catalog_repository.get('M1').monoid
        n = lattice.order
        table = tuple(tuple(0 if lattice.leq[x][star[y]] else 1 for y in range(n)) for x in range(n))
        psi = self.homdual_service.verify_duality(DualityFunction(s, r, t, table))
        return self.homdual_service.label_duality(psi)

    def additive_duality(self, k: int) -> DualityFunction:
        '''psi_add(x, y) = 1 iff x_i = y_i = 1 at some site, on ({0,1}, or)^k.'''
        m1 = self.catalog_repository.get('M1').monoid
        space = self.product_monoid(m1, k)
        configs = configuration_array((2,) * k)
        table = (configs[:, None, :] & configs[None, :, :]).any(axis=2).astype(int)
        return DualityFunction(space, space, m1, table.tolist(), t_label='M1')

    def cancellative_duality(self, k: int) -> DualityFunction:
        '''psi_canc(x, y) = x_1 y_1 + ... + x_k y_k mod 2, on (Z/2)^k.'''
        m2 = self.catalog_repository.get('M2').monoid
        space = self.product_monoid(m2, k)
        configs = configuration_array((2,) * k)
        table = (configs[:, None, :] * configs[None, :, :]).sum(axis=2) % 2
        return DualityFunction(space, space, m2, table.tolist(), t_label='M2')
