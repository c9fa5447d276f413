import logging
import math

import numpy as np
from scipy.stats import poisson

from monoid_duality import config
from monoid_duality.errors import (
    DualityViolation,
    InvalidRate,
    MalformedTable,
    NoRealEmbedding,
    SizeBudgetExceeded,
    StateSpaceTooLarge,
    WindowViolation
)
from monoid_duality.models.simulation import (
    EventStream,
    ExpectationEstimate,
    Flow,
    PathwiseReport,
    RatedMap,
    RateModel
)
from monoid_duality.models.site_space import LiftedDuality, SiteMap, SiteSpace
from monoid_duality.services.product_service import ProductService, configuration_array, encode

logger = logging.getLogger(__name__)

# Labels for the two sides of an expectation identity in seed derivation.
FORWARD_SIDE = 0
DUAL_SIDE = 1


class SimulationService:
    """
    Service layer for interacting particle systems on S^L driven by Poisson
    clocks: event streams, stochastic flows, dual flows and the pathwise and
    expectation forms of duality.

    Event streams are generated on a finite window only. Simultaneous events
    have probability zero; the generator orders ties by the position of the
    map in the rate model.

    Attributes:
    ----------
    product_service : ProductService
        Used for site maps, dual maps and lifted duality tables.
    settings : DevConfig or ProductionConfig
        Supplies SIZE_BUDGET, SAMPLE_PAIRS, REPLICATE_BLOCK and MAX_UNIFORMIZATION_STATES.
    """

    def __init__(self, product_service: ProductService = ProductService(), settings=config) -> None:
        self.product_service = product_service
        self.settings = settings

    def build_rate_model(self, space: SiteSpace, maps, semiring=None) -> RateModel:
        """
        Parameters:
        ----------
        space : SiteSpace
        maps : iterable of RatedMap or (map_id, SiteMap, rate)
        semiring : Semiring, optional
            Validate the matrix entries as left module maps instead of homomorphisms.

        Raises:
        ------
        InvalidRate
            On negative, infinite or NaN rates and on repeated map ids.
        NoDual
            When a matrix entry is not structure preserving.
        """
        rated = []
        for item in maps:
            if not isinstance(item, RatedMap):
                item = RatedMap(*item)
            rate = float(item.rate)
            if not math.isfinite(rate) or rate < 0:
                raise InvalidRate(f'rate of {item.map_id} must be finite and nonnegative', map_id=item.map_id, rate=rate)
            if item.site_map.space != space:
                raise MalformedTable(f'map {item.map_id} acts on a different space', map_id=item.map_id)
            if any(other.map_id == item.map_id for other in rated):
                raise InvalidRate(f'map id {item.map_id} is used twice', map_id=item.map_id)
            self.product_service.validate_site_map(item.site_map, semiring)
            rated.append(RatedMap(item.map_id, item.site_map, rate))
        return RateModel(space, tuple(rated))

    def dualize_model(self, model: RateModel, lifted: LiftedDuality) -> RateModel:
        '''The rate model of the dual maps, each at the rate of its original.'''
        return RateModel(lifted.r_space, tuple(
            RatedMap(rated.map_id, self.product_service.dual_map(lifted, rated.site_map), rated.rate)
            for rated in model.maps
        ))

    def sample_event_stream(self, model: RateModel, window, seed: int) -> EventStream:
        """
        A marked Poisson process on the window (s, u].

        Inter-arrival times are exponential at the total rate and each event's
        map is drawn with probability proportional to its rate. The same seed
        always gives the same stream.

        Timestamps are nondecreasing. Two events can only share a timestamp at
        floating-point resolution; such ties are kept and ordered by the
        position of their maps in the rate model, so (time, position) is
        strictly increasing.
        """
        s, u = (float(v) for v in window)
        if u < s:
            raise WindowViolation(s, u, (s, u))
        maps = tuple((rated.map_id, rated.site_map) for rated in model.maps)
        total = model.total_rate
        if total == 0 or u == s:
            return EventStream((s, u), (), maps, seed)

        rng = np.random.default_rng(seed)
        chunk = int(total * (u - s) * 1.2) + 16
        times = []
        current = s
        while current <= u:
            arrivals = current + np.cumsum(rng.exponential(1.0 / total, size=chunk))
            times.append(arrivals)
            current = arrivals[-1]
        times = np.concatenate(times)
        times = times[times <= u]
        rates = np.array([rated.rate for rated in model.maps])
        marks = rng.choice(len(model.maps), size=len(times), p=rates / total)
        order = np.lexsort((marks, times))
        events = tuple((model.maps[marks[i]].map_id, float(times[i])) for i in order)
        logger.debug('seed %d: %d events on [%g, %g]', seed, len(events), s, u)
        return EventStream((s, u), events, maps, seed)

    def _check_spaces(self, model: RateModel, lifted: LiftedDuality) -> None:
        if model.space != lifted.s_space:
            raise MalformedTable(
                f'the rate model acts on {model.space.sites} sites of order {model.space.local.order}, '
                f'the duality on {lifted.s_space.sites} sites of order {lifted.s_space.local.order}',
                model_sites=model.space.sites, lifted_sites=lifted.s_space.sites,
            )

    def _events_between(self, flow: Flow, s: float, u: float) -> list:
        lower, upper = flow.stream.window
        if not lower <= s <= u <= upper:
            raise WindowViolation(s, u, flow.stream.window)
        if flow.convention == '+':
            return [map_id for map_id, t in flow.stream.events if s < t <= u]
        if flow.convention == '-':
            return [map_id for map_id, t in flow.stream.events if s <= t < u]
        raise MalformedTable(f'unknown boundary convention {flow.convention!r}', convention=flow.convention)

    def apply_flow_array(self, flow: Flow, configs, s: float, u: float) -> np.ndarray:
        '''Apply the flow on [s, u] to every row of a configuration array.'''
        configs = np.atleast_2d(np.asarray(configs, dtype=int))
        for map_id in self._events_between(flow, s, u):
            configs = self.product_service.apply_site_map(flow.stream.site_map(map_id), configs)
        return configs

    def apply_flow(self, flow: Flow, x, s: float, u: float) -> tuple:
        """
        X_{s,u}(x): the maps of the events in the window applied in time order.

        Convention '+' uses the events with s < t <= u, '-' those with
        s <= t < u.

        Raises:
        ------
        WindowViolation
            When [s, u] is not inside the stream's window.
        """
        return tuple(int(v) for v in self.apply_flow_array(flow, [x], s, u)[0])

    def dualize_stream(self, stream: EventStream, lifted: LiftedDuality, dual_maps: dict = None) -> EventStream:
        """
        The dual stream: each event (m, t) becomes (m^, -t) on the window
        [-u, -s], so the dual maps act in reverse order.

        ``dual_maps`` maps ids to precomputed dual SiteMaps; missing ones are
        built with ProductService.dual_map.
        """
        dual_maps = dict(dual_maps or {})
        for map_id, site_map in stream.maps:
            if map_id not in dual_maps:
                dual_maps[map_id] = self.product_service.dual_map(lifted, site_map)
        s, u = stream.window
        events = tuple((map_id, -t) for map_id, t in reversed(stream.events))
        maps = tuple((map_id, dual_maps[map_id]) for map_id, _ in stream.maps)
        return EventStream((-u, -s), events, maps, stream.seed)

    def check_pathwise_duality(self, model: RateModel, lifted: LiftedDuality, window, seed: int,
                               coverage: str = None, stream: EventStream = None,
                               dual_stream: EventStream = None) -> PathwiseReport:
        """
        Check Psi(X_{s,u}(x), y) = Psi(x, Y_{-u,-s}(y)) on one realised stream.

        Both pairings of boundary conventions are checked: X+ against Y- and
        X- against Y+.

        Parameters:
        ----------
        coverage : str, optional
            'exhaustive' for all configuration pairs, 'sampled' for SAMPLE_PAIRS
            random pairs; by default exhaustive when the pairs fit SIZE_BUDGET.
        stream, dual_stream : EventStream, optional
            Use these instead of sampling and dualizing.

        Raises:
        ------
        DualityViolation
            On the first pair where the identity fails.
        MalformedTable
            When the model and the duality act on different spaces.
        """
        self._check_spaces(model, lifted)
        s, u = (float(v) for v in window)
        stream = stream or self.sample_event_stream(model, (s, u), seed)
        dual_stream = dual_stream or self.dualize_stream(stream, lifted)
        s_space, r_space = lifted.s_space, lifted.r_space
        pairs = s_space.size * r_space.size
        budget = self.settings.SIZE_BUDGET
        if coverage is None:
            coverage = 'exhaustive' if pairs <= budget else 'sampled'
        if coverage == 'exhaustive' and pairs > budget:
            raise SizeBudgetExceeded(pairs, budget)

        checked = 0
        for forward, backward in (('+', '-'), ('-', '+')):
            flow = Flow(stream, forward, 'forward')
            dual_flow = Flow(dual_stream, backward, 'dual')
            if coverage == 'exhaustive':
                s_orders = (s_space.local.order,) * s_space.sites
                r_orders = (r_space.local.order,) * r_space.sites
                xs = configuration_array(s_orders)
                ys = configuration_array(r_orders)
                gx = encode(self.apply_flow_array(flow, xs, s, u), s_orders)
                gy = encode(self.apply_flow_array(dual_flow, ys, -u, -s), r_orders)
                table = self.product_service.lifted_table(lifted, budget)
                bad = np.argwhere(table[gx, :] != table[:, gy])
                if len(bad):
                    x, y = bad[0]
                    raise DualityViolation(s_space.config(int(x)), r_space.config(int(y)), stream)
                checked += pairs
            else:
                rng = np.random.default_rng(seed)
                samples = self.settings.SAMPLE_PAIRS
                xs = rng.integers(0, s_space.local.order, size=(samples, s_space.sites))
                ys = rng.integers(0, r_space.local.order, size=(samples, r_space.sites))
                lhs = self.product_service.evaluate_pairs(lifted, self.apply_flow_array(flow, xs, s, u), ys)
                rhs = self.product_service.evaluate_pairs(lifted, xs, self.apply_flow_array(dual_flow, ys, -u, -s))
                bad = np.flatnonzero(lhs != rhs)
                if len(bad):
                    b = bad[0]
                    raise DualityViolation(tuple(int(v) for v in xs[b]), tuple(int(v) for v in ys[b]), stream)
                checked += samples
        logger.info('seed %d: pathwise duality holds on %d pairs', seed, checked)
        return PathwiseReport(seed, len(stream.events), coverage, checked, 0, (s, u))

    def _real_values(self, lifted: LiftedDuality) -> np.ndarray:
        embedding = lifted.local_psi.real_embedding
        if embedding is None:
            raise NoRealEmbedding('the duality function has no real embedding of its values')
        return np.asarray(embedding, dtype=float)[self.product_service.lifted_table(lifted)]

    def _stacked_index_maps(self, model: RateModel) -> np.ndarray:
        return np.stack([self.product_service.global_index_map(rated.site_map) for rated in model.maps])

    def _simulate_side(self, model: RateModel, start: int, t: float, replicates: int,
                       seed: int, side: int) -> np.ndarray:
        '''Final state indices of ``replicates`` independent runs from ``start``.'''
        finals = np.full(replicates, start)
        total = model.total_rate
        if total == 0 or t == 0:
            return finals
        maps = self._stacked_index_maps(model)
        p = np.array([rated.rate for rated in model.maps]) / total
        block = self.settings.REPLICATE_BLOCK
        for begin in range(0, replicates, block):
            size = min(block, replicates - begin)
            paths = []
            for replicate in range(begin, begin + size):
                rng = np.random.default_rng(np.random.SeedSequence([seed, side, replicate]))
                paths.append(rng.choice(len(model.maps), size=rng.poisson(total * t), p=p))
            counts = np.array([len(path) for path in paths])
            marks = np.zeros((size, int(counts.max(initial=0))), dtype=int)
            for row, path in enumerate(paths):
                marks[row, :len(path)] = path
            state = np.full(size, start)
            for step in range(marks.shape[1]):
                active = step < counts
                state[active] = maps[marks[active, step], state[active]]
            finals[begin:begin + size] = state
        return finals

    def estimate_expectation_duality(self, model: RateModel, lifted: LiftedDuality, x, y, t: float,
                                     replicates: int, seed: int, dual_model: RateModel = None) -> ExpectationEstimate:
        """
        Monte-Carlo estimates of E[Psi(X_t^x, y)] and E[Psi(x, Y_t^y)] in the reals.

        The two sides use independent random numbers: replicate i of side k is
        driven by SeedSequence([seed, k, i]), so results do not depend on
        REPLICATE_BLOCK, which only bounds the memory of one batch. The exact
        value is attached when the state space is small enough for
        uniformization.

        Raises:
        ------
        NoRealEmbedding, MalformedTable
        """
        self._check_spaces(model, lifted)
        real = self._real_values(lifted)
        if t < 0:
            raise WindowViolation(0.0, t, (0.0, math.inf))
        if replicates < 1:
            raise MalformedTable('at least one replicate is needed', replicates=replicates)
        dual_model = dual_model or self.dualize_model(model, lifted)
        x_index = lifted.s_space.index(x)
        y_index = lifted.r_space.index(y)

        lhs = real[self._simulate_side(model, x_index, t, replicates, seed, FORWARD_SIDE), y_index]
        rhs = real[x_index, self._simulate_side(dual_model, y_index, t, replicates, seed, DUAL_SIDE)]

        def standard_error(values) -> float:
            return float(values.std(ddof=1) / math.sqrt(len(values))) if len(values) > 1 else 0.0

        exact = None
        if lifted.s_space.size <= self.settings.MAX_UNIFORMIZATION_STATES:
            exact = self.exact_semigroup_expectation(model, lifted, x, y, t)
        estimate = ExpectationEstimate(
            t, replicates, seed, float(lhs.mean()), standard_error(lhs), float(rhs.mean()), standard_error(rhs), exact,
        )
        logger.info('t=%g: lhs %.6f rhs %.6f', t, estimate.lhs, estimate.rhs)
        return estimate

    def exact_semigroup_expectation(self, model: RateModel, lifted: LiftedDuality, x, y, t: float,
                                    tol: float = 1e-12, dual: bool = False, dual_model: RateModel = None) -> float:
        """
        E[Psi(X_t^x, y)] by uniformization, or E[Psi(x, Y_t^y)] with ``dual``.

        The jump chain moves with the map of rate r_m with probability r_m / r,
        r the total rate; the series sum_n Poisson(n; rt) (P^n f)(x) is cut where
        the Poisson tail drops below ``tol``.

        Raises:
        ------
        StateSpaceTooLarge, NoRealEmbedding
        """
        real = self._real_values(lifted)
        if dual:
            dual_model = dual_model or self.dualize_model(model, lifted)
            space, start, chain = lifted.r_space, lifted.r_space.index(y), dual_model
            f = real[lifted.s_space.index(x), :]
        else:
            space, start, chain = lifted.s_space, lifted.s_space.index(x), model
            f = real[:, lifted.r_space.index(y)]
        cap = self.settings.MAX_UNIFORMIZATION_STATES
        if space.size > cap:
            raise StateSpaceTooLarge(space.size, cap)
        total = chain.total_rate
        if total == 0 or t == 0:
            return float(f[start])

        lam = total * t
        maps = self._stacked_index_maps(chain)
        p = np.array([rated.rate for rated in chain.maps]) / total
        terms = int(poisson.isf(tol, lam)) + 1
        weights = poisson.pmf(np.arange(terms + 1), lam)
        value = 0.0
        v = f
        for weight in weights:
            value += weight * v[start]
            v = (p[:, None] * v[maps]).sum(axis=0)
        return float(value)

    def idempotent_map_expectation(self, lifted: LiftedDuality, site_map: SiteMap, rate: float, x, y, t: float) -> float:
        """
        Closed form for a single idempotent map m at rate r:
        exp(-rt) Psi(x, y) + (1 - exp(-rt)) Psi(m(x), y).
        """
        product_service = self.product_service
        index = product_service.global_index_map(site_map)
        if not (index[index] == index).all():
            raise MalformedTable('map is not idempotent')
        real = self._real_values(lifted)
        x_index = lifted.s_space.index(x)
        y_index = lifted.r_space.index(y)
        decay = math.exp(-rate * t)
        return float(decay * real[x_index, y_index] + (1 - decay) * real[index[x_index], y_index])
