import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from monoid_duality.config.dev_config import DevConfig
from monoid_duality.errors import (
    DualityViolation,
    InvalidRate,
    MalformedTable,
    NoDual,
    NoRealEmbedding,
    StateSpaceTooLarge,
    WindowViolation
)
from monoid_duality.models import EventStream, Flow, SiteMap, SiteSpace
from monoid_duality.services.reproduction_service import shift_map, spread_map
from monoid_duality.services.simulation_service import SimulationService

SIMULATION = SimulationService()


def local_maps(local):
    return tuple(local.elements), (local.neutral,) * local.order


def spread_and_shift(simulation_service, local, sites):
    space = SiteSpace(local, sites)
    identity, zero = local_maps(local)
    return simulation_service.build_rate_model(space, [
        ('spread', spread_map(space, identity, zero), 1.0),
        ('shift', shift_map(space, identity, zero), 2.0),
    ])


def named(simulation_service, name, transpose=False):
    homdual = simulation_service.product_service.homdual_service
    psi = homdual.verify_duality(homdual.duality_from_named(name))
    return homdual.transpose(psi) if transpose else psi


@pytest.fixture(scope='module')
def psi1_setup(simulation_service):
    psi = named(simulation_service, 'psi1')
    lifted = simulation_service.product_service.lift_duality(psi, 3)
    return lifted, spread_and_shift(simulation_service, psi.s, 3)


@pytest.fixture(scope='module')
def psi5_setup(simulation_service):
    psi = named(simulation_service, 'psi5', transpose=True)
    lifted = simulation_service.product_service.lift_duality(psi, 2)
    return lifted, spread_and_shift(simulation_service, psi.s, 2)


def test_build_rate_model_rejects_bad_input(simulation_service, monoid):
    space = SiteSpace(monoid('M1'), 1)
    identity = SiteMap(space, (((0, 1),),))
    with pytest.raises(InvalidRate):
        simulation_service.build_rate_model(space, [('m', identity, -1.0)])
    with pytest.raises(InvalidRate):
        simulation_service.build_rate_model(space, [('m', identity, float('nan'))])
    with pytest.raises(InvalidRate):
        simulation_service.build_rate_model(space, [('m', identity, 1.0), ('m', identity, 2.0)])
    with pytest.raises(NoDual):
        simulation_service.build_rate_model(space, [('m', SiteMap(space, (((1, 1),),)), 1.0)])
    with pytest.raises(MalformedTable):
        simulation_service.build_rate_model(SiteSpace(monoid('M1'), 2), [('m', identity, 1.0)])


def test_event_stream_is_reproducible(simulation_service, psi1_setup):
    _, model = psi1_setup
    first = simulation_service.sample_event_stream(model, (0.0, 10.0), 5)
    assert first == simulation_service.sample_event_stream(model, (0.0, 10.0), 5)
    assert first != simulation_service.sample_event_stream(model, (0.0, 10.0), 6)
    times = first.times
    assert list(times) == sorted(times)
    assert all(0.0 < t <= 10.0 for t in times)
    assert set(first.map_sequence) <= {'spread', 'shift'}


def test_event_count_is_poisson(simulation_service, monoid):
    space = SiteSpace(monoid('M1'), 1)
    model = simulation_service.build_rate_model(space, [('m', SiteMap(space, (((0, 1),),)), 1.0)])
    counts = [len(simulation_service.sample_event_stream(model, (0.0, 10.0), seed).events) for seed in range(2000)]
    assert abs(np.mean(counts) - 10.0) <= 4 * np.sqrt(10.0 / 2000)


def test_empty_window_and_zero_rate(simulation_service, monoid):
    space = SiteSpace(monoid('M1'), 1)
    model = simulation_service.build_rate_model(space, [('m', SiteMap(space, (((0, 1),),)), 0.0)])
    assert simulation_service.sample_event_stream(model, (0.0, 5.0), 1).events == ()
    with pytest.raises(WindowViolation):
        simulation_service.sample_event_stream(model, (5.0, 0.0), 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.floats(0.5, 7.5), st.lists(st.integers(0, 1), min_size=3, max_size=3))
def test_flow_cocycle_law(seed, middle, x):
    psi = named(SIMULATION, 'psi1')
    model = spread_and_shift(SIMULATION, psi.s, 3)
    stream = SIMULATION.sample_event_stream(model, (0.0, 8.0), seed)
    for convention in ('+', '-'):
        flow = Flow(stream, convention)
        direct = SIMULATION.apply_flow(flow, x, 0.0, 8.0)
        composed = SIMULATION.apply_flow(flow, SIMULATION.apply_flow(flow, x, 0.0, middle), middle, 8.0)
        assert direct == composed
        assert SIMULATION.apply_flow(flow, x, middle, middle) == tuple(x)


def test_flow_window_is_enforced(simulation_service, psi1_setup):
    _, model = psi1_setup
    stream = simulation_service.sample_event_stream(model, (0.0, 2.0), 3)
    with pytest.raises(WindowViolation):
        simulation_service.apply_flow(Flow(stream), (0, 0, 0), 1.0, 3.0)


def test_dual_stream_runs_backwards(simulation_service, psi1_setup):
    lifted, model = psi1_setup
    stream = simulation_service.sample_event_stream(model, (1.0, 6.0), 8)
    dual = simulation_service.dualize_stream(stream, lifted)
    assert dual.window == (-6.0, -1.0)
    assert dual.events == tuple((map_id, -t) for map_id, t in reversed(stream.events))


@pytest.mark.parametrize('seed', range(5))
def test_pathwise_duality_psi1(simulation_service, psi1_setup, seed):
    lifted, model = psi1_setup
    report = simulation_service.check_pathwise_duality(model, lifted, (0.0, 20.0), seed, 'exhaustive')
    assert report.passed
    assert report.pairs_checked == 2 * 64
    assert report.events >= 20


def test_pathwise_duality_psi5(simulation_service):
    psi = named(simulation_service, 'psi5', transpose=True)
    lifted = simulation_service.product_service.lift_duality(psi, 3)
    model = spread_and_shift(simulation_service, psi.s, 3)
    for seed in range(3):
        assert simulation_service.check_pathwise_duality(model, lifted, (0.0, 10.0), seed).violations == 0


def test_sampled_pathwise_check(simulation_service, psi1_setup):
    lifted, model = psi1_setup
    report = simulation_service.check_pathwise_duality(model, lifted, (0.0, 5.0), 2, 'sampled')
    assert report.coverage == 'sampled'
    assert report.pairs_checked == 2 * simulation_service.settings.SAMPLE_PAIRS


def test_wrong_dual_map_is_caught(simulation_service, psi1_setup):
    lifted, model = psi1_setup
    shift = model.maps[1].site_map
    stream = EventStream((0.0, 1.0), (('shift', 0.5),), tuple((m.map_id, m.site_map) for m in model.maps), 0)
    dual_stream = simulation_service.dualize_stream(stream, lifted, dual_maps={'shift': shift})
    with pytest.raises(DualityViolation):
        simulation_service.check_pathwise_duality(model, lifted, (0.0, 1.0), 0, 'exhaustive',
                                                  stream=stream, dual_stream=dual_stream)


def test_expectation_duality_psi5(simulation_service, psi5_setup):
    lifted, model = psi5_setup
    estimate = simulation_service.estimate_expectation_duality(model, lifted, (1, 2), (1, 0), 1.0, 4000, 11)
    assert estimate.agree
    assert estimate.exact is not None
    for value, se in ((estimate.lhs, estimate.lhs_se), (estimate.rhs, estimate.rhs_se)):
        assert abs(value - estimate.exact) <= 1e-9 + 5 * se
    again = simulation_service.estimate_expectation_duality(model, lifted, (1, 2), (1, 0), 1.0, 4000, 11)
    assert again == estimate


@pytest.mark.slow
def test_expectation_duality_psi5_many_replicates(simulation_service, psi5_setup):
    lifted, model = psi5_setup
    estimate = simulation_service.estimate_expectation_duality(model, lifted, (1, 2), (1, 0), 1.0, 10**5, 3)
    assert estimate.agree
    for value, se in ((estimate.lhs, estimate.lhs_se), (estimate.rhs, estimate.rhs_se)):
        assert abs(value - estimate.exact) <= 1e-9 + 4 * se


def test_uniformization_forward_and_dual_agree(simulation_service, psi5_setup):
    lifted, model = psi5_setup
    for x, y in (((1, 2), (1, 0)), ((0, 1), (2, 2)), ((2, 2), (1, 1))):
        forward = simulation_service.exact_semigroup_expectation(model, lifted, x, y, 0.8)
        dual = simulation_service.exact_semigroup_expectation(model, lifted, x, y, 0.8, dual=True)
        assert abs(forward - dual) <= 1e-9


def test_idempotent_map_closed_form(simulation_service, psi5_setup):
    lifted, _ = psi5_setup
    space = lifted.s_space
    identity, zero = local_maps(space.local)
    projection = (0, 2, 2)
    m = SiteMap(space, ((projection, zero), (zero, identity)))
    single = simulation_service.build_rate_model(space, [('m', m, 1.3)])
    closed = simulation_service.idempotent_map_expectation(lifted, m, 1.3, (1, 2), (1, 0), 0.7)
    exact = simulation_service.exact_semigroup_expectation(single, lifted, (1, 2), (1, 0), 0.7)
    assert abs(closed - exact) <= 1e-9


def test_idempotent_closed_form_needs_idempotent(simulation_service, psi5_setup):
    lifted, model = psi5_setup
    shift = model.maps[1].site_map
    with pytest.raises(MalformedTable):
        simulation_service.idempotent_map_expectation(lifted, shift, 1.0, (1, 2), (1, 0), 0.5)


def test_expectation_needs_real_embedding(simulation_service):
    psi = named(simulation_service, 'psi3')
    lifted = simulation_service.product_service.lift_duality(psi, 2)
    model = spread_and_shift(simulation_service, psi.s, 2)
    with pytest.raises(NoRealEmbedding):
        simulation_service.estimate_expectation_duality(model, lifted, (1, 1), (1, 1), 1.0, 10, 0)


def test_uniformization_state_cap(psi5_setup):
    lifted, model = psi5_setup
    settings_ = DevConfig()
    settings_.MAX_UNIFORMIZATION_STATES = 4
    service = SimulationService(SIMULATION.product_service, settings_)
    with pytest.raises(StateSpaceTooLarge):
        service.exact_semigroup_expectation(model, lifted, (1, 2), (1, 0), 1.0)


def test_marks_follow_the_rates(simulation_service, monoid):
    space = SiteSpace(monoid('M1'), 1)
    model = simulation_service.build_rate_model(space, [
        ('keep', SiteMap(space, (((0, 1),),)), 1.0),
        ('reset', SiteMap(space, (((0, 0),),)), 3.0),
    ])
    stream = simulation_service.sample_event_stream(model, (0.0, 2500.0), 4)
    n = len(stream.events)
    assert n > 9000
    share = stream.map_sequence.count('reset') / n
    assert abs(share - 0.75) <= 4 * np.sqrt(0.75 * 0.25 / n)


def test_events_are_ordered_by_time_then_map_position(simulation_service, psi1_setup):
    _, model = psi1_setup
    position = {rated.map_id: i for i, rated in enumerate(model.maps)}
    stream = simulation_service.sample_event_stream(model, (0.0, 50.0), 9)
    keys = [(t, position[map_id]) for map_id, t in stream.events]
    assert all(a < b for a, b in zip(keys, keys[1:]))


def test_boundary_conventions_at_event_times(simulation_service, monoid):
    space = SiteSpace(monoid('M6'), 1)
    maps = (('kill', SiteMap(space, (((0, 0, 0),),))), ('project', SiteMap(space, (((0, 2, 2),),))))
    stream = EventStream((0.0, 3.0), (('kill', 1.0), ('project', 2.0)), maps, 0)
    plus, minus = Flow(stream, '+'), Flow(stream, '-')

    # kill sits on s, project on u
    assert simulation_service.apply_flow(plus, (1,), 1.0, 2.0) == (2,)
    assert simulation_service.apply_flow(minus, (1,), 1.0, 2.0) == (0,)
    for s, u in ((0.5, 2.5), (1.5, 2.5), (0.5, 1.5), (1.2, 1.8)):
        assert simulation_service.apply_flow(plus, (1,), s, u) == simulation_service.apply_flow(minus, (1,), s, u)
    assert simulation_service.apply_flow(plus, (1,), 1.2, 1.8) == (1,)


def test_dualizing_twice_returns_the_stream(simulation_service, psi5_setup):
    lifted, model = psi5_setup
    back_lifted = simulation_service.product_service.lift_duality(
        simulation_service.product_service.homdual_service.transpose(lifted.local_psi), lifted.sites)
    stream = simulation_service.sample_event_stream(model, (0.5, 4.0), 12)
    twice = simulation_service.dualize_stream(simulation_service.dualize_stream(stream, lifted), back_lifted)
    assert twice.window == stream.window
    assert twice.events == stream.events
    assert [(map_id, m.matrix) for map_id, m in twice.maps] == [(map_id, m.matrix) for map_id, m in stream.maps]


def test_pathwise_check_needs_matching_spaces(simulation_service, psi1_setup):
    lifted, _ = psi1_setup
    model = spread_and_shift(simulation_service, lifted.local_psi.s, 2)
    with pytest.raises(MalformedTable):
        simulation_service.check_pathwise_duality(model, lifted, (0.0, 1.0), 0)
    with pytest.raises(MalformedTable):
        simulation_service.estimate_expectation_duality(model, lifted, (0, 0), (0, 0, 0), 1.0, 10, 0)


def test_estimate_does_not_depend_on_batch_size(simulation_service, psi5_setup):
    lifted, model = psi5_setup
    settings_ = DevConfig()
    settings_.REPLICATE_BLOCK = 7
    small_batches = SimulationService(SIMULATION.product_service, settings_)
    estimate = simulation_service.estimate_expectation_duality(model, lifted, (1, 2), (1, 0), 1.0, 50, 21)
    assert small_batches.estimate_expectation_duality(model, lifted, (1, 2), (1, 0), 1.0, 50, 21) == estimate
