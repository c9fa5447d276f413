import click

from monoid_duality.commands.duality_commands import load_psi
from monoid_duality.models.site_space import SiteMap
from monoid_duality.schemas import ExpectationEstimateSchema, PathwiseReportSchema, RatesSchema
from monoid_duality.services.simulation_service import SimulationService
from monoid_duality.utils import EXIT_MISMATCH, emit_json, handle_errors, load_json_file, parse_configuration


@click.command('simulate')
@click.option('--psi', 'psi_name', required=True, help='Listed duality function (psi5) or a JSON file.')
@click.option('--sites', type=click.IntRange(min=1), required=True)
@click.option('--rates', 'rates_file', required=True, help='JSON file listing map matrices and their rates.')
@click.option('--t-max', type=click.FloatRange(min=0), required=True, help='Length of the time window.')
@click.option('--seed', type=int, required=True)
@click.option('--check', type=click.Choice(['pathwise', 'expectation']), required=True)
@click.option('--replicates', type=click.IntRange(min=1), default=10000, show_default=True)
@click.option('--coverage', type=click.Choice(['exhaustive', 'sampled']), default=None,
              help='Pairs for the pathwise check; exhaustive when they fit the budget.')
@click.option('--x', 'x_value', default=None, help='Start configuration, e.g. 1,2 (element 1 everywhere by default).')
@click.option('--y', 'y_value', default=None, help='Dual start configuration.')
@click.option('--transpose', is_flag=True, help='Use the transposed duality function.')
@handle_errors
def simulate(psi_name, sites, rates_file, t_max, seed, check, replicates, coverage, x_value, y_value, transpose,
             simulation_service: SimulationService = SimulationService()):
    """
    Simulate the particle system given by RATES on K sites and check the
    pathwise or the expectation form of duality.
    """
    product_service = simulation_service.product_service
    psi = load_psi(psi_name, transpose, product_service.homdual_service)
    lifted = product_service.lift_duality(psi, sites)
    rates = load_json_file(rates_file, RatesSchema(), wrap_key='maps')
    for map_id, matrix, _ in rates:
        if len(matrix) != sites:
            raise click.BadParameter(f'map {map_id} acts on {len(matrix)} sites, expected {sites}')
    model = simulation_service.build_rate_model(
        lifted.s_space, [(map_id, SiteMap(lifted.s_space, matrix), rate) for map_id, matrix, rate in rates],
    )

    if check == 'pathwise':
        report = simulation_service.check_pathwise_duality(model, lifted, (0.0, t_max), seed, coverage)
        emit_json(PathwiseReportSchema().dump(report))
        return

    default = ','.join(['1'] * sites)
    x = parse_configuration(x_value or default, sites, psi.s.order)
    y = parse_configuration(y_value or default, sites, psi.r.order)
    estimate = simulation_service.estimate_expectation_duality(model, lifted, x, y, t_max, replicates, seed)
    emit_json(ExpectationEstimateSchema().dump(estimate))
    if not estimate.agree:
        click.get_current_context().exit(EXIT_MISMATCH)
