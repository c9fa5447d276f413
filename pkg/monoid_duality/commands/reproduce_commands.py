import click

from monoid_duality.schemas import ReproductionManifestSchema
from monoid_duality.services.reproduction_service import ReproductionService
from monoid_duality.utils import EXIT_MISMATCH, emit_json, handle_errors, to_json


@click.command('reproduce')
@click.option('--skip-slow', is_flag=True, help='Skip the order-5 enumeration and the full duality census.')
@click.option('--output', type=click.Path(dir_okay=False, writable=True), default=None,
              help='Write the manifest here instead of stdout.')
@handle_errors
def reproduce(skip_slow, output, reproduction_service: ReproductionService = ReproductionService()):
    """
    Run every acceptance check against the catalog and print the manifest.

    Exits with status 4 when a check fails.
    """
    manifest = reproduction_service.reproduce_all(skip_slow=skip_slow)
    data = ReproductionManifestSchema().dump(manifest)
    if output:
        with open(output, 'w') as handle:
            handle.write(to_json(data) + '\n')
    else:
        emit_json(data)
    for check in manifest.failed:
        click.echo(f'FAILED {check.name}: {check.diff}', err=True)
    if not manifest.passed:
        click.get_current_context().exit(EXIT_MISMATCH)
