import click

from monoid_duality.repositories.catalog_repository import CatalogRepository
from monoid_duality.schemas import SemiringClassSchema
from monoid_duality.services.enumeration_service import EnumerationService
from monoid_duality.utils import emit_json, handle_errors

semirings = click.Group('semirings', help='Enumerate semiring multiplications.')


@semirings.command('enumerate')
@click.option('--additive', required=True, help='Catalog label of the additive monoid, e.g. M4.')
@click.option('--format', 'fmt', type=click.Choice(['json', 'table']), default='json', show_default=True)
@handle_errors
def enumerate_semirings(additive, fmt, catalog_repository: CatalogRepository = CatalogRepository(),
                        enumeration_service: EnumerationService = EnumerationService()):
    """
    Every multiplication making the catalog monoid ADDITIVE a semiring, one per
    isomorphism class, with the label of its multiplicative monoid.
    """
    found = enumeration_service.enumerate_semiring_multiplications(catalog_repository.get(additive).monoid)
    if fmt == 'json':
        emit_json(SemiringClassSchema(many=True).dump(found))
        return
    blocks = [
        f'mult. = {c.mult_label}, unit {c.semiring.unit}\n'
        + enumeration_service.algebra_service.render_table('*', c.semiring.mul)
        for c in found
    ]
    click.echo('\n\n'.join(blocks) if blocks else f'{additive} carries no semiring structure')
