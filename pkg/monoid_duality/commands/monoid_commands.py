import click

from monoid_duality.repositories.catalog_repository import CatalogRepository
from monoid_duality.schemas import CatalogEntrySchema, EnumerationReportSchema
from monoid_duality.services.algebra_service import AlgebraService
from monoid_duality.services.enumeration_service import EnumerationService
from monoid_duality.utils import emit_json, handle_errors

"""
Monoid Commands

Commands for the commutative monoid enumeration and the embedded catalog.

Commands:
---------
monoids enumerate --order N [--format json|table] [--workers W]
    All commutative monoids with N elements up to isomorphism.

monoids absorbing --order N [--commutative/--noncommutative] [--format json|table]
    Monoids with N elements that have an absorbing element.

monoids catalog [--label L] [--format table|json]
    Catalog tables, all of them or the one named L.
"""

FORMATS = click.Choice(['json', 'table'])

monoids = click.Group('monoids', help='Enumerate monoids and print the catalog.')


def render_report(report, algebra_service: AlgebraService) -> str:
    labels = report.catalog_labels or [None] * report.count
    blocks = [
        algebra_service.render_table(label or f'#{position}', table)
        for position, (label, table) in enumerate(zip(labels, report.representatives))
    ]
    return '\n\n'.join(blocks)


@monoids.command('enumerate')
@click.option('--order', type=int, required=True, help='Number of elements, 1 to 5.')
@click.option('--format', 'fmt', type=FORMATS, default='json', show_default=True)
@click.option('--workers', type=int, default=None, help='Processes to split the search over.')
@handle_errors
def enumerate_monoids(order, fmt, workers, enumeration_service: EnumerationService = EnumerationService()):
    """
    All commutative monoids with ORDER elements, one canonical table per class.
    """
    report = enumeration_service.enumerate_commutative_monoids(order, workers)
    if fmt == 'json':
        emit_json(EnumerationReportSchema().dump(report))
    else:
        click.echo(render_report(report, enumeration_service.algebra_service))


@monoids.command('absorbing')
@click.option('--order', type=int, required=True, help='Number of elements, 1 to 4.')
@click.option('--commutative/--noncommutative', default=None, help='Keep only one kind; both by default.')
@click.option('--format', 'fmt', type=FORMATS, default='json', show_default=True)
@handle_errors
def enumerate_absorbing(order, commutative, fmt, enumeration_service: EnumerationService = EnumerationService()):
    """
    Monoids, not necessarily commutative, with an absorbing element.
    """
    report = enumeration_service.enumerate_monoids_with_absorbing(order, commutative)
    if fmt == 'json':
        emit_json(EnumerationReportSchema().dump(report))
    else:
        click.echo(render_report(report, enumeration_service.algebra_service))


@monoids.command('catalog')
@click.option('--label', default=None, help='Catalog label such as M6; every entry when omitted.')
@click.option('--format', 'fmt', type=FORMATS, default='table', show_default=True)
@handle_errors
def catalog(label, fmt, catalog_repository: CatalogRepository = CatalogRepository(),
            algebra_service: AlgebraService = AlgebraService()):
    """
    Print catalog tables verbatim.
    """
    entries = [catalog_repository.get(label)] if label else catalog_repository.get_all()
    if fmt == 'json':
        emit_json(CatalogEntrySchema(many=True).dump(entries))
    else:
        click.echo('\n\n'.join(algebra_service.render_table(entry.label, entry.table) for entry in entries))
