import json
import os

import click

from monoid_duality.models.site_space import SiteMap, SiteSpace
from monoid_duality.schemas import (
    AdjointCensusEntrySchema,
    DualityFunctionSchema,
    DualMapSchema,
    QuadrupleSchema,
    ReducedClassSchema,
    SiteMatrixSchema
)
from monoid_duality.services.homdual_service import HomDualService
from monoid_duality.services.product_service import ProductService
from monoid_duality.utils import emit_json, handle_errors, load_json_file

"""
Duality Commands

Commands for the duality census and for dual maps on product spaces.

Commands:
---------
dualities find --max-order N [--reduce] [--format json|table]
    All duality quadruples between catalogued monoids, optionally reduced to classes.

dualities adjoints --max-order N [--format json|table]
    The isomorphism type of H(S, T) for every pair of catalogued monoids.

dual-map --psi NAME|FILE --sites K --map FILE [--transpose] [--budget B]
    The dual of a site map under the lifted duality function.
"""

FORMATS = click.Choice(['json', 'table'])

dualities = click.Group('dualities', help='Search and reduce duality functions.')


def load_psi(value: str, transpose: bool, homdual_service: HomDualService):
    '''A verified duality function from a catalog name or a JSON file.'''
    if os.path.exists(value):
        with open(value) as handle:
            try:
                psi = DualityFunctionSchema().load(json.load(handle))
            except json.JSONDecodeError as err:
                raise click.BadParameter(f'{value} is not valid JSON: {err}') from err
    else:
        psi = homdual_service.duality_from_named(value)
    psi = homdual_service.verify_duality(psi)
    return homdual_service.transpose(psi) if transpose else psi


@dualities.command('find')
@click.option('--max-order', type=int, default=4, show_default=True)
@click.option('--reduce', 'reduce_classes', is_flag=True, help='Reduce to classes and match listed names.')
@click.option('--format', 'fmt', type=FORMATS, default='json', show_default=True)
@handle_errors
def find(max_order, reduce_classes, fmt, homdual_service: HomDualService = HomDualService()):
    """
    Every quadruple (R, S, T, psi) with S T-dual to R among catalogued monoids
    with 2 to MAX_ORDER elements.
    """
    quadruples = homdual_service.find_all_duality_quadruples(max_order)
    if reduce_classes:
        classes = homdual_service.reduce_duality_quadruples(quadruples)
        if fmt == 'json':
            emit_json(ReducedClassSchema(many=True).dump(classes))
            return
        render = homdual_service.algebra_service.render_table
        click.echo('\n\n'.join(
            f'{c.name}: {c.s_label} x {c.r_label} -> {c.t_label}, {c.size} quadruples\n'
            + render(c.name, c.representative.table)
            for c in classes
        ))
        return
    if fmt == 'json':
        emit_json(QuadrupleSchema(many=True).dump(quadruples))
        return
    click.echo('\n'.join(f'{q.s_label} x {q.r_label} -> {q.t_label}: {q.psi.table}' for q in quadruples))
    click.echo(f'{len(quadruples)} quadruples')


@dualities.command('adjoints')
@click.option('--max-order', type=int, default=4, show_default=True)
@click.option('--format', 'fmt', type=FORMATS, default='json', show_default=True)
@handle_errors
def adjoints(max_order, fmt, homdual_service: HomDualService = HomDualService()):
    """
    The catalog label of H(S, T) for all catalogued S and T.
    """
    census = homdual_service.adjoint_census(max_order)
    if fmt == 'json':
        emit_json(AdjointCensusEntrySchema(many=True).dump(census))
        return
    for entry in census:
        click.echo(f'H({entry.s_label}, {entry.t_label}) has {entry.hom_count} elements: {entry.r_label or "-"}')


@click.command('dual-map')
@click.option('--psi', 'psi_name', required=True, help='Listed duality function (psi5) or a JSON file.')
@click.option('--sites', type=click.IntRange(min=1), required=True)
@click.option('--map', 'map_file', required=True, help='JSON file with the K x K matrix of value tables.')
@click.option('--transpose', is_flag=True, help='Use the transposed duality function.')
@click.option('--budget', type=click.IntRange(min=1), default=None, help='Pairs checked exhaustively.')
@handle_errors
def dual_map(psi_name, sites, map_file, transpose, budget, product_service: ProductService = ProductService()):
    """
    The unique map m^ on R^K with Psi(m(x), y) = Psi(x, m^(y)).
    """
    psi = load_psi(psi_name, transpose, product_service.homdual_service)
    matrix = load_json_file(map_file, SiteMatrixSchema(), wrap_key='matrix')
    if len(matrix) != sites:
        raise click.BadParameter(f'the matrix has {len(matrix)} sites, expected {sites}')
    lifted = product_service.lift_duality(psi, sites)
    m = SiteMap(SiteSpace(psi.s, sites), matrix)
    dual = product_service.dual_map(lifted, m, budget)
    emit_json(DualMapSchema().dump({
        'psi': psi.name or psi_name,
        'sites': sites,
        'matrix': m.matrix,
        'dual': dual.matrix,
    }))
