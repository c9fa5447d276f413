import functools
import json
import logging
import os
import sys

import click
from marshmallow import ValidationError

from monoid_duality.errors import DualityToolkitError

# Exit statuses of the command line.
EXIT_USAGE = 2
EXIT_COMPUTATION = 3
EXIT_MISMATCH = 4


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        force=True,
    )


def to_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def emit_json(data) -> None:
    click.echo(to_json(data))


def handle_errors(command):
    """
    Turn schema validation errors into usage errors (exit 2) and toolkit
    errors into a JSON report on stderr (exit 3).
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationError as err:
            raise click.UsageError(to_json(err.messages)) from err
        except DualityToolkitError as err:
            click.echo(to_json(err.to_dict()), err=True)
            click.get_current_context().exit(EXIT_COMPUTATION)
    return wrapper


def load_json_file(path: str, schema, wrap_key: str = None):
    """
    Load a JSON file through a marshmallow schema.

    A top-level list is wrapped as ``{wrap_key: list}`` when ``wrap_key`` is given.
    """
    if not os.path.exists(path):
        raise click.BadParameter(f'no such file {path}')
    with open(path) as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as err:
            raise click.BadParameter(f'{path} is not valid JSON: {err}') from err
    if wrap_key is not None and isinstance(data, list):
        data = {wrap_key: data}
    return schema.load(data)


def parse_configuration(value: str, sites: int, order: int) -> tuple:
    '''Parse "1,0,2" into a configuration of ``sites`` elements below ``order``.'''
    try:
        config = tuple(int(v) for v in value.split(','))
    except ValueError:
        raise click.BadParameter(f'{value!r} is not a comma separated list of integers') from None
    if len(config) != sites or any(not 0 <= v < order for v in config):
        raise click.BadParameter(f'{value!r} must list {sites} elements between 0 and {order - 1}')
    return config
