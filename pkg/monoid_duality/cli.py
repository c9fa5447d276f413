import click

from monoid_duality import config
from monoid_duality.commands import register_commands
from monoid_duality.utils import configure_logging


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--verbose', '-v', is_flag=True, help='Log search details to stderr.')
def cli(verbose):
    """
    Finite commutative monoid and semiring duality toolkit.
    """
    configure_logging('DEBUG' if verbose else config.LOG_LEVEL)


register_commands(cli)
