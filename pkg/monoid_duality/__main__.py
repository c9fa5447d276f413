from monoid_duality.cli import cli

cli(prog_name='monoid_duality')
