from monoid_duality.commands.duality_commands import dual_map, dualities
from monoid_duality.commands.monoid_commands import monoids
from monoid_duality.commands.reproduce_commands import reproduce
from monoid_duality.commands.semiring_commands import semirings
from monoid_duality.commands.simulation_commands import simulate


# Register every command group with the root group
def register_commands(cli):
    cli.add_command(monoids)
    cli.add_command(semirings)
    cli.add_command(dualities)
    cli.add_command(dual_map)
    cli.add_command(simulate)
    cli.add_command(reproduce)
