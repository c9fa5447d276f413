from dataclasses import dataclass

from monoid_duality.models.cayley_table import CayleyTable


@dataclass(frozen=True)
class Monoid:
    '''
    A finite monoid: a validated operation table and its neutral element.

    Instances are produced by ``AlgebraService.validate_monoid``; building one
    directly skips the associativity and neutrality checks.
    '''
    op: CayleyTable
    neutral: int = 0

    @property
    def order(self) -> int:
        return self.op.order

    @property
    def elements(self) -> range:
        return range(self.op.order)

    def __call__(self, x: int, y: int) -> int:
        return self.op.table[x][y]

    def is_commutative(self) -> bool:
        return self.op.is_commutative()

    def sum(self, values) -> int:
        '''Folds ``values`` left to right, starting at the neutral element.'''
        acc = self.neutral
        for v in values:
            acc = self.op.table[acc][v]
        return acc

    def relabel(self, perm) -> 'Monoid':
        return Monoid(self.op.relabel(perm), perm[self.neutral])
