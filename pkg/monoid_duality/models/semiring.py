from dataclasses import dataclass

from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.monoid import Monoid


@dataclass(frozen=True)
class Semiring:
    '''
    A finite semiring (S, +, .) with commutative addition.

    Attributes:
    ----------
    add : Monoid
        The additive monoid, its neutral element is the zero.
    mul : CayleyTable
        The multiplication table.
    unit : int
        The neutral element of the multiplication.
    '''
    add: Monoid
    mul: CayleyTable
    unit: int

    @property
    def order(self) -> int:
        return self.add.order

    @property
    def zero(self) -> int:
        return self.add.neutral

    @property
    def mul_monoid(self) -> Monoid:
        return Monoid(self.mul, self.unit)

    def is_commutative(self) -> bool:
        return self.mul.is_commutative()
