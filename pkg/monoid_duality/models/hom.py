from dataclasses import dataclass

from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.monoid import Monoid

# Values of a finite function S -> T, indexed by the elements of S.
FunctionTable = tuple


@dataclass(frozen=True)
class Hom:
    source: Monoid
    target: Monoid
    values: FunctionTable

    def __call__(self, x: int) -> int:
        return self.values[x]


@dataclass(frozen=True)
class AdjointMonoid:
    '''
    The T-adjoint H(S, T): all homomorphisms S -> T under pointwise addition.

    Attributes:
    ----------
    source : Monoid
    target : Monoid
    base : tuple[FunctionTable, ...]
        The homomorphisms, in lexicographic order of their value tables.
    op : CayleyTable
        Pointwise addition on the indices of ``base``.
    index_of_zero : int
        Position of the constant-neutral homomorphism.
    '''
    source: Monoid
    target: Monoid
    base: tuple
    op: CayleyTable
    index_of_zero: int

    @property
    def order(self) -> int:
        return len(self.base)

    @property
    def monoid(self) -> Monoid:
        return Monoid(self.op, self.index_of_zero)

    def homs(self) -> list:
        return [Hom(self.source, self.target, values) for values in self.base]

    def index(self, values) -> int:
        return self.base.index(tuple(values))
