from dataclasses import dataclass
from typing import Optional

from monoid_duality.models.cayley_table import CayleyTable
from monoid_duality.models.monoid import Monoid


@dataclass(frozen=True)
class CatalogEntry:
    '''
    A named monoid of the embedded catalog (M0..M26, N1, N2, F4-mult).

    Attributes:
    ----------
    label : str
        Catalog name.
    table : CayleyTable
        The operation table, verbatim.
    neutral : int
        Index of the neutral element.
    commutative : bool
    absorbing : int, optional
        Index of the absorbing element, if there is one.
    almost_absorbing : int, optional
        Index of the almost absorbing element, if there is one.
    '''
    label: str
    table: CayleyTable
    neutral: int = 0
    commutative: bool = True
    absorbing: Optional[int] = None
    almost_absorbing: Optional[int] = None

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def monoid(self) -> Monoid:
        return Monoid(self.table, self.neutral)


@dataclass(frozen=True)
class SemiringCatalogEntry:
    '''A multiplication listed for an additive catalog monoid, with the label of its multiplicative monoid.'''
    additive: str
    mul: CayleyTable
    mult_label: str


@dataclass(frozen=True)
class NamedDuality:
    '''
    A listed duality function. Rows are indexed by ``s_label``, columns by ``r_label``.

    ``real_embedding`` maps the elements of T to reals as a monoid
    homomorphism into (R, *), when one is declared.
    '''
    name: str
    s_label: str
    r_label: str
    t_label: str
    table: tuple
    real_embedding: Optional[tuple] = None


@dataclass(frozen=True)
class CatalogMatch:
    '''
    Result of a catalog lookup.

    ``bijection[x]`` is the catalog element that element x of the looked-up
    monoid corresponds to.
    '''
    entry: CatalogEntry
    bijection: tuple

    @property
    def label(self) -> str:
        return self.entry.label
