from dataclasses import dataclass
from typing import Optional

from monoid_duality.models.semiring import Semiring


@dataclass(frozen=True)
class EnumerationReport:
    '''
    Isomorphism classes found by an enumeration.

    Attributes:
    ----------
    order : int
    count : int
    representatives : tuple[CayleyTable, ...]
        Canonical tables, sorted by their flattened form.
    catalog_labels : tuple[str, ...], optional
        Catalog label of each representative, when the order is catalogued.
    '''
    order: int
    count: int
    representatives: tuple
    catalog_labels: Optional[tuple] = None


@dataclass(frozen=True)
class SemiringClass:
    '''A semiring up to isomorphism, with the catalog label of its multiplicative monoid.'''
    semiring: Semiring
    mult_label: Optional[str] = None
    additive_label: Optional[str] = None
