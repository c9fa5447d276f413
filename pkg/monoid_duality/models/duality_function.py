from dataclasses import dataclass, replace
from typing import Optional

from monoid_duality.models.monoid import Monoid


@dataclass(frozen=True)
class VerificationRecord:
    '''Outcome of checking the four duality conditions, with a witness for each failure.'''
    rows_distinct: bool
    columns_cover_homs: bool
    columns_distinct: bool
    rows_cover_homs: bool
    failures: tuple = ()

    @property
    def passed(self) -> bool:
        return self.rows_distinct and self.columns_cover_homs and self.columns_distinct and self.rows_cover_homs


@dataclass(frozen=True)
class DualityFunction:
    '''
    A table psi: S x R -> T, rows indexed by S and columns by R.

    Attributes:
    ----------
    s, r, t : Monoid
        The three carriers.
    table : tuple[tuple[int, ...], ...]
        ``table[x][y]`` is psi(x, y), an element of T.
    verified : VerificationRecord, optional
        Set once the four conditions have been checked.
    name : str, optional
        Listed name (psi1, psi235, ...) when matched against the catalog.
    s_label, r_label, t_label : str, optional
        Catalog labels of the carriers.
    real_embedding : tuple[float, ...], optional
        Monoid homomorphism from T into the reals under multiplication.
    '''
    s: Monoid
    r: Monoid
    t: Monoid
    table: tuple
    verified: Optional[VerificationRecord] = None
    name: Optional[str] = None
    s_label: Optional[str] = None
    r_label: Optional[str] = None
    t_label: Optional[str] = None
    real_embedding: Optional[tuple] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'table', tuple(tuple(int(v) for v in row) for row in self.table))

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    @property
    def flat(self) -> tuple:
        return tuple(v for row in self.table for v in row)

    def row(self, x: int) -> tuple:
        return self.table[x]

    def column(self, y: int) -> tuple:
        return tuple(row[y] for row in self.table)

    def rows(self) -> list:
        return list(self.table)

    def columns(self) -> list:
        return [self.column(y) for y in range(self.r.order)]

    def values(self) -> set:
        return set(self.flat)

    def transpose(self) -> 'DualityFunction':
        '''psi'(y, x) = psi(x, y), a duality from R to S with the same T.'''
        table = tuple(self.column(y) for y in range(self.r.order))
        return replace(
            self, s=self.r, r=self.s, table=table, verified=None,
            s_label=self.r_label, r_label=self.s_label,
            name=f'{self.name}^T' if self.name else None,
        )

    def real_table(self) -> tuple:
        if self.real_embedding is None:
            return None
        return tuple(tuple(self.real_embedding[v] for v in row) for row in self.table)


@dataclass(frozen=True)
class DualityQuadruple:
    '''S is T-dual to R with duality function psi; carriers named by catalog label.'''
    s_label: str
    r_label: str
    t_label: str
    psi: DualityFunction


@dataclass(frozen=True)
class DualityClass:
    '''
    One class of quadruples left after the reduction moves.

    ``size`` counts the quadruples merged into the class, ``name`` is the
    listed table the class was matched to.
    '''
    s_label: str
    r_label: str
    t_label: str
    representative: DualityFunction
    size: int
    name: Optional[str] = None


@dataclass(frozen=True)
class AdjointCensusEntry:
    s_label: str
    t_label: str
    hom_count: int
    r_label: Optional[str] = None
