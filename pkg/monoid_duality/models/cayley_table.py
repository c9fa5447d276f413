from dataclasses import dataclass
from typing import Optional, Sequence

from monoid_duality.errors import MalformedTable


@dataclass(frozen=True)
class CayleyTable:
    '''
    Operation table of a binary operation on the elements 0..n-1.

    Attributes:
    ----------
    table : tuple[tuple[int, ...], ...]
        The n x n table, ``table[x][y]`` is the product of x and y.
    '''
    table: tuple

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n == 0:
            raise MalformedTable('a table needs at least one element')
        for x, row in enumerate(rows):
            if len(row) != n:
                raise MalformedTable(f'row {x} has {len(row)} entries, expected {n}', row=x)
            for y, value in enumerate(row):
                if not 0 <= value < n:
                    raise MalformedTable(f'entry ({x}, {y}) = {value} is out of range', x=x, y=y, value=value)
        object.__setattr__(self, 'table', rows)

    @classmethod
    def from_rows(cls, rows) -> 'CayleyTable':
        '''
        Builds a table from nested sequences or from digit strings such as "012 121 212".
        '''
        if isinstance(rows, str):
            rows = rows.split()
        return cls(tuple(tuple(int(c) for c in row) if isinstance(row, str) else tuple(row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def flat(self) -> tuple:
        return tuple(v for row in self.table for v in row)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def is_commutative(self) -> bool:
        n = self.order
        return all(self.table[x][y] == self.table[y][x] for x in range(n) for y in range(x + 1, n))

    def neutral_element(self) -> Optional[int]:
        n = self.order
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        return None

    def absorbing_element(self) -> Optional[int]:
        n = self.order
        for a in range(n):
            if all(self.table[a][x] == a and self.table[x][a] == a for x in range(n)):
                return a
        return None

    def almost_absorbing_element(self) -> Optional[int]:
        n = self.order
        for a in range(n):
            if self.table[a][a] == a:
                continue
            if all(self.table[a][x] == a and self.table[x][a] == a for x in range(n) if x != a):
                return a
        return None

    def relabel(self, perm: Sequence[int]) -> 'CayleyTable':
        '''
        Transports the operation along the bijection ``perm`` (old element -> new element).
        '''
        n = self.order
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                new[perm[x]][perm[y]] = perm[self.table[x][y]]
        return CayleyTable(tuple(tuple(row) for row in new))

    def rows(self) -> str:
        return ' '.join(''.join(str(v) for v in row) for row in self.table)
