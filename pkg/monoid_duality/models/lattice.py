from dataclasses import dataclass


@dataclass(frozen=True)
class Lattice:
    '''
    A finite partial order given by its relation matrix, ``leq[x][y]`` is true iff x <= y.

    Lattice axioms are checked by ``AlgebraService.validate_lattice``.
    '''
    leq: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, 'leq', tuple(tuple(bool(v) for v in row) for row in self.leq))

    @classmethod
    def chain(cls, n: int) -> 'Lattice':
        return cls(tuple(tuple(x <= y for y in range(n)) for x in range(n)))

    @classmethod
    def diamond(cls) -> 'Lattice':
        # bottom 0, incomparable 1 and 2, top 3
        below = {(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 3), (2, 2), (2, 3), (3, 3)}
        return cls(tuple(tuple((x, y) in below for y in range(4)) for x in range(4)))

    @property
    def order(self) -> int:
        return len(self.leq)

    def upper_bounds(self, x: int, y: int) -> list:
        return [z for z in range(self.order) if self.leq[x][z] and self.leq[y][z]]

    def lower_bounds(self, x: int, y: int) -> list:
        return [z for z in range(self.order) if self.leq[z][x] and self.leq[z][y]]

    def join(self, x: int, y: int):
        '''Least upper bound of x and y, or None when it does not exist.'''
        bounds = self.upper_bounds(x, y)
        least = [z for z in bounds if all(self.leq[z][w] for w in bounds)]
        return least[0] if least else None

    def meet(self, x: int, y: int):
        bounds = self.lower_bounds(x, y)
        greatest = [z for z in bounds if all(self.leq[w][z] for w in bounds)]
        return greatest[0] if greatest else None

    @property
    def bottom(self):
        minimal = [x for x in range(self.order) if all(self.leq[x][y] for y in range(self.order))]
        return minimal[0] if minimal else None

    @property
    def top(self):
        maximal = [x for x in range(self.order) if all(self.leq[y][x] for y in range(self.order))]
        return maximal[0] if maximal else None

    def reversed(self) -> 'Lattice':
        n = self.order
        return Lattice(tuple(tuple(self.leq[y][x] for y in range(n)) for x in range(n)))
