from dataclasses import dataclass
from itertools import product
from typing import Optional

from monoid_duality.models.duality_function import DualityFunction
from monoid_duality.models.monoid import Monoid
from monoid_duality.models.semiring import Semiring


@dataclass(frozen=True)
class SiteSpace:
    '''
    The product space S^L for a local monoid S and ``sites`` ordered sites.

    Configurations are tuples of local elements; they are numbered in
    ``itertools.product`` order, so the all-neutral configuration of a
    neutral-0 monoid has index 0.
    '''
    local: Monoid
    sites: int

    @property
    def size(self) -> int:
        return self.local.order ** self.sites

    def configurations(self) -> list:
        return list(product(range(self.local.order), repeat=self.sites))

    def index(self, config) -> int:
        n = self.local.order
        idx = 0
        for v in config:
            idx = idx * n + v
        return idx

    def config(self, index: int) -> tuple:
        n = self.local.order
        values = []
        for _ in range(self.sites):
            index, v = divmod(index, n)
            values.append(v)
        return tuple(reversed(values))

    def zero(self) -> tuple:
        return (self.local.neutral,) * self.sites

    def unit_vector(self, site: int, value: int) -> tuple:
        config = list(self.zero())
        config[site] = value
        return tuple(config)


@dataclass(frozen=True)
class SiteMap:
    '''
    A homomorphism of S^L given by its matrix of local homomorphisms.

    ``matrix[i][j]`` is the value table of M_ij: S -> S, and the image of x
    at site j is the sum over i of M_ij(x_i).
    '''
    space: SiteSpace
    matrix: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, 'matrix', tuple(tuple(tuple(int(v) for v in entry) for entry in row) for row in self.matrix))

    def __call__(self, config) -> tuple:
        local = self.space.local
        k = self.space.sites
        return tuple(local.sum(self.matrix[i][j][config[i]] for i in range(k)) for j in range(k))

    @classmethod
    def identity(cls, space: SiteSpace) -> 'SiteMap':
        n = space.local.order
        ident = tuple(range(n))
        zero = (space.local.neutral,) * n
        return cls(space, tuple(tuple(ident if i == j else zero for j in range(space.sites)) for i in range(space.sites)))


@dataclass(frozen=True)
class LiftedDuality:
    '''
    Psi(x, y) = sum over sites of psi_i(x_i, y_i), summed in T in ascending site order.

    Attributes:
    ----------
    local_psis : tuple[DualityFunction, ...]
        One local duality function per site; all equal in the homogeneous case.
    kind : str
        'monoid' for monoid duality, 'semiring' for the inner product of a semiring.
    semiring : Semiring, optional
        The semiring behind a 'semiring' lift.
    '''
    local_psis: tuple
    kind: str = 'monoid'
    semiring: Optional[Semiring] = None

    @property
    def sites(self) -> int:
        return len(self.local_psis)

    @property
    def local_psi(self) -> DualityFunction:
        return self.local_psis[0]

    @property
    def t(self) -> Monoid:
        return self.local_psis[0].t

    def is_homogeneous(self) -> bool:
        return all(psi == self.local_psis[0] for psi in self.local_psis)

    @property
    def s_space(self) -> SiteSpace:
        return SiteSpace(self.local_psi.s, self.sites)

    @property
    def r_space(self) -> SiteSpace:
        return SiteSpace(self.local_psi.r, self.sites)

    def __call__(self, x, y) -> int:
        return self.t.sum(psi(a, b) for psi, a, b in zip(self.local_psis, x, y))

    def real(self, x, y) -> float:
        embedding = self.local_psi.real_embedding
        if embedding is None:
            return None
        return float(embedding[self(x, y)])

    def transpose(self) -> 'LiftedDuality':
        return LiftedDuality(tuple(psi.transpose() for psi in self.local_psis), self.kind, self.semiring)
