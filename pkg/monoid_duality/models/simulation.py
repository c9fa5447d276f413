from dataclasses import dataclass
from typing import Optional

from monoid_duality.models.site_space import SiteMap, SiteSpace


@dataclass(frozen=True)
class RatedMap:
    map_id: str
    site_map: SiteMap
    rate: float


@dataclass(frozen=True)
class RateModel:
    '''
    An interacting particle system: each map is applied at the times of its own Poisson clock.
    '''
    space: SiteSpace
    maps: tuple

    @property
    def total_rate(self) -> float:
        return float(sum(rated.rate for rated in self.maps))

    def map_ids(self) -> list:
        return [rated.map_id for rated in self.maps]


@dataclass(frozen=True)
class EventStream:
    '''
    A realisation of the marked Poisson set on a finite window.

    Attributes:
    ----------
    window : tuple[float, float]
        The interval [s, u] the stream was generated on.
    events : tuple[tuple[str, float], ...]
        (map id, time) pairs in increasing time order.
    maps : tuple[tuple[str, SiteMap], ...]
        The map behind each id.
    seed : int, optional
    '''
    window: tuple
    events: tuple
    maps: tuple
    seed: Optional[int] = None

    def site_map(self, map_id: str) -> SiteMap:
        for key, site_map in self.maps:
            if key == map_id:
                return site_map
        raise KeyError(map_id)

    @property
    def times(self) -> tuple:
        return tuple(t for _, t in self.events)

    @property
    def map_sequence(self) -> tuple:
        return tuple(map_id for map_id, _ in self.events)


@dataclass(frozen=True)
class Flow:
    '''
    The stochastic flow of a stream.

    ``convention`` '+' applies events with s < t <= u, '-' those with s <= t < u.
    ``direction`` records whether the stream is a forward stream or a dual one.
    '''
    stream: EventStream
    convention: str = '+'
    direction: str = 'forward'


@dataclass(frozen=True)
class PathwiseReport:
    seed: int
    events: int
    coverage: str
    pairs_checked: int
    violations: int
    window: tuple

    @property
    def passed(self) -> bool:
        return self.violations == 0


@dataclass(frozen=True)
class ExpectationEstimate:
    '''
    Monte-Carlo estimates of E[Psi(X_t^x, y)] (lhs) and E[Psi(x, Y_t^y)] (rhs).
    '''
    t: float
    replicates: int
    seed: int
    lhs: float
    lhs_se: float
    rhs: float
    rhs_se: float
    exact: Optional[float] = None

    @property
    def combined_se(self) -> float:
        return (self.lhs_se ** 2 + self.rhs_se ** 2) ** 0.5

    @property
    def agree(self) -> bool:
        return abs(self.lhs - self.rhs) <= 4 * self.combined_se + 1e-12
