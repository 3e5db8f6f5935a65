"""
Gradings, signs and suspension bookkeeping.

Algebra-side containers carry cohomological degrees and Lie/homology-side
containers carry homological degrees; only parities enter the signs.
"""

import logging
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from koszulkit.exceptions import DimensionMismatchError, InputError, NegativeDegreeError

logger = logging.getLogger(__name__)


class Variance(str, Enum):
    COHOMOLOGICAL = "cohomological"
    HOMOLOGICAL = "homological"


class BiDegree(NamedTuple):
    weight: int
    degree: int


class Generator(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(min_length=1)
    degree: int = Field(ge=0)


class TruncationBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_weight: int = Field(default=8, ge=1)
    max_degree: int = Field(default=40, ge=1)

    @classmethod
    def default(cls) -> "TruncationBounds":
        """Bounds taken from the runtime settings"""
        from koszulkit.config import get_settings

        settings = get_settings()
        return cls(max_weight=settings.max_weight, max_degree=settings.max_degree)

    def contains(self, weight: int, degree: int) -> bool:
        return 0 <= weight <= self.max_weight and 0 <= degree <= self.max_degree

    def tighter(self, other: "TruncationBounds") -> "TruncationBounds":
        return TruncationBounds(
            max_weight=min(self.max_weight, other.max_weight),
            max_degree=min(self.max_degree, other.max_degree),
        )

    def widened(self, extra_degree: int) -> "TruncationBounds":
        return TruncationBounds(
            max_weight=self.max_weight, max_degree=self.max_degree + max(extra_degree, 0)
        )


class BigradedDims:
    """Finitely supported map (weight, degree) -> dimension"""

    def __init__(
        self,
        entries: Mapping[Tuple[int, int], int],
        bounds: TruncationBounds,
        variance: Variance = Variance.COHOMOLOGICAL,
    ):
        self.bounds = bounds
        self.variance = variance
        self._entries: Dict[BiDegree, int] = {}
        for (w, d), dim in entries.items():
            if dim < 0:
                raise ValueError(f"negative dimension {dim} at ({w}, {d})")
            if dim and bounds.contains(w, d):
                self._entries[BiDegree(w, d)] = dim

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self._entries.get(BiDegree(*key), 0)

    def get(self, weight: int, degree: int) -> int:
        return self._entries.get(BiDegree(weight, degree), 0)

    def __iter__(self) -> Iterator[BiDegree]:
        return iter(sorted(self._entries))

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedDims):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"BigradedDims({self.as_dict()})"

    def items(self) -> List[Tuple[BiDegree, int]]:
        return sorted(self._entries.items())

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {tuple(k): v for k, v in sorted(self._entries.items())}

    def by_weight(self) -> Dict[int, int]:
        totals: Dict[int, int] = {}
        for (w, _), dim in self._entries.items():
            totals[w] = totals.get(w, 0) + dim
        return dict(sorted(totals.items()))

    def by_degree(self) -> Dict[int, int]:
        totals: Dict[int, int] = {}
        for (_, d), dim in self._entries.items():
            totals[d] = totals.get(d, 0) + dim
        return dict(sorted(totals.items()))

    def total(self) -> int:
        return sum(self._entries.values())

    def restrict(self, bounds: TruncationBounds) -> "BigradedDims":
        return BigradedDims(self._entries, self.bounds.tighter(bounds), self.variance)


def parity_sign(a: int, b: int) -> int:
    """(-1)^(a*b)"""
    return -1 if (a % 2 and b % 2) else 1


def koszul_sign(permutation: Sequence[int], degrees: Sequence[int]) -> int:
    """Sign of moving element i to position permutation[i] (0-based targets)"""
    if len(permutation) != len(degrees):
        raise DimensionMismatchError(
            f"permutation of length {len(permutation)} with {len(degrees)} degrees"
        )
    if sorted(permutation) != list(range(len(permutation))):
        raise InputError(f"not a permutation: {list(permutation)}")
    odd = [i for i, d in enumerate(degrees) if d % 2]
    inversions = 0
    for a, i in enumerate(odd):
        for j in odd[a + 1 :]:
            if permutation[i] > permutation[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def sort_with_sign(letters: Sequence[int], degrees: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort letters into ascending order, returning the Koszul sign of the reordering"""
    order = sorted(range(len(letters)), key=lambda i: (letters[i], i))
    permutation = [0] * len(letters)
    for target, source in enumerate(order):
        permutation[source] = target
    sign = koszul_sign(permutation, [degrees[x] for x in letters])
    return sign, tuple(letters[i] for i in order)


def shift_dims(dims: BigradedDims, k: int) -> BigradedDims:
    """Move every entry from (w, d) to (w, d + k)"""
    if k == 0:
        return dims
    shifted = {}
    for (w, d), dim in dims.items():
        if d + k < 0:
            raise NegativeDegreeError(
                f"shifting degree {d} by {k} gives a negative degree"
            )
        shifted[(w, d + k)] = dim
    bounds = dims.bounds.widened(k)
    return BigradedDims(shifted, bounds, dims.variance)


def suspend_generators(generators: Iterable[Generator], k: int) -> List[Generator]:
    """Shift every generator degree by k"""
    out = []
    for g in generators:
        if g.degree + k < 0:
            raise NegativeDegreeError(
                f"generator {g.name} of degree {g.degree} cannot be shifted by {k}"
            )
        out.append(Generator(name=g.name, degree=g.degree + k))
    return out


def generators_from_dims(dims: BigradedDims, prefix: str = "v") -> List[Generator]:
    """One generator per dimension of each degree of a weight-1 table"""
    gens = []
    for (_, d), dim in dims.items():
        for i in range(dim):
            gens.append(Generator(name=f"{prefix}{d}_{i + 1}", degree=d))
    return gens
