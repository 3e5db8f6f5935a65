"""
Truncated bivariate Poincare series in t (weight) and z (degree).
"""

import logging
from math import comb
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from koszulkit.exceptions import NegativeDegreeError, SeriesError
from koszulkit.graded import BigradedDims, TruncationBounds, Variance
from koszulkit.utils.formatting import format_polynomial

logger = logging.getLogger(__name__)


class PoincareSeries:
    """Truncated polynomial {(w, d): integer coefficient}"""

    def __init__(self, coefficients: Mapping[Tuple[int, int], int], bounds: TruncationBounds):
        self.bounds = bounds
        self.coefficients: Dict[Tuple[int, int], int] = {}
        for (w, d), c in coefficients.items():
            if w < 0 or d < 0:
                raise NegativeDegreeError(f"negative exponent t^{w} z^{d}")
            if c and bounds.contains(w, d):
                self.coefficients[(w, d)] = int(c)

    @classmethod
    def one(cls, bounds: TruncationBounds) -> "PoincareSeries":
        return cls({(0, 0): 1}, bounds)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.coefficients.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PoincareSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"PoincareSeries({dict(sorted(self.coefficients.items()))})"

    def __mul__(self, other: "PoincareSeries") -> "PoincareSeries":
        return series_mul(self, other)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self.coefficients.items())

    def constant_term(self) -> int:
        return self.coefficients.get((0, 0), 0)

    def restrict(self, bounds: TruncationBounds) -> "PoincareSeries":
        return PoincareSeries(self.coefficients, self.bounds.tighter(bounds))


def dims_to_series(dims: BigradedDims, with_unit: bool = True) -> PoincareSeries:
    """Series with coefficient dims(w, d), plus the unit when requested"""
    coefficients = {tuple(k): v for k, v in dims.items()}
    if with_unit:
        coefficients[(0, 0)] = coefficients.get((0, 0), 0) or 1
    return PoincareSeries(coefficients, dims.bounds)


def series_to_dims(series: PoincareSeries, variance: Variance = Variance.HOMOLOGICAL) -> BigradedDims:
    negative = [k for k, c in series.coefficients.items() if c < 0]
    if negative:
        raise SeriesError(f"series has negative coefficient at {min(negative)}")
    return BigradedDims(series.coefficients, series.bounds, variance)


def series_mul(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    """Truncated product; the tighter bounds win"""
    bounds = a.bounds.tighter(b.bounds)
    out: Dict[Tuple[int, int], int] = {}
    for (w1, d1), c1 in a.coefficients.items():
        for (w2, d2), c2 in b.coefficients.items():
            w, d = w1 + w2, d1 + d2
            if bounds.contains(w, d):
                out[(w, d)] = out.get((w, d), 0) + c1 * c2
    return PoincareSeries(out, bounds)


def series_inverse(a: PoincareSeries, bounds: Optional[TruncationBounds] = None) -> PoincareSeries:
    """Multiplicative inverse of a series with constant term 1"""
    bounds = a.bounds if bounds is None else a.bounds.tighter(bounds)
    if a.constant_term() != 1:
        raise SeriesError(f"constant term is {a.constant_term()}, expected 1")
    tail = [(k, c) for k, c in a.coefficients.items() if k != (0, 0)]
    if any(w == 0 for (w, _), _ in tail):
        raise SeriesError("series has non-constant terms of weight 0")
    inverse: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for w in range(1, bounds.max_weight + 1):
        for d in range(bounds.max_degree + 1):
            acc = 0
            for (tw, td), c in tail:
                if tw <= w and td <= d:
                    acc -= c * inverse.get((w - tw, d - td), 0)
            if acc:
                inverse[(w, d)] = acc
    return PoincareSeries(inverse, bounds)


def substitute_koszul_sign(a: PoincareSeries) -> PoincareSeries:
    """A(t, z) -> A(-t, z)"""
    return PoincareSeries(
        {(w, d): (-c if w % 2 else c) for (w, d), c in a.coefficients.items()}, a.bounds
    )


def _substitute_desuspension(a: PoincareSeries) -> PoincareSeries:
    # t -> -t z^-1
    out = {}
    for (w, d), c in a.coefficients.items():
        if d < w:
            raise NegativeDegreeError(
                f"term t^{w} z^{d} has degree below weight; substitution would leave z^{d - w}"
            )
        out[(w, d - w)] = -c if w % 2 else c
    return PoincareSeries(out, a.bounds)


def koszul_inversion(a: PoincareSeries, bounds: Optional[TruncationBounds] = None) -> PoincareSeries:
    """Series of the Koszul dual: A(-t z^-1, z)^-1"""
    if a.constant_term() != 1:
        raise SeriesError(f"constant term is {a.constant_term()}, expected 1")
    result = series_inverse(_substitute_desuspension(a), bounds)
    logger.debug(f"koszul_inversion: {len(a.coefficients)} terms -> {len(result.coefficients)} terms")
    return result


def evaluate_at_t1(a: PoincareSeries) -> Dict[int, int]:
    """Collapse the weight grading: coefficients of z"""
    out: Dict[int, int] = {}
    for (_, d), c in a.coefficients.items():
        out[d] = out.get(d, 0) + c
    return {d: c for d, c in sorted(out.items()) if c}


class RationalForm(NamedTuple):
    numerator: Dict[int, int]
    denominator: Dict[int, int]

    def expand(self, max_degree: int) -> Dict[int, int]:
        """Power series expansion of numerator/denominator in z"""
        d0 = self.denominator.get(0, 0)
        if d0 not in (1, -1):
            raise SeriesError(f"denominator constant term {d0} is not a unit")
        coefficients: Dict[int, int] = {}
        for n in range(max_degree + 1):
            acc = self.numerator.get(n, 0)
            for e, c in self.denominator.items():
                if 0 < e <= n:
                    acc -= c * coefficients.get(n - e, 0)
            coefficients[n] = acc * d0
        return {d: c for d, c in coefficients.items() if c}

    def render(self, factored: bool = True) -> str:
        return (
            f"({format_polynomial(self.numerator)})/"
            f"({format_polynomial(self.denominator, factored=factored)})"
        )


def rational_closed_form(a: PoincareSeries) -> RationalForm:
    """Closed form 1/A(-z^-1, z) of the dual series at t = 1 for the full series of a finite algebra"""
    if a.constant_term() != 1:
        raise SeriesError(f"constant term is {a.constant_term()}, expected 1")
    denominator = evaluate_at_t1(_substitute_desuspension(a))
    constant = denominator.get(0, 0)
    if constant not in (1, -1):
        raise SeriesError(
            f"dual series diverges at t = 1 (denominator constant term {constant})"
        )
    if constant == -1:
        denominator = {e: -c for e, c in denominator.items()}
        numerator = {0: -1}
    else:
        numerator = {0: 1}
    return RationalForm(numerator=numerator, denominator=denominator)


def free_graded_commutative_series(
    slots: Iterable[Tuple[Tuple[int, int], int]], bounds: TruncationBounds
) -> PoincareSeries:
    """
    Series of the free graded-commutative algebra on slots {(w, d): multiplicity}:
    (1 + t^w z^d)^m for odd d and (1 - t^w z^d)^-m for even d.
    """
    result = PoincareSeries.one(bounds)
    for (w, d), m in slots:
        if w < 1:
            raise SeriesError(f"generator slot of weight {w} in a free algebra")
        factor_terms: Dict[Tuple[int, int], int] = {}
        k = 0
        while bounds.contains(k * w, k * d):
            c = comb(m, k) if d % 2 else comb(m + k - 1, k)
            if c:
                factor_terms[(k * w, k * d)] = c
            elif d % 2:
                break
            k += 1
        result = series_mul(result, PoincareSeries(factor_terms, bounds))
    return result
