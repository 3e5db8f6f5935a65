"""
Rational homotopy and iterated loop-space homology of Koszul spaces.
"""

import logging
from typing import Dict, Mapping, Optional, Tuple

from koszulkit.config import get_settings
from koszulkit.exceptions import ConnectivityError
from koszulkit.graded import (
    BigradedDims,
    TruncationBounds,
    Variance,
    generators_from_dims,
    shift_dims,
)
from koszulkit.koszul import NotKoszul, dual_lie, gerstenhaber_dual_dims, koszul_check
from koszulkit.presentations import (
    QuadraticCommPresentation,
    QuadraticLiePresentation,
    free_comm_dims_of,
    free_lie_dims,
    lie_algebra_dims,
)
from koszulkit.spaces.catalogue import cohomology_presentation

logger = logging.getLogger(__name__)


def _warn_unless_koszul(
    presentation: QuadraticCommPresentation, bounds: TruncationBounds, verify_weight: Optional[int], jobs: int
) -> None:
    if verify_weight is None:
        verify_weight = get_settings().verify_weight
    if not verify_weight:
        return
    check_bounds = bounds.tighter(TruncationBounds(max_weight=verify_weight, max_degree=bounds.max_degree))
    verdict = koszul_check(presentation, check_bounds, jobs=jobs)
    if isinstance(verdict, NotKoszul):
        logger.warning(
            f"Cohomology presentation is not Koszul (witness {tuple(verdict.witness)}); "
            "dual dims need not be homotopy dims"
        )


def homotopy_lie(
    space,
    bounds: TruncationBounds,
    verify_weight: Optional[int] = None,
    jobs: int = 1,
) -> Tuple[QuadraticLiePresentation, BigradedDims]:
    """Homotopy Lie algebra pi_*(Omega X) (x) Q as the Koszul dual of the cohomology"""
    presentation = cohomology_presentation(space)
    _warn_unless_koszul(presentation, bounds, verify_weight, jobs)
    lie = dual_lie(presentation)
    return lie, lie_algebra_dims(lie, bounds)


def homotopy_groups(space, bounds: TruncationBounds) -> Dict[int, int]:
    """dim pi_k(X) (x) Q by k, summed over weights"""
    _, dims = homotopy_lie(space, bounds)
    return {d + 1: dim for d, dim in dims.by_degree().items()}


def _check_connectivity(presentation: QuadraticCommPresentation, n: int) -> None:
    required = n + 1 if n >= 2 else 2
    for g in presentation.generators:
        if g.degree < required:
            raise ConnectivityError(
                f"loop space of order {n} needs cohomology generators in degree >= {required}; "
                f"{g.name} has degree {g.degree}"
            )


def loop_homology(
    space,
    n: int,
    bounds: TruncationBounds,
    verify_weight: Optional[int] = None,
    jobs: int = 1,
) -> BigradedDims:
    """Dims of H_*(Omega^n X; Q): free graded-commutative on pi_*(Omega X) shifted by 1 - n"""
    if n < 1:
        raise ConnectivityError(f"loop order must be positive, got {n}")
    presentation = cohomology_presentation(space)
    _check_connectivity(presentation, n)
    _warn_unless_koszul(presentation, bounds, verify_weight, jobs)
    logger.info(f"Computing loop space homology of order {n}")
    return gerstenhaber_dual_dims(presentation, n, bounds)


def free_gerstenhaber_dims(
    reduced_homology: Mapping[int, int], n: int, bounds: TruncationBounds
) -> BigradedDims:
    """Dims of the free G_n-algebra on a graded space: Lambda(s^{1-n} FreeLie(s^{n-1} V))"""
    if n < 1:
        raise ConnectivityError(f"G_n needs n >= 1, got {n}")
    widened = bounds.widened(n - 1)
    suspended = BigradedDims(
        {(1, q + n - 1): dim for q, dim in reduced_homology.items()}, widened, Variance.HOMOLOGICAL
    )
    generators = generators_from_dims(suspended)
    lie = free_lie_dims(generators, widened)
    shifted = shift_dims(lie, 1 - n).restrict(bounds)
    return free_comm_dims_of(shifted, bounds)


def is_rational_kpi1(
    presentation: QuadraticCommPresentation, bounds: TruncationBounds, jobs: int = 1
) -> bool:
    """Koszul and generated in cohomological degree 1"""
    if not presentation.generators or any(g.degree != 1 for g in presentation.generators):
        return False
    if isinstance(koszul_check(presentation, bounds, jobs=jobs), NotKoszul):
        return False
    dims = lie_algebra_dims(dual_lie(presentation), bounds)
    stray = [d for (_, d) in dims if d != 0]
    if stray:
        raise AssertionError(f"dual Lie algebra has classes in degree {stray[0]}")
    return True
