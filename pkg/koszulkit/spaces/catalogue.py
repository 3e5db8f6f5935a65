"""
Cohomology presentations of the catalogued spaces.
"""

import logging
from itertools import combinations, permutations
from math import prod
from typing import Any, Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ

from koszulkit.exactlin import Matrix, rank, rank_and_kernel
from koszulkit.exceptions import DescriptorError, InputError
from koszulkit.graded import Generator, parity_sign
from koszulkit.presentations import QuadraticCommPresentation, QuadraticLiePresentation
from koszulkit.spaces.descriptors import (
    ConfigurationSpace,
    HighlyConnectedManifold,
    LoopSpaceOf,
    Presented,
    Product,
    Sphere,
    Suspension,
    Wedge,
)
from koszulkit.utils.formatting import parse_rational

logger = logging.getLogger(__name__)


def sphere_presentation(n: int) -> QuadraticCommPresentation:
    x = Generator(name="x", degree=n)
    relations = [[(1, ("x", "x"))]] if n % 2 == 0 else []
    return QuadraticCommPresentation.from_named([x], relations)


def trivial_presentation(generators: Sequence[Generator]) -> QuadraticCommPresentation:
    """All products vanish"""
    shell = QuadraticCommPresentation(generators)
    relations = [{slot: QQ.one} for d in shell.weight_two_degrees() for slot in shell.weight_two_basis(d)]
    return QuadraticCommPresentation(generators, relations)


def suspension_presentation(space: Suspension) -> QuadraticCommPresentation:
    generators = []
    for q, dim in sorted(space.reduced_homology.items()):
        if q < 0 or dim < 0:
            raise DescriptorError(
                f"suspension: reduced homology needs degree >= 0 and dimension >= 0, got {q}: {dim}"
            )
        degree = q + space.times
        for i in range(dim):
            name = f"e{degree}" if dim == 1 else f"e{degree}_{i + 1}"
            generators.append(Generator(name=name, degree=degree))
    return trivial_presentation(generators)


def loop_space_presentation(space: LoopSpaceOf) -> QuadraticCommPresentation:
    if any(d < 1 for d in space.degrees):
        raise DescriptorError("loop_space: generator degrees must be >= 1")
    generators = [Generator(name=f"y{i + 1}", degree=d) for i, d in enumerate(space.degrees)]
    return QuadraticCommPresentation(generators)


def _config_name(p: int, q: int, k: int) -> str:
    return f"a{p}{q}" if k < 10 else f"a{p}_{q}"


def _config_pairs(k: int) -> List[Tuple[int, int]]:
    """Pairs p < q grouped by q"""
    return sorted(combinations(range(1, k + 1), 2), key=lambda pair: (pair[1], pair[0]))


def configuration_presentation(n: int, k: int) -> QuadraticCommPresentation:
    """H^*(F(R^n, k)): a_pq of degree n-1 with the Arnold relations"""
    pairs = _config_pairs(k)
    generators = [Generator(name=_config_name(p, q, k), degree=n - 1) for p, q in pairs]
    sign = -1 if n % 2 else 1

    def term(coefficient: int, a: Tuple[int, int], b: Tuple[int, int]):
        # a_qp = (-1)^n a_pq
        c = coefficient
        names = []
        for p, q in (a, b):
            if p > q:
                p, q = q, p
                c *= sign
            names.append(_config_name(p, q, k))
        return (c, (names[0], names[1]))

    relations = []
    for p, q, r in combinations(range(1, k + 1), 3):
        relations.append(
            [term(1, (p, q), (q, r)), term(1, (q, r), (r, p)), term(1, (r, p), (p, q))]
        )
    if n % 2:
        for p, q in pairs:
            name = _config_name(p, q, k)
            relations.append([(1, (name, name))])
    return QuadraticCommPresentation.from_named(generators, relations)


def infinitesimal_braid_presentation(n: int, k: int) -> QuadraticLiePresentation:
    """Lie algebra on t_pq of degree n-2 with the infinitesimal braid relations"""
    if n < 2:
        raise DescriptorError(f"infinitesimal braid relations need n >= 2, got {n}")
    pairs = _config_pairs(k)
    generators = [Generator(name=_config_name(p, q, k), degree=n - 2) for p, q in pairs]
    sign = -1 if n % 2 else 1

    def gen(p: int, q: int) -> Tuple[int, str]:
        if p < q:
            return 1, _config_name(p, q, k)
        return sign, _config_name(q, p, k)

    relations: List[List[Tuple[Any, Tuple[str, str]]]] = []
    for (p, q), (r, s) in combinations(pairs, 2):
        if len({p, q, r, s}) == 4:
            relations.append([(1, (_config_name(p, q, k), _config_name(r, s, k)))])
    for p, q, r in permutations(range(1, k + 1), 3):
        c0, t_pq = gen(p, q)
        c1, t_pr = gen(p, r)
        c2, t_qr = gen(q, r)
        relations.append([(c0 * c1, (t_pq, t_pr)), (c0 * c2, (t_pq, t_qr))])
    return QuadraticLiePresentation.from_named(generators, relations)


def pbw_config_count(n: int, k: int, weight: int) -> int:
    """Number of admissible monomials a_{i1 j1}...a_{ir jr}, i1 < ... < ir, i_p < j_p"""
    if n < 2 or k < 2:
        raise DescriptorError(f"configuration space needs n >= 2 and k >= 2, got n={n}, k={k}")
    return sum(prod(k - i for i in starts) for starts in combinations(range(1, k), weight))


def manifold_presentation(space: HighlyConnectedManifold) -> QuadraticCommPresentation:
    """Cohomology of a highly connected manifold from its structure matrix q"""
    degrees, m = space.degrees, space.m
    r = len(degrees)
    if r < 2:
        raise DescriptorError("manifold: needs at least 2 middle generators (dim H^* >= 4)")
    if len(space.q) != r or any(len(row) != r for row in space.q):
        raise DescriptorError(f"manifold: q must be a {r}x{r} matrix")
    d = min(degrees)
    if d < 2:
        raise DescriptorError(f"manifold: constraint d >= 2 violated (d = {d})")
    if m > 3 * d - 2:
        raise DescriptorError(f"manifold: constraint m <= 3d - 2 violated (m = {m}, d = {d})")
    try:
        q = [[parse_rational(v) for v in row] for row in space.q]
    except InputError as e:
        raise DescriptorError(f"manifold: {e}") from e
    for i in range(r):
        for j in range(r):
            if q[i][j] and degrees[i] + degrees[j] != m:
                raise DescriptorError(
                    f"manifold: q[{i}][{j}] != 0 but degrees {degrees[i]} + {degrees[j]} != m = {m}"
                )
            if q[j][i] != parity_sign(degrees[i], degrees[j]) * q[i][j]:
                raise DescriptorError(f"manifold: q is not graded-symmetric at ({i}, {j})")
    if rank(Matrix.from_rows([dict(enumerate(row)) for row in q], r)) < r:
        raise DescriptorError("manifold: q is degenerate")

    generators = [Generator(name=f"x{i + 1}", degree=deg) for i, deg in enumerate(degrees)]
    shell = QuadraticCommPresentation(generators)
    spaces: Dict[int, List[Dict[int, Any]]] = {}
    for degree in shell.weight_two_degrees():
        slots = shell.weight_two_basis(degree)
        if degree != m:
            spaces[degree] = [{k: QQ.one} for k in range(len(slots))]
            continue
        evaluation = {k: q[i][j] for k, (i, j) in enumerate(slots) if q[i][j]}
        _, kernel = rank_and_kernel(Matrix(1, len(slots), {0: evaluation}))
        spaces[degree] = kernel
    return QuadraticCommPresentation.from_relation_spaces(generators, spaces)


def _combine(factors: Sequence[QuadraticCommPresentation], cross: bool) -> QuadraticCommPresentation:
    generators: List[Generator] = []
    relations = []
    blocks = []
    for number, factor in enumerate(factors, start=1):
        offset = len(generators)
        generators.extend(
            Generator(name=f"{g.name}_{number}", degree=g.degree) for g in factor.generators
        )
        relations.extend(
            {(i + offset, j + offset): c for (i, j), c in rel.items()} for rel in factor.relations
        )
        blocks.append(range(offset, len(generators)))
    if cross:
        for a, b in combinations(blocks, 2):
            relations.extend({(i, j): QQ.one} for i in a for j in b)
    return QuadraticCommPresentation(generators, relations)


def cohomology_presentation(space) -> QuadraticCommPresentation:
    """Catalogued quadratic presentation of H^*(X; Q)"""
    if isinstance(space, Sphere):
        return sphere_presentation(space.n)
    if isinstance(space, Suspension):
        return suspension_presentation(space)
    if isinstance(space, LoopSpaceOf):
        return loop_space_presentation(space)
    if isinstance(space, ConfigurationSpace):
        return configuration_presentation(space.n, space.k)
    if isinstance(space, HighlyConnectedManifold):
        return manifold_presentation(space)
    if isinstance(space, Presented):
        return space.algebra.to_presentation()
    if isinstance(space, Product):
        return _combine([cohomology_presentation(f) for f in space.factors], cross=False)
    if isinstance(space, Wedge):
        return _combine([cohomology_presentation(f) for f in space.factors], cross=True)
    raise DescriptorError(f"unsupported space descriptor: {type(space).__name__}")
