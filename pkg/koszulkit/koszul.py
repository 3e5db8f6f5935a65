"""
Koszul duality engine: orthogonal duals, bar-complex Tor, Koszulness verdicts
and the Koszul complex cross-check.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ

from koszulkit.exactlin import Matrix, Vector, intersect_subspaces, rank, rank_and_kernel
from koszulkit.exceptions import DifferentialError
from koszulkit.graded import (
    BigradedDims,
    TruncationBounds,
    Variance,
    parity_sign,
    shift_dims,
    suspend_generators,
)
from koszulkit.presentations import (
    Monomial,
    QuadraticCommPresentation,
    QuadraticLiePresentation,
    QuotientAlgebra,
    Slot,
    TensorElement,
    Word,
    WordIndex,
    free_comm_dims_of,
    lie_algebra_dims,
)
from koszulkit.series import PoincareSeries
from koszulkit.worker import parallel_map

logger = logging.getLogger(__name__)


# Orthogonal duals


class PairingMatrix(NamedTuple):
    """Signed pairing between weight-2 brackets and monomials of one cohomological degree"""

    degree: int
    lie_slots: List[Slot]
    comm_slots: List[Slot]
    signs: List[int]

    def entry(self, row: int, col: int) -> int:
        return self.signs[row] if row == col else 0


def _slot_sign(cohomological_degrees: Sequence[int], slot: Slot) -> int:
    i, j = slot
    if i == j:
        return 1
    # (-1)^{|x_i||a_j|} with |a_j| = |x_j| - 1
    return parity_sign(cohomological_degrees[i], cohomological_degrees[j] - 1)


def pairing_matrix(presentation: QuadraticCommPresentation) -> Dict[int, PairingMatrix]:
    """Pairing matrices per cohomological degree of the weight-2 space"""
    degrees = presentation.degrees
    lie = QuadraticLiePresentation(suspend_generators(presentation.generators, -1))
    out = {}
    for d in presentation.weight_two_degrees():
        comm_slots = presentation.weight_two_basis(d)
        lie_slots = lie.weight_two_basis(d - 2)
        out[d] = PairingMatrix(
            degree=d,
            lie_slots=lie_slots,
            comm_slots=comm_slots,
            signs=[_slot_sign(degrees, s) for s in comm_slots],
        )
    return out


def _annihilator(relations: List[Vector], signs: List[int]) -> List[Vector]:
    if not relations:
        return [{k: QQ.one} for k in range(len(signs))]
    rows = [{k: c * signs[k] for k, c in r.items()} for r in relations]
    _, kernel = rank_and_kernel(Matrix.from_rows(rows, len(signs)))
    return kernel


def dual_lie(presentation: QuadraticCommPresentation) -> QuadraticLiePresentation:
    """Koszul dual Lie presentation: desuspended generators modulo R-perp"""
    generators = suspend_generators(presentation.generators, -1)
    spaces = {}
    for d, pairing in pairing_matrix(presentation).items():
        spaces[d - 2] = _annihilator(presentation.relation_space(d), pairing.signs)
    dual = QuadraticLiePresentation.from_relation_spaces(generators, spaces)
    logger.info(
        f"dual_lie: {len(presentation.relations)} relations -> {len(dual.relations)} orthogonal relations"
    )
    return dual


def dual_comm(presentation: QuadraticLiePresentation) -> QuadraticCommPresentation:
    """Koszul dual commutative presentation of a quadratic Lie presentation"""
    generators = suspend_generators(presentation.generators, 1)
    shell = QuadraticCommPresentation(generators)
    cohomological = shell.degrees
    spaces = {}
    for e in presentation.weight_two_degrees():
        slots = shell.weight_two_basis(e + 2)
        signs = [_slot_sign(cohomological, s) for s in slots]
        spaces[e + 2] = _annihilator(presentation.relation_space(e), signs)
    return QuadraticCommPresentation.from_relation_spaces(generators, spaces)


# Bar complex


class TorWitness(NamedTuple):
    s: int
    weight: int
    degree: int
    dimension: int


class TorTable:
    """dim Tor_{s, w, d}"""

    def __init__(self, entries: Dict[Tuple[int, int, int], int], bounds: TruncationBounds):
        self.bounds = bounds
        self.entries = {k: v for k, v in sorted(entries.items()) if v}

    def dim(self, s: int, weight: int, degree: int) -> int:
        return self.entries.get((s, weight, degree), 0)

    def rows(self) -> List[Tuple[int, int, int, int]]:
        ordered = sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][2], kv[0][0]))
        return [(s, w, d, dim) for (s, w, d), dim in ordered]

    def off_diagonal(self) -> List[TorWitness]:
        return sorted(
            (TorWitness(s, w, d, dim) for (s, w, d), dim in self.entries.items() if s != w),
            key=lambda t: (t.weight, t.s, t.degree),
        )

    def diagonal(self) -> BigradedDims:
        return BigradedDims(
            {(w, d): dim for (s, w, d), dim in self.entries.items() if s == w},
            self.bounds,
            Variance.COHOMOLOGICAL,
        )


BarElement = Tuple[Monomial, ...]


def _bar_basis(algebra: QuotientAlgebra, s: int, w: int, d: int, memo: Dict) -> List[BarElement]:
    key = (s, w, d)
    if key in memo:
        return memo[key]
    out: List[BarElement] = []
    if s == 0:
        if w == 0 and d == 0:
            out.append(())
    elif w >= s:
        for w1, d1 in algebra.nonzero_bidegrees():
            if w1 < 1 or w1 > w - (s - 1) or d1 > d:
                continue
            tails = _bar_basis(algebra, s - 1, w - w1, d - d1, memo)
            if not tails:
                continue
            for head in algebra.basis(w1, d1):
                out.extend((head,) + tail for tail in tails)
    memo[key] = out
    return out


def _bar_differential(
    algebra: QuotientAlgebra, source: List[BarElement], target_index: Dict[BarElement, int]
) -> Matrix:
    entries: Dict[int, Dict[int, Any]] = {}
    for r, element in enumerate(source):
        row: Dict[int, Any] = {}
        exponent = 0
        for i in range(len(element) - 1):
            a, b = element[i], element[i + 1]
            exponent += algebra.monomial_degree(a) + 1
            product = algebra.multiply(a, b)
            if not product:
                continue
            w, dg = len(a) + len(b), algebra.monomial_degree(a) + algebra.monomial_degree(b)
            basis = algebra.basis(w, dg)
            sign = -1 if exponent % 2 else 1
            for pos, c in product.items():
                target = element[:i] + (basis[pos],) + element[i + 2 :]
                col = target_index[target]
                value = row.get(col, QQ.zero) + sign * c
                if value:
                    row[col] = value
                else:
                    row.pop(col, None)
        if row:
            entries[r] = row
    return Matrix(len(source), len(target_index), entries)


def _tor_column(algebra: QuotientAlgebra, task: Tuple[int, int, bool]) -> Dict[int, int]:
    w, d, check = task
    memo: Dict = {}
    bases = {s: _bar_basis(algebra, s, w, d, memo) for s in range(1, w + 1)}
    indexes = {s: {e: k for k, e in enumerate(b)} for s, b in bases.items()}
    differentials: Dict[int, Matrix] = {}
    for s in range(2, w + 1):
        if bases[s] and bases[s - 1]:
            differentials[s] = _bar_differential(algebra, bases[s], indexes[s - 1])
    if check:
        for s in range(3, w + 1):
            if s in differentials and s - 1 in differentials:
                composite = differentials[s].to_sdm().matmul(differentials[s - 1].to_sdm())
                if composite:
                    raise DifferentialError(
                        f"bar differential does not square to zero at s={s}, weight {w}, degree {d}"
                    )
    ranks = {s: rank(m) for s, m in differentials.items()}
    tor = {}
    for s in range(1, w + 1):
        dim = len(bases[s]) - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if dim:
            tor[s] = dim
    logger.debug(f"Tor column ({w}, {d}): sizes {[len(bases[s]) for s in bases]}, tor {tor}")
    return tor


def bar_tor_dims(
    presentation: QuadraticCommPresentation,
    bounds: TruncationBounds,
    jobs: int = 1,
    check_differentials: bool = True,
) -> TorTable:
    """Tor of the quotient algebra from the reduced bar complex, per (s, w, d)"""
    logger.info(
        f"Computing bar complex Tor up to weight {bounds.max_weight}, degree {bounds.max_degree}"
    )
    algebra = QuotientAlgebra(presentation, bounds)
    entries = {(0, 0, 0): 1}
    entries.update(_tor_entries(algebra, range(1, bounds.max_weight + 1), jobs, check_differentials))
    return TorTable(entries, bounds)


def _tor_entries(
    algebra: QuotientAlgebra, weights: Sequence[int], jobs: int, check_differentials: bool
) -> Dict[Tuple[int, int, int], int]:
    min_degree = min((d for w, d in algebra.nonzero_bidegrees() if w == 1), default=None)
    if min_degree is None:
        return {}
    tasks = [
        (w, d, check_differentials)
        for w in weights
        for d in range(w * min_degree, algebra.bounds.max_degree + 1)
    ]
    columns = parallel_map(_tor_column, tasks, jobs, shared=algebra)
    entries = {}
    for (w, d, _), column in zip(tasks, columns):
        for s, dim in column.items():
            entries[(s, w, d)] = dim
    return entries


def tor_euler_characteristic(table: TorTable) -> PoincareSeries:
    """sum_s (-1)^s dim Tor_{s, w, d}"""
    out: Dict[Tuple[int, int], int] = {}
    for (s, w, d), dim in table.entries.items():
        out[(w, d)] = out.get((w, d), 0) + (-dim if s % 2 else dim)
    return PoincareSeries(out, table.bounds)


def _divides(lead: Monomial, monomial: Monomial) -> bool:
    i, j = lead
    if i == j:
        return monomial.count(i) >= 2
    return i in monomial and j in monomial


def has_quadratic_groebner_basis(presentation: QuadraticCommPresentation) -> bool:
    """
    Whether the leading monomials of R generate the initial ideal of (R).

    Leading monomials are the echelon pivots of QuotientAlgebra.  Two
    quadratic leads overlap in weight at most 4, so it is enough that the
    ideal has one dimension per monomial divisible by a lead in weights 3
    and 4.  Algebras with a quadratic Groebner basis are Koszul.
    """
    top = max(presentation.degrees, default=1)
    algebra = QuotientAlgebra(presentation, TruncationBounds(max_weight=4, max_degree=4 * top))
    leads = [lead for d in range(2 * top + 1) for lead in algebra.leading_monomials(2, d)]
    for w in (3, 4):
        for d in range(w * top + 1):
            divisible = sum(
                1 for m in algebra.free_monomials(w, d) if any(_divides(lead, m) for lead in leads)
            )
            if divisible != algebra.ideal_rank(w, d):
                return False
    return True


@dataclass(frozen=True)
class KoszulUpTo:
    bounds: TruncationBounds
    is_koszul: bool = field(default=True, init=False)


@dataclass(frozen=True)
class NotKoszul:
    witness: TorWitness
    bounds: TruncationBounds
    is_koszul: bool = field(default=False, init=False)


KoszulVerdict = Union[KoszulUpTo, NotKoszul]


def koszul_check(
    presentation: QuadraticCommPresentation,
    bounds: TruncationBounds,
    jobs: int = 1,
    check_differentials: bool = True,
) -> KoszulVerdict:
    """
    Koszul up to bounds iff Tor vanishes off the diagonal s = w.

    A quadratic Groebner basis settles Koszulness in every weight; otherwise
    the bar complex runs weight by weight and stops at the first witness.
    """
    if has_quadratic_groebner_basis(presentation):
        logger.info("koszul_check: quadratic Groebner basis, Koszul in every weight")
        return KoszulUpTo(bounds=bounds)
    logger.info(
        f"Computing bar complex Tor up to weight {bounds.max_weight}, degree {bounds.max_degree}"
    )
    algebra = QuotientAlgebra(presentation, bounds)
    for w in range(1, bounds.max_weight + 1):
        entries = _tor_entries(algebra, [w], jobs, check_differentials)
        witnesses = TorTable(entries, bounds).off_diagonal()
        if witnesses:
            logger.info(f"koszul_check: not Koszul, witness {witnesses[0]}")
            return NotKoszul(witness=witnesses[0], bounds=bounds)
    logger.info(f"koszul_check: Koszul up to weight {bounds.max_weight}, degree {bounds.max_degree}")
    return KoszulUpTo(bounds=bounds)


# Koszul dual coalgebra and Koszul complex

CoalgebraComponents = Dict[Tuple[int, int], List[TensorElement]]


def _relation_kernel(algebra: QuotientAlgebra, degree: int) -> List[TensorElement]:
    # R-hat: kernel of V (x) V -> A(2)
    degrees = algebra.degrees
    words = [
        (i, j)
        for i in range(len(degrees))
        for j in range(len(degrees))
        if degrees[i] + degrees[j] == degree
    ]
    if not words:
        return []
    columns = [algebra.multiply((i,), (j,)) for i, j in words]
    target = algebra.dim(2, degree)
    _, kernel = rank_and_kernel(Matrix.from_columns(columns, target))
    return [{words[k]: c for k, c in v.items()} for v in kernel]


def koszul_dual_coalgebra(
    presentation: QuadraticCommPresentation,
    bounds: TruncationBounds,
    algebra: Optional[QuotientAlgebra] = None,
) -> CoalgebraComponents:
    """Bases of A^(w) = intersection of V^i (x) R-hat (x) V^(w-2-i), per (w, cohomological degree)"""
    algebra = algebra or QuotientAlgebra(presentation, bounds)
    degrees = presentation.degrees
    components: CoalgebraComponents = {(0, 0): [{(): QQ.one}]}
    for i, d in enumerate(degrees):
        if d <= bounds.max_degree:
            components.setdefault((1, d), []).append({(i,): QQ.one})
    if bounds.max_weight >= 2:
        for d in range(bounds.max_degree + 1):
            kernel = _relation_kernel(algebra, d)
            if kernel:
                components[(2, d)] = kernel
    for w in range(3, bounds.max_weight + 1):
        for d in range(bounds.max_degree + 1):
            index = WordIndex()
            left, right = [], []
            for g, dg in enumerate(degrees):
                if dg > d:
                    continue
                for y in components.get((w - 1, d - dg), []):
                    left.append(index.vector({(g,) + word: c for word, c in y.items()}))
                    right.append(index.vector({word + (g,): c for word, c in y.items()}))
            if not left:
                continue
            meet = intersect_subspaces([left, right], len(index.words))
            if meet:
                components[(w, d)] = [index.element(v) for v in meet]
        logger.debug(f"dual coalgebra weight {w} computed")
    return components


class KoszulComplexWitness(NamedTuple):
    weight: int
    degree: int
    position: int
    dimension: int


@dataclass(frozen=True)
class KoszulComplexVerdict:
    acyclic: bool
    bounds: TruncationBounds
    witness: Optional[KoszulComplexWitness] = None


def _koszul_image(
    algebra: QuotientAlgebra, element: Dict[Tuple[Monomial, Word], Any]
) -> Dict[Tuple[Monomial, Word], Any]:
    # a (x) v1...vj -> a*v1 (x) v2...vj
    out: Dict[Tuple[Monomial, Word], Any] = {}
    for (a, word), c in element.items():
        if not word:
            continue
        product = algebra.multiply(a, (word[0],))
        if not product:
            continue
        w, d = len(a) + 1, algebra.monomial_degree(a) + algebra.degrees[word[0]]
        basis = algebra.basis(w, d)
        for pos, pc in product.items():
            key = (basis[pos], word[1:])
            value = out.get(key, QQ.zero) + c * pc
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return out


def _koszul_column(
    shared: Tuple[QuotientAlgebra, CoalgebraComponents], task: Tuple[int, int, bool]
) -> Dict[int, int]:
    algebra, coalgebra = shared
    total, d, check = task
    degrees = algebra.degrees
    chains: Dict[int, List[Dict[Tuple[Monomial, Word], Any]]] = {}
    for j in range(total + 1):
        elements = []
        for (cw, cd), xs in coalgebra.items():
            if cw != j or cd > d:
                continue
            for a in algebra.basis(total - j, d - cd):
                for x in xs:
                    elements.append({(a, word): c for word, c in x.items()})
        chains[j] = elements
    ranks: Dict[int, int] = {}
    for j in range(1, total + 1):
        if not chains[j]:
            continue
        index: Dict[Tuple[Monomial, Word], int] = {}
        rows = []
        for element in chains[j]:
            image = _koszul_image(algebra, element)
            if check and _koszul_image(algebra, image):
                raise DifferentialError(
                    f"Koszul differential does not square to zero at weight {total}, degree {d}"
                )
            rows.append({index.setdefault(k, len(index)): c for k, c in image.items()})
        ranks[j] = rank(Matrix.from_rows(rows, len(index)))
    homology = {}
    for j in range(total + 1):
        dim = len(chains[j]) - ranks.get(j, 0) - ranks.get(j + 1, 0)
        if dim:
            homology[j] = dim
    return homology


def koszul_complex_check(
    presentation: QuadraticCommPresentation,
    bounds: TruncationBounds,
    jobs: int = 1,
    check_differentials: bool = True,
) -> KoszulComplexVerdict:
    """Acyclicity of A (x) A^ in positive weight up to bounds"""
    if not presentation.generators:
        return KoszulComplexVerdict(acyclic=True, bounds=bounds)
    algebra = QuotientAlgebra(presentation, bounds)
    coalgebra = koszul_dual_coalgebra(presentation, bounds, algebra)
    min_degree = min(presentation.degrees)
    tasks = [
        (w, d, check_differentials)
        for w in range(1, bounds.max_weight + 1)
        for d in range(w * min_degree, bounds.max_degree + 1)
    ]
    columns = parallel_map(_koszul_column, tasks, jobs, shared=(algebra, coalgebra))
    for (w, d, _), homology in zip(tasks, columns):
        if homology:
            j = min(homology)
            witness = KoszulComplexWitness(w, d, j, homology[j])
            logger.info(f"koszul_complex_check: homology at {witness}")
            return KoszulComplexVerdict(acyclic=False, bounds=bounds, witness=witness)
    return KoszulComplexVerdict(acyclic=True, bounds=bounds)


def coalgebra_dims(components: CoalgebraComponents, bounds: TruncationBounds) -> BigradedDims:
    return BigradedDims({k: len(v) for k, v in components.items()}, bounds, Variance.COHOMOLOGICAL)


def gerstenhaber_dual_dims(
    presentation: QuadraticCommPresentation, n: int, bounds: TruncationBounds
) -> BigradedDims:
    """Dims of Lambda(s^{1-n} L) for the dual Lie algebra L of a Koszul algebra"""
    widened = bounds.widened(n - 1)
    lie = lie_algebra_dims(dual_lie(presentation), widened)
    shifted = shift_dims(lie, 1 - n)
    return free_comm_dims_of(shifted.restrict(bounds), bounds)
