"""
Quadratic presentations of graded-commutative algebras and graded Lie algebras.

Relations are stored as dicts {(i, j): coefficient} over canonical
weight-2 slots (i <= j).  Commutative slots are the monomials x_i x_j;
Lie slots are the brackets [a_i, a_j] for i < j and the half bracket
(1/2)[a_i, a_i] = a_i (x) a_i for odd a_i.

Lie elements live in the tensor algebra as dicts {word: coefficient}.
"""

import logging
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple

from sympy.polys.domains import QQ

from koszulkit.exactlin import Matrix, Vector, echelon_basis, rank, reduce_vector
from koszulkit.exceptions import (
    InhomogeneousRelationError,
    InputError,
    OddSquareError,
    SeriesError,
    UnknownGeneratorError,
)
from koszulkit.graded import (
    BigradedDims,
    Generator,
    TruncationBounds,
    Variance,
    parity_sign,
    sort_with_sign,
)
from koszulkit.series import (
    PoincareSeries,
    dims_to_series,
    free_graded_commutative_series,
    series_inverse,
    series_mul,
    series_to_dims,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Word = Tuple[int, ...]
Slot = Tuple[int, int]
Quadratic = Dict[Slot, Any]
TensorElement = Dict[Word, Any]
# letter ranks, and whether words compare from their last letter
WordOrder = Tuple[Tuple[int, ...], bool]


class TensorWord(NamedTuple):
    coefficient: Any
    letters: Word


def word_key(order: WordOrder, word: Word) -> Tuple[int, ...]:
    ranks, from_right = order
    return tuple(ranks[x] for x in (reversed(word) if from_right else word))


def tensor_words(element: Mapping[Word, Any], order: Optional[WordOrder] = None) -> List[TensorWord]:
    """Terms of a tensor element, smallest word first"""
    words = sorted(element) if order is None else sorted(element, key=lambda w: word_key(order, w))
    return [TensorWord(element[w], w) for w in words]


def _add_into(target: Dict[Any, Any], key: Any, value: Any) -> None:
    total = target.get(key, QQ.zero) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


# Presentations


class _QuadraticPresentation:
    """Generators plus a tuple of quadratic relations over canonical slots"""

    min_degree = 0

    def __init__(self, generators: Sequence[Generator], relations: Iterable[Mapping[Slot, Any]] = ()):
        self.generators: Tuple[Generator, ...] = tuple(generators)
        names = [g.name for g in self.generators]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise InputError(f"duplicate generator name '{duplicates[0]}'")
        for g in self.generators:
            if g.degree < self.min_degree:
                raise InputError(
                    f"generator {g.name} has degree {g.degree}, minimum is {self.min_degree}"
                )
        self.relations: Tuple[Quadratic, ...] = tuple(
            r for r in (self._canonical(rel) for rel in relations) if r
        )

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.generators == other.generators and self.relations == other.relations

    def __repr__(self) -> str:
        return f"{type(self).__name__}(generators={self.names}, relations={len(self.relations)})"

    # subclasses decide which diagonal slots exist and how swapping acts
    def _has_square(self, degree: int) -> bool:
        raise NotImplementedError

    def _swap_sign(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _vanishing_square(self, i: int) -> InputError:
        raise NotImplementedError

    def slot_degree(self, slot: Slot) -> int:
        return self.degrees[slot[0]] + self.degrees[slot[1]]

    def canonical_slot(self, i: int, j: int) -> Tuple[int, Slot]:
        """Sign and canonical slot of the product/bracket of generators i and j"""
        if i <= j:
            return 1, (i, j)
        return self._swap_sign(i, j), (j, i)

    def _canonical(self, relation: Mapping[Slot, Any]) -> Quadratic:
        out: Quadratic = {}
        n = len(self.generators)
        for (i, j), coefficient in relation.items():
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"relation slot ({i}, {j}) outside {n} generators")
            if not coefficient:
                continue
            sign, slot = self.canonical_slot(i, j)
            if slot[0] == slot[1] and not self._has_square(self.degrees[slot[0]]):
                raise self._vanishing_square(slot[0])
            _add_into(out, slot, QQ.convert(coefficient) * sign)
        degrees = {self.slot_degree(s) for s in out}
        if len(degrees) > 1:
            raise InhomogeneousRelationError(degrees)
        return dict(sorted(out.items()))

    def weight_two_basis(self, degree: int) -> List[Slot]:
        """Canonical weight-2 slots of the given degree, lexicographic"""
        degs = self.degrees
        out = []
        for i in range(len(degs)):
            for j in range(i, len(degs)):
                if degs[i] + degs[j] != degree:
                    continue
                if i == j and not self._has_square(degs[i]):
                    continue
                out.append((i, j))
        return out

    def weight_two_degrees(self) -> List[int]:
        degs = self.degrees
        found = {degs[i] + degs[j] for i in range(len(degs)) for j in range(i, len(degs))}
        return sorted(d for d in found if self.weight_two_basis(d))

    def relation_space(self, degree: int) -> List[Vector]:
        """Reduced echelon basis of span(R) in the coordinates of weight_two_basis(degree)"""
        basis = self.weight_two_basis(degree)
        index = {slot: k for k, slot in enumerate(basis)}
        rows = [
            {index[s]: c for s, c in rel.items()}
            for rel in self.relations
            if self.slot_degree(next(iter(rel))) == degree
        ]
        return echelon_basis(rows, len(basis))

    def relation_dims(self) -> Dict[int, int]:
        return {d: len(self.relation_space(d)) for d in self.weight_two_degrees()}

    @classmethod
    def from_relation_spaces(
        cls, generators: Sequence[Generator], spaces: Mapping[int, Sequence[Vector]]
    ):
        """Build a presentation from relation vectors given per degree"""
        shell = cls(generators)
        relations = []
        for degree, vectors in sorted(spaces.items()):
            basis = shell.weight_two_basis(degree)
            for v in vectors:
                relations.append({basis[k]: c for k, c in v.items()})
        return cls(generators, relations)

    @classmethod
    def from_named(
        cls,
        generators: Sequence[Generator],
        relations: Sequence[Sequence[Tuple[Any, Tuple[str, str]]]],
    ):
        """Build from relations written as [(coefficient, (name, name)), ...]"""
        index = {g.name: k for k, g in enumerate(generators)}
        converted = []
        for relation in relations:
            rel: Quadratic = {}
            for coefficient, (a, b) in relation:
                for name in (a, b):
                    if name not in index:
                        raise UnknownGeneratorError(name)
                sign, slot = cls(generators).canonical_slot(index[a], index[b])
                _add_into(rel, slot, QQ.convert(coefficient) * sign)
            converted.append(rel)
        return cls(generators, converted)

    def named_relations(self) -> List[List[Tuple[Any, Tuple[str, str]]]]:
        names = self.names
        return [[(c, (names[i], names[j])) for (i, j), c in rel.items()] for rel in self.relations]


class QuadraticCommPresentation(_QuadraticPresentation):
    """A = Lambda(V)/(R) with V in cohomological degrees >= 1"""

    min_degree = 1

    def _has_square(self, degree: int) -> bool:
        return degree % 2 == 0

    def _swap_sign(self, i: int, j: int) -> int:
        return parity_sign(self.degrees[i], self.degrees[j])

    def _vanishing_square(self, i: int) -> InputError:
        return OddSquareError(self.generators[i].name)


class QuadraticLiePresentation(_QuadraticPresentation):
    """L = FreeLie(W)/(R) with W in homological degrees >= 0"""

    min_degree = 0

    def _has_square(self, degree: int) -> bool:
        return degree % 2 == 1

    def _swap_sign(self, i: int, j: int) -> int:
        return -parity_sign(self.degrees[i], self.degrees[j])

    def _vanishing_square(self, i: int) -> InputError:
        name = self.generators[i].name
        return InputError(f"bracket [{name},{name}] of an even generator vanishes identically")

    def slot_tensor(self, slot: Slot) -> TensorElement:
        """Tensor expansion of a canonical bracket slot"""
        i, j = slot
        if i == j:
            return {(i, i): QQ.one}
        return {(i, j): QQ.one, (j, i): QQ(-parity_sign(self.degrees[i], self.degrees[j]))}

    def relation_tensors(self) -> List[Tuple[int, TensorElement]]:
        out = []
        for rel in self.relations:
            element: TensorElement = {}
            for slot, c in rel.items():
                for word, e in self.slot_tensor(slot).items():
                    _add_into(element, word, c * e)
            out.append((self.slot_degree(next(iter(rel))), element))
        return out


# Free graded-commutative algebra


@lru_cache(maxsize=None)
def _monomials(degrees: Tuple[int, ...], weight: int, degree: int) -> Tuple[Monomial, ...]:
    out: List[Monomial] = []
    prefix: List[int] = []

    def extend(start: int, w_left: int, d_left: int) -> None:
        if w_left == 0:
            if d_left == 0:
                out.append(tuple(prefix))
            return
        for i in range(start, len(degrees)):
            deg = degrees[i]
            if deg > d_left:
                continue
            if deg % 2 and prefix and prefix[-1] == i:
                continue
            prefix.append(i)
            extend(i, w_left - 1, d_left - deg)
            prefix.pop()

    extend(0, weight, degree)
    return tuple(out)


def comm_monomial_basis(generators: Sequence[Generator], weight: int, degree: int) -> List[Monomial]:
    """Monomials of Lambda(V) in bidegree (weight, degree) as sorted index tuples"""
    if weight < 0:
        raise InputError(f"negative weight {weight}")
    return list(_monomials(tuple(g.degree for g in generators), weight, degree))


def monomial_product(
    a: Monomial, b: Monomial, degrees: Sequence[int]
) -> Optional[Tuple[int, Monomial]]:
    """Signed canonical product a*b, or None when an odd generator repeats"""
    sign, merged = sort_with_sign(a + b, degrees)
    for x, y in zip(merged, merged[1:]):
        if x == y and degrees[x] % 2:
            return None
    return sign, merged


class _Component(NamedTuple):
    monomials: Tuple[Monomial, ...]
    index: Dict[Monomial, int]
    ideal: List[Vector]
    normal: Tuple[Monomial, ...]
    normal_index: Dict[int, int]


class QuotientAlgebra:
    """
    Per-bidegree normal form for Lambda(V)/(R).

    The ideal in each bidegree is put in reduced echelon form over the free
    monomial basis; non-pivot monomials form the quotient basis.
    """

    def __init__(self, presentation: QuadraticCommPresentation, bounds: TruncationBounds):
        self.presentation = presentation
        self.bounds = bounds
        self.degrees = presentation.degrees
        self._components: Dict[Tuple[int, int], _Component] = {}
        self._products: Dict[Tuple[Monomial, Monomial], Vector] = {}
        relations = {
            d: [
                {presentation.weight_two_basis(d)[k]: c for k, c in row.items()}
                for row in presentation.relation_space(d)
            ]
            for d in presentation.weight_two_degrees()
        }
        self._relations = {d: rows for d, rows in relations.items() if rows}
        for w in range(bounds.max_weight + 1):
            for d in range(bounds.max_degree + 1):
                monomials = _monomials(self.degrees, w, d)
                if monomials:
                    self._components[(w, d)] = self._build(w, d, monomials)
        logger.debug(f"QuotientAlgebra: {len(self._components)} nonzero free components")

    def _build(self, w: int, d: int, monomials: Tuple[Monomial, ...]) -> _Component:
        index = {m: k for k, m in enumerate(monomials)}
        rows: List[Vector] = []
        if w >= 2:
            for e, relation_rows in self._relations.items():
                if e > d:
                    continue
                for m in _monomials(self.degrees, w - 2, d - e):
                    for rel in relation_rows:
                        row: Vector = {}
                        for slot, c in rel.items():
                            product = monomial_product(m, slot, self.degrees)
                            if product is None:
                                continue
                            sign, result = product
                            _add_into(row, index[result], c * sign)
                        if row:
                            rows.append(row)
        ideal = echelon_basis(rows, len(monomials)) if rows else []
        pivots = {min(r) for r in ideal}
        normal = tuple(m for k, m in enumerate(monomials) if k not in pivots)
        normal_index = {index[m]: pos for pos, m in enumerate(normal)}
        return _Component(monomials, index, ideal, normal, normal_index)

    def dim(self, weight: int, degree: int) -> int:
        component = self._components.get((weight, degree))
        return len(component.normal) if component else 0

    def basis(self, weight: int, degree: int) -> Tuple[Monomial, ...]:
        component = self._components.get((weight, degree))
        return component.normal if component else ()

    def ideal_rank(self, weight: int, degree: int) -> int:
        component = self._components.get((weight, degree))
        return len(component.ideal) if component else 0

    def free_monomials(self, weight: int, degree: int) -> Tuple[Monomial, ...]:
        component = self._components.get((weight, degree))
        return component.monomials if component else ()

    def leading_monomials(self, weight: int, degree: int) -> List[Monomial]:
        """Pivot monomials of the ideal: the smallest monomial of each echelon row"""
        component = self._components.get((weight, degree))
        if component is None:
            return []
        return [component.monomials[min(row)] for row in component.ideal]

    def nonzero_bidegrees(self) -> List[Tuple[int, int]]:
        return sorted(k for k, c in self._components.items() if c.normal)

    def monomial_degree(self, monomial: Monomial) -> int:
        return sum(self.degrees[i] for i in monomial)

    def reduce(self, element: Mapping[Monomial, Any]) -> Vector:
        """Coordinates of a homogeneous free element in the quotient basis"""
        if not element:
            return {}
        first = next(iter(element))
        key = (len(first), self.monomial_degree(first))
        component = self._components.get(key)
        if component is None:
            return {}
        vector = {component.index[m]: c for m, c in element.items() if c}
        remainder = reduce_vector(vector, component.ideal)
        return {component.normal_index[k]: c for k, c in remainder.items()}

    def multiply(self, a: Monomial, b: Monomial) -> Vector:
        """Product of two normal monomials in quotient coordinates"""
        key = (a, b)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        w, d = len(a) + len(b), self.monomial_degree(a) + self.monomial_degree(b)
        product = monomial_product(a, b, self.degrees)
        if product is None or not self.bounds.contains(w, d):
            result: Vector = {}
        else:
            sign, monomial = product
            result = self.reduce({monomial: QQ(sign)})
        self._products[key] = result
        return result

    def dims(self) -> BigradedDims:
        return BigradedDims(
            {k: len(c.normal) for k, c in self._components.items()},
            self.bounds,
            Variance.COHOMOLOGICAL,
        )


def comm_algebra_dims(presentation: QuadraticCommPresentation, bounds: TruncationBounds) -> BigradedDims:
    """Bigraded dims of Lambda(V)/(R), unit included"""
    logger.info(
        f"Computing algebra dims for {len(presentation.generators)} generators "
        f"up to weight {bounds.max_weight}, degree {bounds.max_degree}"
    )
    return QuotientAlgebra(presentation, bounds).dims()


def finite_algebra_series(presentation: QuadraticCommPresentation, max_weight: int) -> PoincareSeries:
    """
    Full Poincare series of an algebra concentrated in weights <= max_weight.

    A quadratic algebra vanishing in one weight vanishes in all higher ones,
    so weight max_weight + 1 is computed and must be zero.
    """
    top = max(presentation.degrees, default=1)
    past = max_weight + 1
    bounds = TruncationBounds(max_weight=past, max_degree=max(past * top, 1))
    dims = comm_algebra_dims(presentation, bounds)
    beyond = sorted(d for (w, d), _ in dims.items() if w == past)
    if beyond:
        raise SeriesError(
            f"algebra is nonzero in weight {past} (degree {beyond[0]}); "
            f"a closed form needs every class within weight {max_weight}"
        )
    return dims_to_series(dims)


def free_comm_dims(generators: Sequence[Generator], bounds: TruncationBounds) -> BigradedDims:
    """Closed-form dims of the free graded-commutative algebra on V"""
    series = free_graded_commutative_series([((1, g.degree), 1) for g in generators], bounds)
    return series_to_dims(series, Variance.COHOMOLOGICAL)


def free_comm_dims_of(dims: BigradedDims, bounds: TruncationBounds) -> BigradedDims:
    """Dims of the free graded-commutative algebra on a bigraded space"""
    series = free_graded_commutative_series(dims.items(), bounds)
    return series_to_dims(series, dims.variance)


def tensor_algebra_dims(generators: Sequence[Generator], bounds: TruncationBounds) -> BigradedDims:
    """Dims of T(W): the inverse of 1 - sum t z^|g|"""
    linear: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for g in generators:
        linear[(1, g.degree)] = linear.get((1, g.degree), 0) - 1
    return series_to_dims(series_inverse(PoincareSeries(linear, bounds)), Variance.HOMOLOGICAL)


def enveloping_dims(lie_dims: BigradedDims, bounds: TruncationBounds) -> BigradedDims:
    """Dims of U(L) via PBW"""
    return free_comm_dims_of(lie_dims, bounds)


# Free graded Lie algebra inside the tensor algebra


def lie_bracket(u: Mapping[Word, Any], v: Mapping[Word, Any], du: int, dv: int) -> TensorElement:
    """[u, v] = u v - (-1)^{|u||v|} v u for homogeneous u, v"""
    sign = parity_sign(du, dv)
    out: TensorElement = {}
    for a, ca in u.items():
        for b, cb in v.items():
            _add_into(out, a + b, ca * cb)
            _add_into(out, b + a, -sign * ca * cb)
    return out


class WordIndex:
    def __init__(self) -> None:
        self.index: Dict[Word, int] = {}
        self.words: List[Word] = []

    def vector(self, element: Mapping[Word, Any]) -> Vector:
        out: Vector = {}
        for word, c in element.items():
            k = self.index.get(word)
            if k is None:
                k = self.index[word] = len(self.words)
                self.words.append(word)
            out[k] = c
        return out

    def element(self, vector: Mapping[int, Any]) -> TensorElement:
        return {self.words[k]: c for k, c in vector.items()}


LieComponents = Dict[Tuple[int, int], List[TensorElement]]


def tensor_basis(elements: Sequence[Mapping[Word, Any]]) -> List[TensorElement]:
    """Reduced basis of the span of tensor elements of one bidegree"""
    index = WordIndex()
    vectors = [index.vector(e) for e in elements]
    return [index.element(v) for v in echelon_basis(vectors, len(index.words))]


def _bracket_closure(
    degrees: Sequence[int],
    seeds: Mapping[Tuple[int, int], Sequence[TensorElement]],
    start_weight: int,
    bounds: TruncationBounds,
) -> LieComponents:
    components: LieComponents = {}
    for key, elements in seeds.items():
        if bounds.contains(*key) and elements:
            basis = tensor_basis(elements)
            if basis:
                components[key] = basis
    for w in range(start_weight + 1, bounds.max_weight + 1):
        candidates: Dict[int, List[TensorElement]] = {}
        for (pw, pd), elements in sorted(components.items()):
            if pw != w - 1:
                continue
            for g, dg in enumerate(degrees):
                d = pd + dg
                if d > bounds.max_degree:
                    continue
                for u in elements:
                    bracket = lie_bracket({(g,): QQ.one}, u, dg, pd)
                    if bracket:
                        candidates.setdefault(d, []).append(bracket)
        for d, elements in sorted(candidates.items()):
            basis = tensor_basis(elements)
            if basis:
                components[(w, d)] = basis
        logger.debug(
            f"bracket closure weight {w}: "
            f"{sum(len(v) for k, v in components.items() if k[0] == w)} basis elements"
        )
    return components


def free_lie_components(generators: Sequence[Generator], bounds: TruncationBounds) -> LieComponents:
    """Bases of the free graded Lie algebra per (weight, degree), as tensors"""
    degrees = [g.degree for g in generators]
    seeds: Dict[Tuple[int, int], List[TensorElement]] = {}
    for i, d in enumerate(degrees):
        seeds.setdefault((1, d), []).append({(i,): QQ.one})
    return _bracket_closure(degrees, seeds, 1, bounds)


def lie_ideal_components(presentation: QuadraticLiePresentation, bounds: TruncationBounds) -> LieComponents:
    """Bases of the Lie ideal generated by R per (weight, degree)"""
    seeds: Dict[Tuple[int, int], List[TensorElement]] = {}
    for d, element in presentation.relation_tensors():
        seeds.setdefault((2, d), []).append(element)
    if bounds.max_weight < 2:
        return {}
    return _bracket_closure(presentation.degrees, seeds, 2, bounds)


def _component_dims(components: LieComponents) -> Dict[Tuple[int, int], int]:
    return {k: len(v) for k, v in components.items()}


def free_lie_dims(generators: Sequence[Generator], bounds: TruncationBounds) -> BigradedDims:
    """Dims of the free graded Lie algebra on W"""
    return BigradedDims(
        _component_dims(free_lie_components(generators, bounds)), bounds, Variance.HOMOLOGICAL
    )


def lie_dims_from_enveloping(enveloping: BigradedDims, bounds: TruncationBounds) -> BigradedDims:
    """
    Invert PBW weight by weight: L(w, d) is what U(w, d) holds beyond the
    free graded-commutative algebra on L in weights below w.
    """
    lie: Dict[Tuple[int, int], int] = {}
    symmetric = PoincareSeries.one(bounds)
    for w in range(1, bounds.max_weight + 1):
        layer = {}
        for d in range(bounds.max_degree + 1):
            excess = enveloping.get(w, d) - symmetric[(w, d)]
            if excess < 0:
                raise SeriesError(f"enveloping dims fall below the PBW bound at ({w}, {d})")
            if excess:
                layer[(w, d)] = excess
        if layer:
            symmetric = series_mul(symmetric, free_graded_commutative_series(sorted(layer.items()), bounds))
            lie.update(layer)
    return BigradedDims(lie, bounds, Variance.HOMOLOGICAL)


# Enveloping algebras U(L) = T(W)/(R) with a quadratic Groebner basis


@lru_cache(maxsize=None)
def _words(degrees: Tuple[int, ...], weight: int, degree: int) -> Tuple[Word, ...]:
    if weight == 0:
        return ((),) if degree == 0 else ()
    out: List[Word] = []
    for x, dx in enumerate(degrees):
        if dx <= degree:
            out.extend((x,) + tail for tail in _words(degrees, weight - 1, degree - dx))
    return tuple(out)


def _word_orders(size: int) -> List[WordOrder]:
    forward = tuple(range(size))
    backward = tuple(reversed(forward))
    return [(forward, False), (backward, False), (forward, True), (backward, True)]


def _relation_leads(presentation: QuadraticLiePresentation, order: WordOrder) -> Set[Word]:
    by_degree: Dict[int, List[TensorElement]] = {}
    for d, element in presentation.relation_tensors():
        by_degree.setdefault(d, []).append(element)
    leads: Set[Word] = set()
    for d, elements in by_degree.items():
        words = sorted(_words(presentation.degrees, 2, d), key=lambda w: word_key(order, w))
        index = {w: k for k, w in enumerate(words)}
        rows = [{index[w]: c for w, c in e.items()} for e in elements]
        for row in echelon_basis(rows, len(words)):
            leads.add(tensor_words({words[k]: c for k, c in row.items()}, order)[0].letters)
    return leads


def _weight_three_ideal_ranks(presentation: QuadraticLiePresentation) -> Dict[int, int]:
    """dim of W R + R W in T(W) per degree"""
    degrees = presentation.degrees
    products: Dict[int, List[TensorElement]] = {}
    for d, element in presentation.relation_tensors():
        for x, dx in enumerate(degrees):
            products.setdefault(d + dx, []).append({(x,) + w: c for w, c in element.items()})
            products.setdefault(d + dx, []).append({w + (x,): c for w, c in element.items()})
    ranks = {}
    for d, elements in products.items():
        index = {w: k for k, w in enumerate(_words(degrees, 3, d))}
        rows = [{index[w]: c for w, c in e.items()} for e in elements]
        ranks[d] = rank(Matrix.from_rows(rows, len(index)))
    return ranks


def _normal_word_dims(degrees: Sequence[int], leads: Set[Word], bounds: TruncationBounds) -> BigradedDims:
    """Count words with no leading word as a factor, by their last letter"""
    counts: Dict[Tuple[int, int], int] = {(0, 0): 1}
    frontier: Dict[Tuple[int, int], int] = {}
    for x, dx in enumerate(degrees):
        if dx <= bounds.max_degree:
            frontier[(dx, x)] = frontier.get((dx, x), 0) + 1
    for w in range(1, bounds.max_weight + 1):
        for (d, _), c in frontier.items():
            counts[(w, d)] = counts.get((w, d), 0) + c
        following: Dict[Tuple[int, int], int] = {}
        for (d, last), c in frontier.items():
            for x, dx in enumerate(degrees):
                if d + dx <= bounds.max_degree and (last, x) not in leads:
                    following[(d + dx, x)] = following.get((d + dx, x), 0) + c
        frontier = following
    return BigradedDims(counts, bounds, Variance.HOMOLOGICAL)


def enveloping_algebra_dims(
    presentation: QuadraticLiePresentation, bounds: TruncationBounds
) -> Optional[BigradedDims]:
    """
    Dims of U(L) from normal words, or None.

    For each candidate word order the leading words of R are read off its
    echelon form.  They form a Groebner basis iff every overlap resolves,
    which is decided in weight 3: W R + R W must have as many dimensions as
    there are words containing a leading word.
    """
    ideal_ranks = _weight_three_ideal_ranks(presentation)
    degrees = presentation.degrees
    for order in _word_orders(len(degrees)):
        leads = _relation_leads(presentation, order)
        resolved = all(
            sum(1 for w in _words(degrees, 3, d) if w[:2] in leads or w[1:] in leads) == r
            for d, r in ideal_ranks.items()
        )
        if resolved:
            logger.debug(f"Quadratic Groebner basis for U(L) with {len(leads)} leading words")
            return _normal_word_dims(degrees, leads, bounds)
    return None


def lie_algebra_dims(presentation: QuadraticLiePresentation, bounds: TruncationBounds) -> BigradedDims:
    """Dims of FreeLie(W)/(R)"""
    logger.info(
        f"Computing Lie algebra dims for {len(presentation.generators)} generators, "
        f"{len(presentation.relations)} relations"
    )
    enveloping = enveloping_algebra_dims(presentation, bounds)
    if enveloping is not None:
        return lie_dims_from_enveloping(enveloping, bounds)
    logger.info("No quadratic Groebner basis for the enveloping algebra, using bracket closure")
    return lie_algebra_dims_by_closure(presentation, bounds)


def lie_algebra_dims_by_closure(
    presentation: QuadraticLiePresentation, bounds: TruncationBounds
) -> BigradedDims:
    """Dims of FreeLie(W)/(R) as free minus ideal bracket closures"""
    free = _component_dims(free_lie_components(presentation.generators, bounds))
    ideal = _component_dims(lie_ideal_components(presentation, bounds))
    quotient = {k: dim - ideal.get(k, 0) for k, dim in free.items()}
    return BigradedDims(quotient, bounds, Variance.HOMOLOGICAL)
