"""
Exact linear algebra over the rationals.

Vectors are sparse dicts {column: rational}; matrices are dict-of-dicts
handed to sympy's SDM for elimination.  Every basis returned here is in
reduced row echelon form, so results are reproducible bit for bit.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices.sdm import SDM

from koszulkit.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

Vector = Dict[int, Any]
VectorLike = Union[Mapping[int, Any], Sequence[Any]]


def _clean(row: Mapping[int, Any]) -> Vector:
    return {c: QQ.convert(v) for c, v in row.items() if v}


@dataclass(frozen=True)
class Matrix:
    """Sparse rational matrix, no stored zeros"""

    rows: int
    cols: int
    entries: Dict[int, Dict[int, Any]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for r, row in self.entries.items():
            if not 0 <= r < self.rows:
                raise DimensionMismatchError(
                    f"row index {r} outside a {self.rows}x{self.cols} matrix"
                )
            kept = _clean(row)
            for c in kept:
                if not 0 <= c < self.cols:
                    raise DimensionMismatchError(
                        f"column index {c} outside a {self.rows}x{self.cols} matrix"
                    )
            if kept:
                cleaned[r] = kept
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_rows(cls, vectors: Sequence[VectorLike], cols: int) -> "Matrix":
        sparse = [as_sparse(v, cols) for v in vectors]
        return cls(len(sparse), cols, {i: v for i, v in enumerate(sparse) if v})

    @classmethod
    def from_columns(cls, vectors: Sequence[VectorLike], rows: int) -> "Matrix":
        return cls.from_rows(vectors, rows).transpose()

    def transpose(self) -> "Matrix":
        flipped: Dict[int, Dict[int, Any]] = {}
        for r, row in self.entries.items():
            for c, v in row.items():
                flipped.setdefault(c, {})[r] = v
        return Matrix(self.cols, self.rows, flipped)

    def to_sdm(self) -> SDM:
        return SDM({r: dict(row) for r, row in self.entries.items()}, (self.rows, self.cols), QQ)

    def apply(self, vector: VectorLike) -> Vector:
        """Matrix times column vector"""
        v = as_sparse(vector, self.cols)
        out: Vector = {}
        for r, row in self.entries.items():
            acc = QQ.zero
            for c, entry in row.items():
                if c in v:
                    acc += entry * v[c]
            if acc:
                out[r] = acc
        return out


def as_sparse(vector: VectorLike, dim: int) -> Vector:
    """Convert a dense or sparse vector to sparse form, checking its ambient dimension"""
    if isinstance(vector, Mapping):
        v = _clean(vector)
        if any(not 0 <= c < dim for c in v):
            raise DimensionMismatchError(f"vector has an index outside ambient dimension {dim}")
        return v
    if len(vector) != dim:
        raise DimensionMismatchError(
            f"vector of length {len(vector)} in ambient dimension {dim}"
        )
    return _clean(dict(enumerate(vector)))


def _sorted_rows(rref: Mapping[int, Mapping[int, Any]]) -> List[Vector]:
    rows = [dict(row) for row in rref.values() if row]
    rows.sort(key=min)
    return rows


def echelon_basis(vectors: Sequence[VectorLike], dim: int) -> List[Vector]:
    """Reduced echelon basis of the span of vectors, sorted by pivot column"""
    matrix = Matrix.from_rows(vectors, dim)
    if not matrix.entries:
        return []
    rref, _ = matrix.to_sdm().rref()
    return _sorted_rows(rref)


def rank(matrix: Matrix) -> int:
    if not matrix.entries:
        return 0
    _, pivots = matrix.to_sdm().rref()
    return len(pivots)


def rank_and_kernel(matrix: Matrix) -> Tuple[int, List[Vector]]:
    """Rank of M and a reduced echelon basis of {v : M v = 0}"""
    sdm = matrix.to_sdm()
    rref, pivots = sdm.rref()
    kernel, _ = rref.nullspace_from_rref(pivots)
    basis = echelon_basis([dict(row) for row in kernel.values()], matrix.cols)
    logger.debug(
        f"rank_and_kernel: {matrix.rows}x{matrix.cols} -> rank {len(pivots)}, "
        f"nullity {len(basis)}"
    )
    return len(pivots), basis


def reduce_vector(vector: Mapping[int, Any], echelon: Iterable[Mapping[int, Any]]) -> Vector:
    """Remainder of vector after eliminating the pivots of a reduced echelon basis"""
    v = _clean(vector)
    for row in echelon:
        p = min(row)
        c = v.get(p)
        if not c:
            continue
        c = c / row[p]
        for col, entry in row.items():
            value = v.get(col, QQ.zero) - c * entry
            if value:
                v[col] = value
            else:
                v.pop(col, None)
    return v


def in_span(vector: Mapping[int, Any], echelon: Sequence[Mapping[int, Any]]) -> bool:
    return not reduce_vector(vector, echelon)


def _intersect_pair(first: List[Vector], second: List[Vector], dim: int) -> List[Vector]:
    if not first or not second:
        return []
    p = len(first)
    stacked = Matrix.from_columns(first + second, dim)
    _, kernel = rank_and_kernel(stacked)
    combos = []
    for k in kernel:
        combo: Vector = {}
        for i, coefficient in k.items():
            if i >= p:
                continue
            for col, entry in first[i].items():
                value = combo.get(col, QQ.zero) + coefficient * entry
                if value:
                    combo[col] = value
                else:
                    combo.pop(col, None)
        combos.append(combo)
    return echelon_basis(combos, dim)


def intersect_subspaces(
    spans: Sequence[Sequence[VectorLike]], dim: Optional[int] = None
) -> List[Vector]:
    """Reduced echelon basis of the intersection of the spans"""
    if dim is None:
        dense = [len(v) for span in spans for v in span if not isinstance(v, Mapping)]
        if not dense:
            raise DimensionMismatchError("ambient dimension unknown for sparse input")
        dim = dense[0]
    if not spans:
        return [{i: QQ.one} for i in range(dim)]
    current = echelon_basis(spans[0], dim)
    for span in spans[1:]:
        current = _intersect_pair(current, echelon_basis(span, dim), dim)
    return current
