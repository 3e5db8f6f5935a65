from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from koszulkit.graded import Generator, TruncationBounds
from koszulkit.presentations import QuadraticCommPresentation, QuadraticLiePresentation
from koszulkit.utils.formatting import format_rational, parse_rational

Coefficient = Union[int, str]


# Presentation input
class MonomialTerm(BaseModel):
    coef: Coefficient = 1
    monomial: Tuple[str, str]


class BracketTerm(BaseModel):
    coef: Coefficient = 1
    bracket: Tuple[str, str]


class AlgebraSpec(BaseModel):
    generators: List[Generator] = Field(default_factory=list)
    relations: List[List[MonomialTerm]] = Field(default_factory=list)

    def to_presentation(self) -> QuadraticCommPresentation:
        """Build the validated commutative presentation"""
        relations = [
            [(parse_rational(t.coef), t.monomial) for t in relation] for relation in self.relations
        ]
        return QuadraticCommPresentation.from_named(self.generators, relations)

    @classmethod
    def from_presentation(cls, presentation: QuadraticCommPresentation) -> "AlgebraSpec":
        return cls(
            generators=list(presentation.generators),
            relations=[
                [MonomialTerm(coef=format_rational(c), monomial=pair) for c, pair in relation]
                for relation in presentation.named_relations()
            ],
        )


class LieSpec(BaseModel):
    generators: List[Generator] = Field(default_factory=list)
    relations: List[List[BracketTerm]] = Field(default_factory=list)

    def to_presentation(self) -> QuadraticLiePresentation:
        """Build the validated Lie presentation"""
        relations = [
            [(parse_rational(t.coef), t.bracket) for t in relation] for relation in self.relations
        ]
        return QuadraticLiePresentation.from_named(self.generators, relations)

    @classmethod
    def from_presentation(cls, presentation: QuadraticLiePresentation) -> "LieSpec":
        return cls(
            generators=list(presentation.generators),
            relations=[
                [BracketTerm(coef=format_rational(c), bracket=pair) for c, pair in relation]
                for relation in presentation.named_relations()
            ],
        )


# Output
class OutputTable(BaseModel):
    command: str
    bounds: TruncationBounds
    columns: List[str]
    rows: List[List[int]] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)
    algebra: Optional[AlgebraSpec] = None
    lie: Optional[LieSpec] = None
