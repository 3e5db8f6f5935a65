from typing import Annotated, Dict, List, Literal, Union

from pydantic import BaseModel, Field, TypeAdapter

from koszulkit.schemas import AlgebraSpec, Coefficient


class Sphere(BaseModel):
    kind: Literal["sphere"] = "sphere"
    n: int = Field(ge=1)


class Suspension(BaseModel):
    """Iterated suspension of Y, given by the reduced homology of Y"""

    kind: Literal["suspension"] = "suspension"
    reduced_homology: Dict[int, int] = Field(default_factory=dict)
    times: int = Field(default=1, ge=1)


class LoopSpaceOf(BaseModel):
    """Space whose cohomology is free graded-commutative on the given degrees"""

    kind: Literal["loop_space"] = "loop_space"
    degrees: List[int] = Field(default_factory=list)


class ConfigurationSpace(BaseModel):
    kind: Literal["configuration"] = "configuration"
    n: int = Field(ge=2)
    k: int = Field(ge=2)


class HighlyConnectedManifold(BaseModel):
    kind: Literal["manifold"] = "manifold"
    degrees: List[int]
    q: List[List[Coefficient]]
    m: int = Field(ge=1)


class Presented(BaseModel):
    kind: Literal["presented"] = "presented"
    algebra: AlgebraSpec


class Wedge(BaseModel):
    kind: Literal["wedge"] = "wedge"
    factors: List["SpaceDescriptor"] = Field(min_length=1)


class Product(BaseModel):
    kind: Literal["product"] = "product"
    factors: List["SpaceDescriptor"] = Field(min_length=1)


SpaceDescriptor = Annotated[
    Union[
        Sphere,
        Suspension,
        LoopSpaceOf,
        Wedge,
        Product,
        ConfigurationSpace,
        HighlyConnectedManifold,
        Presented,
    ],
    Field(discriminator="kind"),
]

Wedge.model_rebuild()
Product.model_rebuild()

space_adapter: TypeAdapter = TypeAdapter(SpaceDescriptor)
