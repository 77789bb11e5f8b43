"""
Esquemas JSON de entrada y salida de la CLI.

Cada modelo pydantic sabe convertirse al tipo de dominio (``to_domain``)
y los ``encode_*`` hacen el camino inverso con la forma canónica.
"""

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, Field, ValidationError

from ..algebra.gring import GClass, parse_class
from ..algebra.powstruct import MeasuredPartition
from ..algebra.series import CoeffRing, TruncSeries
from ..core.errors import InvalidInput
from ..measures.genfun import Component, ResolutionData
from ..measures.strata import (
    Ambient,
    AmbientKind,
    ClassMultiplier,
    DiscriminantNonzero,
    JetStratum,
    Multiplier,
    NotAllZero,
    projectivize,
)
from ..singularities.curves import Branch, CurveGerm
from ..singularities.lifting import LiftReport
from ..singularities.plane_poly import PlanePoly

M = TypeVar("M", bound=BaseModel)


def load(model: Type[M], data: Any) -> M:
    """
    Valida un payload contra un esquema.

    Raises:
        InvalidInput: si el payload no cumple el esquema
    """
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InvalidInput(f"invalid {model.__name__} payload", {"errors": e.errors(include_url=False)})


# --- clases y coeficientes ----------------------------------------------


class GClassModel(BaseModel):
    num: List[Tuple[Union[int, str], int]]
    den: List[Tuple[Union[int, str], int]] = Field(default_factory=lambda: [("1", 0)])

    def to_domain(self) -> GClass:
        try:
            return GClass.from_terms(self.num, self.den)
        except ValueError as e:
            raise InvalidInput(f"bad class terms: {e}")


ClassLike = Union[int, str, GClassModel]


def class_from(value: ClassLike) -> GClass:
    """Clase desde un entero, una expresión en L o un objeto {num, den}."""
    if isinstance(value, GClassModel):
        return value.to_domain()
    if isinstance(value, int):
        return GClass(value)
    return parse_class(value)


def encode_class(value: GClass) -> Dict[str, Any]:
    num, den = value.to_terms()
    return {"num": num, "den": den}


Coeff = Union[int, str, Tuple[Union[int, str], Union[int, str]], GClassModel]


def coeff_from(value: Coeff):
    if isinstance(value, GClassModel):
        return value.to_domain()
    if isinstance(value, tuple):
        num, den = (int(v) for v in value)
        if den == 0:
            raise InvalidInput("zero denominator in rational coefficient")
        return Fraction(num, den)
    try:
        return int(value)
    except ValueError:
        raise InvalidInput(f"coefficient {value!r} is not an integer string")


def encode_coeff(value) -> Any:
    if isinstance(value, GClass):
        return encode_class(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return [str(value.numerator), str(value.denominator)]
    return str(value)


# --- series ---------------------------------------------------------------


class TruncSeriesModel(BaseModel):
    vars: List[str] = Field(default_factory=lambda: ["t"], min_length=1)
    trunc: int = Field(ge=0)
    terms: List[Tuple[List[int], Coeff]] = Field(default_factory=list)

    def to_domain(self) -> TruncSeries:
        coeffs: Dict[Tuple[int, ...], Any] = {}
        for exps, c in self.terms:
            key = tuple(exps)
            value = coeff_from(c)
            coeffs[key] = coeffs[key] + value if key in coeffs else value
        ring = CoeffRing.ZZ
        for value in coeffs.values():
            ring = ring.join(CoeffRing.of(value))
        return TruncSeries(self.vars, self.trunc, coeffs, ring)


def encode_series(s: TruncSeries) -> Dict[str, Any]:
    return {
        "vars": list(s.vars),
        "trunc": s.trunc,
        "terms": [[list(e), encode_coeff(c)] for e, c in s.items()],
    }


class MonomialValueModel(BaseModel):
    """Valor t^exp·coeff con truncación propia."""
    exp: int = Field(ge=1)
    coeff: int = 1
    trunc: int = Field(ge=1)

    def to_domain(self) -> TruncSeries:
        return TruncSeries(("t",), self.trunc, {(self.exp,): self.coeff})


class PartitionEntryModel(BaseModel):
    value: Union[MonomialValueModel, TruncSeriesModel]
    weight: int


def partition_from(entries: List[PartitionEntryModel]) -> MeasuredPartition:
    return MeasuredPartition.from_pairs((e.value.to_domain(), e.weight) for e in entries)


class PartitionModel(BaseModel):
    entries: List[PartitionEntryModel]

    def to_domain(self) -> MeasuredPartition:
        return partition_from(self.entries)


# --- curvas ----------------------------------------------------------------


class BranchModel(BaseModel):
    x: TruncSeriesModel
    y: TruncSeriesModel
    exact: bool = False

    def to_domain(self) -> Branch:
        return Branch(self.x.to_domain(), self.y.to_domain(), self.exact)


def encode_branch(b: Branch) -> Dict[str, Any]:
    return {"x": encode_series(b.x), "y": encode_series(b.y), "exact": b.exact}


class CurveGermModel(BaseModel):
    branches: List[BranchModel] = Field(min_length=1)

    def to_domain(self) -> CurveGerm:
        return CurveGerm(tuple(b.to_domain() for b in self.branches))


class PlanePolyModel(BaseModel):
    terms: List[Tuple[int, int, int, int]]

    def to_domain(self) -> PlanePoly:
        return PlanePoly.from_rows(self.terms)


def poly_from(value: Union[PlanePolyModel, str]) -> PlanePoly:
    return value.to_domain() if isinstance(value, PlanePolyModel) else PlanePoly.parse(value)


def encode_poly(f: PlanePoly) -> Dict[str, Any]:
    return {"terms": f.to_rows()}


class LiftInputModel(BaseModel):
    f: Union[PlanePolyModel, str]
    branch: BranchModel
    target: int = Field(ge=1)


def encode_lift(report: LiftReport) -> Dict[str, Any]:
    return {
        "lifted": encode_branch(report.lifted),
        "iterations": [[step, order] for step, order in report.iterations],
        "steps": report.steps,
        "n": report.n,
        "n1": report.n1,
        "Q": report.Q,
        "m": report.m,
        "target": report.target,
    }


# --- estratos -------------------------------------------------------------

Coord = Union[int, str]


class AmbientModel(BaseModel):
    kind: Literal["arc", "function"]
    n: int = Field(ge=1)
    include_constant: bool = False

    def to_domain(self) -> Ambient:
        return Ambient(AmbientKind(self.kind), self.n, self.include_constant)


class MultiplierModel(BaseModel):
    kind: Literal["class", "not_all_zero", "discriminant_nonzero"]
    coords: List[Coord] = Field(default_factory=list)
    value: Optional[ClassLike] = None
    label: str = ""


class JetStratumModel(BaseModel):
    ambient: AmbientModel
    zero: List[Coord] = Field(default_factory=list)
    nonzero: List[Coord] = Field(default_factory=list)
    multipliers: List[MultiplierModel] = Field(default_factory=list)
    projectivize: bool = False

    def to_domain(self) -> JetStratum:
        ambient = self.ambient.to_domain()
        index = {label: i for i, label in enumerate(ambient.labels())}

        def resolve(coord: Coord) -> int:
            if isinstance(coord, int):
                return coord
            if coord not in index:
                raise InvalidInput(f"unknown coordinate {coord!r} in {ambient}")
            return index[coord]

        multipliers: List[Multiplier] = []
        for m in self.multipliers:
            coords = tuple(resolve(c) for c in m.coords)
            if m.kind == "class":
                if m.value is None:
                    raise InvalidInput("class multiplier needs a value")
                multipliers.append(ClassMultiplier(class_from(m.value), m.label))
            elif m.kind == "not_all_zero":
                if not coords:
                    raise InvalidInput("not_all_zero multiplier needs coordinates")
                multipliers.append(NotAllZero(coords))
            else:
                if len(coords) != 3:
                    raise InvalidInput("discriminant_nonzero multiplier needs exactly 3 coordinates")
                multipliers.append(DiscriminantNonzero(*coords))

        stratum = JetStratum(
            ambient,
            frozenset(resolve(c) for c in self.zero),
            frozenset(resolve(c) for c in self.nonzero),
            tuple(multipliers),
        )
        return projectivize(stratum) if self.projectivize else stratum


# --- resoluciones ---------------------------------------------------------


class ComponentModel(BaseModel):
    id: Union[int, str]
    nu: int = Field(ge=1)
    euler_open_class: ClassLike


class ResolutionModel(BaseModel):
    components: List[ComponentModel] = Field(default_factory=list)
    intersections: List[List[int]] = Field(default_factory=list)
    arrows: List[Tuple[Union[int, str], int]] = Field(default_factory=list)

    def to_domain(self) -> ResolutionData:
        return ResolutionData(
            components=tuple(Component(c.id, c.nu, class_from(c.euler_open_class)) for c in self.components),
            intersections=tuple(tuple(row) for row in self.intersections),
            arrows=tuple(self.arrows),
        )


def encode_resolution(res: ResolutionData) -> Dict[str, Any]:
    return {
        "components": [
            {"id": c.id, "nu": c.nu, "euler_open_class": encode_class(c.euler_open_class)} for c in res.components
        ],
        "intersections": [list(row) for row in res.intersections],
        "arrows": [[a, j] for a, j in res.arrows],
    }
