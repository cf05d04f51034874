from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator

from toric.groebner import FanCone, GroebnerFan2
from toric.ideals import Binomial, MonomialIdeal


class SupportType(str, Enum):
    POINTED = "pointed"
    HALFPLANE = "halfplane"
    PLANE = "plane"


class FlipKind(str, Enum):
    TRUE = "true"
    FAKE = "fake"


class OutputFormat(str, Enum):
    JSON = "json"
    SVG = "svg"


class GaleInput(BaseModel):
    name: Optional[str] = None
    basis: List[Tuple[StrictInt, StrictInt]]

    @field_validator("basis")
    @classmethod
    def non_empty(cls, v):
        if not v:
            raise ValueError("basis must have at least one row")
        return v


class MergeOut(BaseModel):
    dropped: int
    kept: int
    factor: int


class NormalizationOut(BaseModel):
    name: Optional[str] = None
    basis: List[List[int]]
    dropped_zero: List[int] = []
    merges: List[MergeOut] = []
    saturation_index: int


class BinomialOut(BaseModel):
    l: List[int]
    plus: List[int]
    minus: List[int]

    @classmethod
    def from_binomial(cls, b: Binomial) -> "BinomialOut":
        return cls(l=list(b.l), plus=list(b.plus), minus=list(b.minus))


def ideal_out(I: MonomialIdeal) -> List[List[int]]:
    return [list(g) for g in I.sorted_gens]


class ChamberOut(BaseModel):
    rays: List[List[int]]
    pair: List[int]


class ChambersOut(BaseModel):
    support: SupportType
    rays: List[List[int]]
    chambers: List[ChamberOut]


class ConeOut(BaseModel):
    rays: List[int]
    ideal: List[List[int]]


class FanOut(BaseModel):
    rays: List[List[int]]
    support: SupportType
    cones: List[ConeOut]

    @classmethod
    def from_fan(cls, fan: GroebnerFan2) -> "FanOut":
        return cls(
            rays=[list(r) for r in fan.rays],
            support=SupportType(fan.support),
            cones=[ConeOut(rays=list(c.rays), ideal=ideal_out(c.ideal)) for c in fan.cones],
        )

    def to_fan(self) -> GroebnerFan2:
        n = len(self.cones[0].ideal[0]) if self.cones and self.cones[0].ideal else 0
        return GroebnerFan2(
            support=self.support.value,
            rays=tuple(tuple(r) for r in self.rays),
            cones=tuple(
                FanCone((c.rays[0], c.rays[1]), MonomialIdeal.of(c.ideal, n)) for c in self.cones
            ),
        )


class IdealOut(BaseModel):
    generators: List[List[int]]
    radical: List[List[int]]
    minimal_primes: List[List[int]]
    cone: List[List[int]]
    chamber: List[int]
    special_simplex: List[int]
    special_localization: List[List[int]]
    witness: List[int]


class FlipOut(BaseModel):
    binomial: BinomialOut
    kind: FlipKind
    target: Optional[List[List[int]]] = None


class IdealFlipsOut(BaseModel):
    ideal: List[List[int]]
    flips: List[FlipOut]


class TangentOut(BaseModel):
    ideal: List[List[int]]
    dimension: int
    flips: int


class CheckResult(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    ref: str
    passed: bool = Field(alias="pass")
    witness: Any = None


class VerificationReport(BaseModel):
    name: Optional[str] = None
    parameters: Dict[str, Any] = {}
    checks: List[CheckResult]
    overall: bool


class RunConfig(BaseModel):
    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON
    degree_bound: Optional[int] = None
    margin: Optional[int] = None
    search_cap: Optional[int] = None
    jobs: int = 1
    seed: int = 0
    count: int = 10
    pdf: Optional[str] = None
    dot: bool = False
    lift: bool = False
    checks: Optional[List[str]] = None
    verbose: bool = False

    @field_validator("degree_bound", "margin", "search_cap", "jobs", "count")
    @classmethod
    def positive(cls, v):
        if v is not None and v <= 0:
            raise ValueError("numeric overrides must be positive")
        return v


class VerifyOptions(BaseModel):
    degree_bound: Optional[int] = None
    margin: Optional[int] = None
    search_cap: Optional[int] = None
    jobs: int = 1
    oracle_max_graver: int = 12
    oracle_max_monomials: int = 200000
    random_weights: int = 5
    seed: int = 0
    checks: Optional[List[str]] = None
