# src/boundtab/schemas.py
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class DistanceDecomposition(BaseModel):
    """d = q^l * r + s with 1 <= r < q and l = floor(log_q d)."""

    q: int
    d: int
    l: int = Field(..., ge=0)
    r: int = Field(..., ge=1)
    s: int = Field(..., ge=0)


class BoundQuery(BaseModel):
    q: int = Field(..., ge=2, description="Alphabet order")
    d: int = Field(..., ge=1, description="Minimum distance")
    k: Optional[int] = Field(None, ge=1, description="Combinatorial dimension")
    M: Optional[int] = Field(None, ge=2, description="Code size")


class BoundEntry(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    bound: str
    value: int
    bound_class: str = Field(..., alias="class", description="Widest code class the bound is valid for: any, systematic or linear")
    ref: str


class BestValues(BaseModel):
    any: int
    systematic: int
    linear: int


class BoundReport(BaseModel):
    query: BoundQuery
    entries: List[BoundEntry]
    best: BestValues

    def to_json(self, **kwargs) -> str:
        return self.model_dump_json(by_alias=True, **kwargs)

    def entry(self, bound: str) -> Optional[BoundEntry]:
        return next((e for e in self.entries if e.bound == bound), None)


class GriesmerStatus(BaseModel):
    """Whether the Griesmer bound is known to hold for systematic codes at (q, k, d)."""

    status: str = Field(..., description="certified, violated or unknown")
    family: Optional[str] = None
    hadamard_order: Optional[int] = Field(None, description="Hadamard order a violating construction needs")
    constructible: Optional[bool] = None


class VerificationReport(BaseModel):
    name: str
    passed: bool
    checks: int = 0
    failures: List[str] = Field(default_factory=list)
    details: dict = Field(default_factory=dict)

    def record(self, ok: bool, instance: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(instance)
            self.passed = False

    def merge(self, other: "VerificationReport") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)
        self.passed = self.passed and other.passed
        self.details[other.name] = other.details or other.passed
