# src/optsearch/schemas.py
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from src.codekit import Code, format_code, parse_code
from src.errors import BudgetExceeded

DEFAULT_MAX_NODES = 10**9
DEFAULT_MAX_SECONDS = 600.0


class SearchBudget(BaseModel):
    """Limits applied to every root subtree of a search."""

    max_nodes: int = Field(DEFAULT_MAX_NODES, gt=0)
    max_seconds: float = Field(DEFAULT_MAX_SECONDS, gt=0)


class SearchQuery(BaseModel):
    q: int = Field(..., ge=2)
    mode: Literal["min_length_any", "min_length_systematic", "max_size"]
    M: Optional[int] = Field(None, ge=1)
    k: Optional[int] = Field(None, ge=1)
    d: int = Field(..., ge=1)
    n_limit: int = Field(..., ge=1)
    budget: SearchBudget = Field(default_factory=SearchBudget)

    @model_validator(mode="after")
    def check_shape(self) -> "SearchQuery":
        if self.n_limit < self.d:
            raise ValueError(f"n_limit {self.n_limit} is below the distance {self.d}")
        if self.mode == "min_length_systematic":
            if self.k is None or self.M is not None:
                raise ValueError("systematic searches take k, not M")
        elif self.M is None or self.k is not None:
            raise ValueError(f"{self.mode} searches take M, not k")
        return self


class SearchResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: Literal["found", "exhausted", "budget_exceeded"]
    value: Optional[int] = None
    witness: Optional[Code] = None
    nodes_explored: int = 0
    duration_ms: float = 0.0
    lower_bound: Optional[int] = Field(None, description="Smallest length not excluded by the search")

    @field_serializer("witness")
    def serialize_witness(self, witness: Optional[Code]) -> Optional[str]:
        return None if witness is None else format_code(witness)

    @field_validator("witness", mode="before")
    @classmethod
    def parse_witness(cls, value):
        if isinstance(value, str):
            return parse_code(value)
        return value

    @property
    def found(self) -> bool:
        return self.status == "found"

    def raise_for_budget(self) -> "SearchResult":
        if self.status == "budget_exceeded":
            raise BudgetExceeded(
                f"search budget exhausted after {self.nodes_explored} nodes", best=self.witness, nodes=self.nodes_explored
            )
        return self


class FourWordClassification(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    d: int
    n: int
    codes_enumerated: int
    count_up_to_equivalence: int
    all_linear: bool
    witnesses: List[Code] = Field(default_factory=list)

    @field_serializer("witnesses")
    def serialize_witnesses(self, witnesses: List[Code]) -> List[str]:
        return [format_code(w) for w in witnesses]

    @field_validator("witnesses", mode="before")
    @classmethod
    def parse_witnesses(cls, value):
        return [parse_code(w) if isinstance(w, str) else w for w in value]


class FamilyEntry(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    k: int
    griesmer: int
    status: Literal["confirmed", "violated", "budget_exceeded", "out_of_range"]
    value: Optional[int] = None
    witness: Optional[Code] = None

    @field_serializer("witness")
    def serialize_witness(self, witness: Optional[Code]) -> Optional[str]:
        return None if witness is None else format_code(witness)

    @field_validator("witness", mode="before")
    @classmethod
    def parse_witness(cls, value):
        return parse_code(value) if isinstance(value, str) else value


class GriesmerFamilyReport(BaseModel):
    q: int
    d: int
    entries: List[FamilyEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.status == "confirmed" for e in self.entries)
