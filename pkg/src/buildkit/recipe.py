# src/buildkit/recipe.py
from typing import Dict, Literal

from pydantic import BaseModel, Field

Family = Literal[
    "simplex",
    "dim3",
    "sylvester",
    "paley1",
    "paley2",
    "kronecker",
    "hadamard",
    "levenshtein",
    "counterexample",
    "punctured_counterexample",
    "simplex_sequence",
]


class ConstructionRecipe(BaseModel):
    """Which family to build and with which integer parameters."""

    family: Family
    parameters: Dict[str, int] = Field(default_factory=dict)
    provenance: str = ""

    def describe(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        return f"{self.family}({params})"
