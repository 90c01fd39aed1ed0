# src/codekit/schemas.py
from typing import List, Optional

from pydantic import BaseModel, Field


class CodeParams(BaseModel):
    """Parameters (n, M, d)_q of an explicit code."""

    n: int = Field(..., ge=1, description="Length")
    M: int = Field(..., ge=1, description="Number of codewords")
    d: int = Field(..., ge=0, description="Minimum distance")
    q: int = Field(..., ge=2, description="Alphabet order")
    k: Optional[int] = Field(None, description="Combinatorial dimension when M = q^k")

    def label(self) -> str:
        return f"({self.n},{self.M},{self.d})_{self.q}"


class CodeAnalysis(BaseModel):
    params: CodeParams
    linear: bool
    equidistant: bool
    information_set: Optional[List[int]] = None

    @property
    def systematic(self) -> bool:
        return self.information_set is not None

    def summary(self) -> str:
        flags = [
            "linear" if self.linear else "nonlinear",
            "systematic" if self.systematic else "non-systematic",
        ]
        if self.equidistant:
            flags.append("equidistant")
        return f"{self.params.label()} {' '.join(flags)}"
