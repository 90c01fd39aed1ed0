# src/cli/schemas.py
from datetime import datetime, timezone
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

from src.boundtab import BoundReport
from src.codekit import CodeAnalysis

Cell = Union[int, str, None]


class ReportDocument(BaseModel):
    """A reproduced table: computed rows next to the published ones."""

    title: str
    columns: List[str]
    rows: List[Dict[str, Cell]] = Field(..., description="Each row has a 'row' label plus one cell per column")
    citations: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    failures: List[str] = Field(default_factory=list)
    generated_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    def row(self, label: str) -> Dict[str, Cell]:
        return next(r for r in self.rows if r["row"] == label)


class BoundComparison(BaseModel):
    bound: str
    bound_class: str = Field(..., alias="class")
    value: int
    observed: int
    margin: int = Field(..., description="observed length minus the bound; negative means the bound is violated")

    model_config = {"populate_by_name": True}

    def verdict(self) -> str:
        if self.margin < 0:
            return f"VIOLATED by {-self.margin}"
        return "meets" if self.margin == 0 else f"above by {self.margin}"


class AnalysisDocument(BaseModel):
    analysis: CodeAnalysis
    bounds: Optional[BoundReport] = None
    comparisons: List[BoundComparison] = Field(default_factory=list)

    def griesmer_line(self) -> Optional[str]:
        match = next((c for c in self.comparisons if c.bound == "griesmer"), None)
        if match is None:
            return None
        if match.margin == 0:
            return "meets Griesmer"
        return f"Griesmer({match.bound_class})={match.value}: {match.verdict()}"
