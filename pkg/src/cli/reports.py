# src/cli/reports.py
"""Reproduction of the Elias / Bound B comparison table for short binary codes."""
import logging

import pandas as pd

from src.boundtab import bound_b_binary_max_k, elias_max_dim
from src.cli.schemas import ReportDocument

logger = logging.getLogger("cli")

TABLE1_COLUMNS = [(26, 12), (28, 12), (28, 14), (30, 14), (32, 16), (33, 16)]
PUBLISHED_ELIAS = [8, 10, 6, 8, 7, 8]
PUBLISHED_BOUND_B = [7, 9, 5, 7, 6, 7]
PUBLISHED = "published value"


def _label(n: int, d: int) -> str:
    return f"({n},{d})"


def table1() -> ReportDocument:
    """Largest dimension allowed by the Elias bound and by Bound B at six (n, d) points."""
    columns = [_label(n, d) for n, d in TABLE1_COLUMNS]
    elias = [elias_max_dim(n, d) for n, d in TABLE1_COLUMNS]
    bound_b = [bound_b_binary_max_k(n, d) for n, d in TABLE1_COLUMNS]

    def row(label, values):
        return {"row": label, **dict(zip(columns, values))}

    doc = ReportDocument(
        title="Largest k for binary systematic codes: Elias bound vs Bound B",
        columns=columns,
        rows=[
            row("n", [n for n, _ in TABLE1_COLUMNS]),
            row("d", [d for _, d in TABLE1_COLUMNS]),
            row("elias", elias),
            row(f"elias ({PUBLISHED})", PUBLISHED_ELIAS),
            row("bound_b", bound_b),
            row(f"bound_b ({PUBLISHED})", PUBLISHED_BOUND_B),
        ],
        citations=[
            "Elias bound, binary form nd/(2w^2 - 2nw + nd) * 2^n / V(n, w), minimised over w",
            "Bound B for even d, largest k with bound_b_binary(k, d) <= n",
        ],
    )
    for col, got, want in zip(columns, elias, PUBLISHED_ELIAS):
        if got != want:
            message = f"Elias variant differs at {col}: computed {got}, published {want}"
            logger.warning(message)
            doc.warnings.append(message)
    for col, got, want in zip(columns, bound_b, PUBLISHED_BOUND_B):
        if got != want:
            doc.failures.append(f"Bound B mismatch at {col}: computed {got}, published {want}")
    return doc


def render(doc: ReportDocument) -> str:
    frame = pd.DataFrame(doc.rows).set_index("row")[doc.columns]
    lines = [doc.title, frame.to_string()]
    lines += [f"warning: {w}" for w in doc.warnings]
    lines += [f"FAILED: {f}" for f in doc.failures]
    return "\n".join(lines)
