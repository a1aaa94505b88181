from __future__ import annotations

import pandas as pd


def data_table(df: pd.DataFrame, caption: str = "", index: bool = False) -> str:
    """Plain-text rendering of a frame, optionally with a caption line above it."""
    body = "(empty)" if df.empty else df.to_string(index=index)
    return f"{caption}\n{body}\n" if caption else f"{body}\n"


def kpi_line(kpis: dict[str, object]) -> str:
    """One-line "label: value" summary."""
    return "  ".join(f"{label}: {value}" for label, value in kpis.items()) + "\n"
