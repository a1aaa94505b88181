from __future__ import annotations

import argparse
from typing import Protocol

from app.core.config import AppConfig


class CommandHandler(Protocol):
    """Protocol for subcommand handlers; the return value is the exit status."""

    def __call__(self, args: argparse.Namespace, config: AppConfig) -> int:
        ...


def emit(text: str, path: str | None = None) -> None:
    """Write to a file when a path is given, otherwise to stdout."""
    if path is None or path == "-":
        print(text, end="" if text.endswith("\n") else "\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
