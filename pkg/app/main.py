from __future__ import annotations

# --- bootstrap sys.path to import app.* ---
from pathlib import Path
import sys
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
# --------------------------------------------------------

import logging
from typing import Optional, Sequence

from app.core.errors import EdgeIdealError, FaceCountOverflowError, InfeasibleSizeError
from app.ui.commands import COMMANDS
from app.ui.parser import build_parser, config_from_args

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def setup_logging(verbosity: int) -> None:
    """Configure root logging on stderr; -v for INFO, -vv for DEBUG."""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Application entry point; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    setup_logging(args.verbose)
    config = config_from_args(args)
    try:
        return COMMANDS[args.command](args, config)
    except (InfeasibleSizeError, FaceCountOverflowError) as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except EdgeIdealError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
