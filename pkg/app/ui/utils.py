from __future__ import annotations

import argparse

from app.core.homology import is_prime


def parse_chars(text: str) -> tuple[int, ...]:
    """
    Comma-separated list of primes, e.g. "2,3,5".
    Duplicates are dropped; order is kept.
    """
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            p = int(token)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {token!r}") from None
        if not is_prime(p):
            raise argparse.ArgumentTypeError(f"characteristic must be prime, got {p}")
        if p not in out:
            out.append(p)
    if not out:
        raise argparse.ArgumentTypeError("at least one characteristic is required")
    return tuple(out)


def parse_probability(text: str) -> tuple[int, int]:
    """Edge probability as "num/den" (or a bare 0 / 1)."""
    num, _, den = text.partition("/")
    try:
        pair = (int(num), int(den or 1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected num/den, got {text!r}") from None
    if pair[1] < 1 or not 0 <= pair[0] <= pair[1]:
        raise argparse.ArgumentTypeError(f"probability {text} outside [0, 1]")
    return pair


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value
