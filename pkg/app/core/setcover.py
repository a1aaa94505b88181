"""Exact minimum set cover by depth-first branch and bound over bitmask sets."""
from __future__ import annotations

from typing import Optional, Sequence

from app.core.graph import iter_members


def greedy_cover(universe: int, sets: Sequence[int]) -> Optional[list[int]]:
    """Largest-gain greedy cover; ties go to the smallest set index."""
    uncovered = universe
    chosen: list[int] = []
    while uncovered:
        best, gain = -1, 0
        for i, s in enumerate(sets):
            g = (s & uncovered).bit_count()
            if g > gain:
                best, gain = i, g
        if best < 0:
            return None
        chosen.append(best)
        uncovered &= ~sets[best]
    return chosen


def min_set_cover(universe: int, sets: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Indices of a minimum subfamily of ``sets`` covering ``universe``.

    Branches on the uncovered element with the fewest covering sets; the bound
    is ceil(|uncovered| / largest remaining gain). Returns None when the union
    of all sets misses part of the universe.
    """
    union = 0
    for s in sets:
        union |= s
    if universe & ~union:
        return None
    if not universe:
        return ()

    covering: dict[int, list[int]] = {
        e: [i for i, s in enumerate(sets) if s >> e & 1] for e in iter_members(universe)
    }
    best: list[int] = list(greedy_cover(universe, sets) or [])

    def search(uncovered: int, chosen: list[int]) -> None:
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        gain = max((sets[i] & uncovered).bit_count() for e in iter_members(uncovered) for i in covering[e])
        if len(chosen) + -(-uncovered.bit_count() // gain) >= len(best):
            return
        pivot = min(iter_members(uncovered), key=lambda e: (len(covering[e]), e))
        options = sorted(covering[pivot], key=lambda i: (-(sets[i] & uncovered).bit_count(), i))
        for i in options:
            chosen.append(i)
            search(uncovered & ~sets[i], chosen)
            chosen.pop()

    search(universe, [])
    return tuple(sorted(best))
