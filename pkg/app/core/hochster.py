"""pd, reg and big height of S/I(G) through Hochster's formula.

H~_k(ind(G[W])) != 0 contributes |W| - k - 1 to the projective dimension and
k + 1 to the regularity; both are maxima over all nonempty W.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from app.core.config import SolverConfig
from app.core.errors import FaceCountOverflowError, InfeasibleSizeError
from app.core.graph import Graph, VertexSet, induced_subgraph, iter_members, strip_isolated
from app.core.domination import idom
from app.core.homology import betti_numbers, build_complex, check_prime

logger = logging.getLogger(__name__)

_CHUNK = 512


@dataclass(frozen=True)
class Witness:
    subset: VertexSet
    k: int


@dataclass(frozen=True)
class HochsterResult:
    p: int
    pd: int
    reg: int
    bh: int
    pd_witness: Optional[Witness] = None
    reg_witness: Optional[Witness] = None


def subsets_in_order(n: int) -> Iterator[VertexSet]:
    """Nonempty subsets by increasing size, lexicographic within a size."""
    for r in range(1, n + 1):
        for combo in combinations(range(n), r):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


def has_isolated_in(g: Graph, w: VertexSet) -> bool:
    return any(g.adj[v] & w == 0 for v in iter_members(w))


def _scan(g: Graph, p: int, face_budget: int, chunk: list[tuple[int, VertexSet]]) -> list[tuple[int, VertexSet, int, int]]:
    """(position, W, smallest nonzero k, largest nonzero k) for every W with homology."""
    hits = []
    for position, w in chunk:
        if has_isolated_in(g, w):
            continue
        sub = induced_subgraph(g, w).graph
        try:
            profile = betti_numbers(build_complex(sub, face_budget), p)
        except FaceCountOverflowError as exc:
            raise FaceCountOverflowError(exc.budget, w) from None
        nz = profile.nonzero()
        if nz:
            hits.append((position, w, nz[0], nz[-1]))
    return hits


def _scan_job(args: tuple[Graph, int, int, list[tuple[int, VertexSet]]]) -> list[tuple[int, VertexSet, int, int]]:
    return _scan(*args)


def pd_reg(g: Graph, p: int = 2, config: Optional[SolverConfig] = None) -> HochsterResult:
    """Exact pd(G) and reg(G) at characteristic ``p`` with reproducible witnesses."""
    config = config or SolverConfig()
    check_prime(p)
    if g.n > config.pd_cap and not config.force:
        raise InfeasibleSizeError(
            f"{g.n} vertices exceeds the Hochster cap of {config.pd_cap}; use --force to override"
        )
    if g.n > config.soft_warn_n:
        logger.warning("Hochster enumeration over 2^%d subsets; expect a long run", g.n)

    work = list(enumerate(subsets_in_order(g.n)))
    if config.jobs > 1 and len(work) > _CHUNK:
        chunks = [work[i:i + _CHUNK] for i in range(0, len(work), _CHUNK)]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            parts = pool.map(_scan_job, [(g, p, config.face_budget, c) for c in chunks])
            hits = [h for part in parts for h in part]
    else:
        hits = _scan(g, p, config.face_budget, work)

    # reduce in enumeration order so the schedule never changes the witnesses
    hits.sort(key=lambda h: h[0])
    pd, reg = 0, 0
    pd_witness: Optional[Witness] = None
    reg_witness: Optional[Witness] = None
    for _, w, k_low, k_high in hits:
        size = w.bit_count()
        if size - k_low - 1 > pd:
            pd, pd_witness = size - k_low - 1, Witness(w, k_low)
        if k_high + 1 > reg:
            reg, reg_witness = k_high + 1, Witness(w, k_high)
    logger.debug("pd=%d reg=%d over %d subsets with homology", pd, reg, len(hits))
    return HochsterResult(p, pd, reg, big_height(g), pd_witness, reg_witness)


def projective_dimension(g: Graph, p: int = 2, config: Optional[SolverConfig] = None) -> int:
    return pd_reg(g, p, config).pd


def verify_witness(g: Graph, witness: Witness, p: int) -> bool:
    """Recompute one homology group and confirm it is nonzero."""
    sub = induced_subgraph(g, witness.subset).graph
    return betti_numbers(build_complex(sub), p).get(witness.k) > 0


def big_height(g: Graph) -> int:
    """Largest minimal vertex cover: |V(G-bar)| - i(G-bar)."""
    core = strip_isolated(g)
    return core.n - idom(core).value
