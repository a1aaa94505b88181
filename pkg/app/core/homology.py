"""Independence complexes and their reduced homology ranks over GF(p)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.core.config import DEFAULT_FACE_BUDGET
from app.core.errors import FaceCountOverflowError, InvalidParamsError
from app.core.graph import Graph, VertexSet, independence_number, isolated_vertices, members


@dataclass(frozen=True)
class IndependenceComplex:
    """ind(G); ``faces_by_dim[k + 1]`` lists the k-dimensional faces.

    Faces of one dimension are ordered lexicographically by their ascending
    vertex lists (so [0, 3] precedes [1, 2]), not by bitmask value. Boundary
    matrix rows and columns follow this order.
    """
    ambient: Graph
    faces_by_dim: tuple[tuple[VertexSet, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.faces_by_dim) - 2

    def faces(self, k: int) -> tuple[VertexSet, ...]:
        if k < -1 or k > self.dimension:
            return ()
        return self.faces_by_dim[k + 1]

    @property
    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_dim) with f_{-1} = 1."""
        return tuple(len(fs) for fs in self.faces_by_dim)

    @property
    def face_count(self) -> int:
        return sum(self.f_vector)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers; ``betti[k + 1]`` is the rank of H~_k for -1 <= k <= dim."""
    p: int
    betti: tuple[int, ...]

    def get(self, k: int) -> int:
        if k < -1 or k + 1 >= len(self.betti):
            return 0
        return self.betti[k + 1]

    def nonzero(self) -> list[int]:
        return [k - 1 for k, b in enumerate(self.betti) if b]

    def first_nonzero(self) -> Optional[int]:
        nz = self.nonzero()
        return nz[0] if nz else None

    @property
    def vanishes(self) -> bool:
        return not any(self.betti)

    @property
    def reduced_euler(self) -> int:
        return sum((-1) ** (k - 1) * b for k, b in enumerate(self.betti))

    def as_dict(self) -> dict[str, int]:
        return {str(k - 1): b for k, b in enumerate(self.betti)}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise InvalidParamsError(f"characteristic must be prime, got {p}")
    return p


def is_cone(g: Graph) -> bool:
    """An isolated vertex is an apex of every facet, so all reduced homology vanishes."""
    return isolated_vertices(g) != 0


def build_complex(g: Graph, face_budget: int = DEFAULT_FACE_BUDGET) -> IndependenceComplex:
    """Enumerate every independent set by extending faces with larger admissible vertices.

    Each dimension is sorted by ascending vertex list; see ``IndependenceComplex``.
    """
    by_size: list[list[VertexSet]] = [[0]]
    count = 1
    # stack entries: (face, vertices that may still be added, size of face)
    stack: list[tuple[VertexSet, VertexSet, int]] = [(0, g.vertices, 0)]
    while stack:
        face, allowed, k = stack.pop()
        rest = allowed
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            new_face = face | low
            count += 1
            if count > face_budget:
                raise FaceCountOverflowError(face_budget)
            if len(by_size) <= k + 1:
                by_size.append([])
            by_size[k + 1].append(new_face)
            stack.append((new_face, rest & ~g.adj[v], k + 1))
    faces = tuple(tuple(sorted(fs, key=members)) for fs in by_size)
    return IndependenceComplex(g, faces)


def boundary_matrix(c: IndependenceComplex, k: int, p: int) -> np.ndarray:
    """Matrix of the boundary map from k-chains to (k-1)-chains, entries reduced mod p.

    The column of a face with sorted vertices v_0 < ... < v_k carries
    (-1)^j in the row of the face with v_j removed. k = 0 is the augmentation.
    """
    rows = c.faces(k - 1)
    cols = c.faces(k)
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if not rows or not cols:
        return out
    index = {f: i for i, f in enumerate(rows)}
    for j, face in enumerate(cols):
        for pos, v in enumerate(members(face)):
            out[index[face & ~(1 << v)], j] = 1 if pos % 2 == 0 else p - 1
    return out % p


def _boundary_columns_gf2(c: IndependenceComplex, k: int) -> list[int]:
    """Boundary columns over GF(2) packed as row bitmasks."""
    index = {f: i for i, f in enumerate(c.faces(k - 1))}
    cols = []
    for face in c.faces(k):
        col = 0
        rest = face
        while rest:
            low = rest & -rest
            rest ^= low
            col |= 1 << index[face ^ low]
        cols.append(col)
    return cols


def rank_gf2(columns: list[int]) -> int:
    """Rank of bit-packed vectors over GF(2) via an XOR basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for vec in columns:
        while vec:
            top = vec.bit_length() - 1
            if top in basis:
                vec ^= basis[top]
            else:
                basis[top] = vec
                break
    return len(basis)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over GF(p) by dense Gaussian elimination."""
    m = np.array(matrix, dtype=np.int64) % p
    if m.size == 0:
        return 0
    n_rows, n_cols = m.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = (m[rank] * inv) % p
        below = np.nonzero(m[rank + 1:, col])[0] + rank + 1
        if below.size:
            factors = m[below, col][:, None]
            m[below] = (m[below] - factors * m[rank]) % p
        rank += 1
    return rank


def boundary_rank(c: IndependenceComplex, k: int, p: int) -> int:
    if k < 0 or k > c.dimension:
        return 0
    if p == 2:
        return rank_gf2(_boundary_columns_gf2(c, k))
    return rank_mod_p(boundary_matrix(c, k, p), p)


def betti_numbers(c: IndependenceComplex, p: int = 2) -> HomologyProfile:
    """beta~_k = nullity(d_k) - rank(d_{k+1}) over GF(p) for -1 <= k <= dim."""
    check_prime(p)
    ranks = [boundary_rank(c, k, p) for k in range(c.dimension + 2)]
    ranks.append(0)
    betti = []
    for k in range(-1, c.dimension + 1):
        f_k = len(c.faces(k))
        rank_out = ranks[k] if k >= 0 else 0
        betti.append(f_k - rank_out - ranks[k + 1])
    return HomologyProfile(p, tuple(betti))


def reduced_homology(g: Graph, p: int = 2, face_budget: int = DEFAULT_FACE_BUDGET) -> HomologyProfile:
    """Betti profile of ind(G), short-circuiting cones to the zero profile."""
    if is_cone(g):
        dim = independence_number(g) - 1
        return HomologyProfile(check_prime(p), (0,) * (dim + 2))
    return betti_numbers(build_complex(g, face_budget), p)
