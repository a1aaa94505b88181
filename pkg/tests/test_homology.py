import pytest

from app.core.errors import FaceCountOverflowError, InvalidParamsError
from app.core.graph import Graph, members
from app.core.homology import (
    boundary_matrix,
    build_complex,
    check_prime,
    is_prime,
    rank_gf2,
    rank_mod_p,
    reduced_homology,
    _boundary_columns_gf2,
)
from app.data.families import complete, cycle, path, random_gnp
from tests import oracles


def test_complex_of_edgeless_graph_is_a_simplex():
    c = build_complex(Graph.empty(3))
    assert c.f_vector == (1, 3, 3, 1)
    assert c.dimension == 2
    assert reduced_homology(Graph.empty(3)).vanishes


def test_complete_graph_gives_points():
    profile = reduced_homology(complete(4))
    assert profile.get(0) == 3
    assert profile.nonzero() == [0]


@pytest.mark.parametrize(
    "n, k, rank",
    [(4, 0, 1), (5, 1, 1), (6, 1, 2), (7, 1, 1), (8, 2, 1), (9, 2, 2)],
)
def test_cycles(n, k, rank):
    for p in (2, 3):
        profile = reduced_homology(cycle(n), p)
        assert profile.nonzero() == [k]
        assert profile.get(k) == rank


@pytest.mark.parametrize("n", range(1, 10))
def test_paths(n):
    profile = reduced_homology(path(n))
    if n % 3 == 1:
        assert profile.vanishes
    elif n % 3 == 2:
        assert profile.nonzero() == [n // 3]
    else:
        assert profile.nonzero() == [n // 3 - 1]


@pytest.mark.parametrize("seed", range(8))
def test_euler_characteristic(seed):
    g = random_gnp(8, 1, 2, seed)
    c = build_complex(g)
    alternating = sum((-1) ** (j - 1) * f for j, f in enumerate(c.f_vector))
    for p in (2, 5):
        assert reduced_homology(g, p).reduced_euler == alternating


@pytest.mark.parametrize("seed", range(5))
def test_gf2_rank_agrees_with_dense_elimination(seed):
    c = build_complex(random_gnp(7, 1, 3, seed))
    for k in range(c.dimension + 1):
        assert rank_gf2(_boundary_columns_gf2(c, k)) == rank_mod_p(boundary_matrix(c, k, 2), 2)


def test_rank_mod_p():
    m = [[1, 2], [2, 4]]
    assert rank_mod_p(m, 3) == 1
    assert rank_mod_p([[1, 1], [1, 2]], 5) == 2
    assert rank_mod_p([[0, 0]], 7) == 0


def test_primes():
    assert [p for p in range(12) if is_prime(p)] == [2, 3, 5, 7, 11]
    with pytest.raises(InvalidParamsError):
        check_prime(4)
    with pytest.raises(InvalidParamsError):
        reduced_homology(path(3), 9)


def test_face_budget():
    with pytest.raises(FaceCountOverflowError) as info:
        build_complex(Graph.empty(10), face_budget=100)
    assert info.value.budget == 100


def test_faces_are_ordered_by_vertex_list():
    c = build_complex(Graph.empty(4))
    assert [members(f) for f in c.faces(1)] == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    assert c.faces(1).index(0b1001) < c.faces(1).index(0b0110)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("seed", range(6))
def test_boundary_squares_to_zero(p, seed):
    c = build_complex(random_gnp(8, 1, 3, seed))
    for k in range(c.dimension):
        product = boundary_matrix(c, k, p) @ boundary_matrix(c, k + 1, p)
        assert not (product % p).any()


@pytest.mark.parametrize("seed", range(30))
def test_betti_numbers_match_oracle(seed):
    g = random_gnp(7, 1, 2, seed)
    for p in (2, 3):
        assert reduced_homology(g, p).betti == oracles.reduced_betti(g, p)


@pytest.mark.slow
def test_betti_numbers_match_oracle_on_large_corpus():
    for seed in range(500):
        g = random_gnp(1 + seed % 8, 1 + seed % 3, 4, seed)
        for p in (2, 3):
            assert reduced_homology(g, p).betti == oracles.reduced_betti(g, p), (seed, p, g.edges())
