import networkx as nx
import pytest

from app.core.errors import InvalidParamsError
from app.core.graph import is_chordal, is_long
from app.data.families import (
    FIGURE1_TREE_EDGES,
    Family,
    FamilySpec,
    complete_bipartite,
    cycle,
    figure1_tree,
    generate,
    lattice_subgraph,
    pendant_path,
    pentagon_chain,
    random_chordal,
    random_gnp,
    random_lattice,
    random_long,
    subdivide_heavy_edges,
)
from app.data.loader import to_networkx


def test_small_families():
    assert cycle(5).edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    k23 = complete_bipartite(2, 3)
    assert k23.n == 5 and k23.edge_count == 6
    assert figure1_tree().edges() == sorted(FIGURE1_TREE_EDGES)


def test_pentagon_chain():
    q2 = pentagon_chain(2)
    assert q2.n == 10
    assert q2.edge_count == 11
    assert q2.has_edge(2, 5)


def test_pendant_path():
    t2 = pendant_path(2)
    assert t2.n == 10
    assert t2.edge_count == 9
    assert t2.has_edge(0, 8) and t2.has_edge(4, 9)


def test_random_gnp_is_deterministic():
    assert random_gnp(9, 1, 3, 7) == random_gnp(9, 1, 3, 7)
    assert random_gnp(6, 0, 1, 1).edge_count == 0
    assert random_gnp(6, 1, 1, 1).edge_count == 15


@pytest.mark.parametrize("seed", range(10))
def test_random_chordal_is_chordal(seed):
    g = random_chordal(10, seed)
    assert is_chordal(g) and nx.is_chordal(to_networkx(g))


@pytest.mark.parametrize("seed", range(10))
def test_random_long_is_long(seed):
    assert is_long(random_long(8, 1, 2, seed))
    assert is_long(subdivide_heavy_edges(random_chordal(8, seed)))


def test_random_lattice_uses_unit_steps():
    g = random_lattice(10, 4, 2, 3)
    assert g.n == 10
    assert len(set(g.coords)) == 10
    for u, v in g.edges():
        assert sum(abs(a - b) for a, b in zip(g.coords[u], g.coords[v])) == 1


def test_lattice_subgraph():
    g = lattice_subgraph(((0, 0), (0, 1), (1, 1), (2, 2)))
    assert g.edges() == [(0, 1), (1, 2)]
    with pytest.raises(InvalidParamsError):
        lattice_subgraph(((0, 0), (0, 0)))
    with pytest.raises(InvalidParamsError):
        lattice_subgraph(((0, 0), (0, 0, 1)))


def test_family_parse():
    assert Family.parse("complete-bipartite") is Family.COMPLETE_BIPARTITE
    assert Family.parse("gnp") is Family.RANDOM_GNP
    with pytest.raises(InvalidParamsError):
        Family.parse("hypercube")


def test_generate():
    spec = FamilySpec(Family.RANDOM_GNP, n=6, p_num=1, p_den=3, seed=4)
    assert generate(spec) == random_gnp(6, 1, 3, 4)
    assert spec.label == "random_gnp n=6 p=1/3 seed=4"
    assert generate(FamilySpec(Family.COMPLETE_BIPARTITE, n=2, m=3)).n == 5
    assert generate(FamilySpec(Family.EMPTY, n=4)).edge_count == 0
    with pytest.raises(InvalidParamsError):
        generate(FamilySpec(Family.PATH, n=0))
    with pytest.raises(InvalidParamsError):
        generate(FamilySpec(Family.LATTICE_SUBGRAPH))
