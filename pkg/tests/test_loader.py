import networkx as nx
import pytest

from app.core.errors import LoopEdgeError, ParseError
from app.core.graph import Graph
from app.data.families import path, random_gnp
from app.data.loader import (
    LoadConfig,
    dump_graph,
    from_networkx,
    load_graph,
    parse_coords,
    parse_edgelist,
    parse_graph6,
    to_networkx,
    write_edgelist,
    write_graph6,
)


def test_parse_edgelist():
    text = "# a path\nn 4\n0 1\n\n1 2  # middle\n2 3\n1 0\n"
    g = parse_edgelist(text)
    assert g.n == 4
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_parse_edgelist_without_header():
    assert parse_edgelist("0 3\n").n == 4
    assert parse_edgelist("").n == 0
    assert parse_edgelist("n 3\n").edge_count == 0


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1\n2 x\n", 2),
        ("n 2\n0 5\n", 2),
        ("0 1 2\n", 1),
        ("n 3\nn 3\n", 2),
        ("0 -1\n", 1),
    ],
)
def test_parse_edgelist_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edgelist(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_parse_edgelist_rejects_loops():
    with pytest.raises(LoopEdgeError):
        parse_edgelist("0 1\n1 1\n")


def test_write_edgelist():
    assert write_edgelist(path(3)) == "n 3\n0 1\n1 2\n"
    assert parse_edgelist(write_edgelist(Graph.empty(3))) == Graph.empty(3)


def test_graph6_known_strings():
    assert write_graph6(path(2)) == "A_"
    assert write_graph6(Graph.empty(0)) == "?"
    assert parse_graph6(">>graph6<<A_") == path(2)


@pytest.mark.parametrize("seed", range(6))
def test_graph6_matches_networkx(seed):
    g = random_gnp(9, 1, 2, seed)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert write_graph6(g) == expected
    assert parse_graph6(expected) == g


@pytest.mark.parametrize("text", ["A", "A`", "A_x", "", "A_\nA_"])
def test_graph6_errors(text):
    with pytest.raises(ParseError):
        parse_graph6(text)


def test_load_graph_detects_format(tmp_path):
    g6 = tmp_path / "g.g6"
    g6.write_text("Bw\n")
    assert load_graph(g6).edge_count == 3
    el = tmp_path / "g.txt"
    el.write_text("0 1\n")
    assert load_graph(el) == path(2)
    assert load_graph(el, LoadConfig(fmt="edgelist")) == path(2)
    with pytest.raises(ParseError):
        load_graph(tmp_path / "missing.txt")


def test_parse_coords():
    assert parse_coords("0 0\n0,1\n# done\n") == ((0, 0), (0, 1))
    with pytest.raises(ParseError):
        parse_coords("0 a\n")


def test_dump_graph():
    assert dump_graph(path(2), "graph6") == "A_\n"
    with pytest.raises(ParseError):
        dump_graph(path(2), "dot")


def test_networkx_conversion():
    h = nx.Graph([("b", "c"), ("a", "b")])
    assert from_networkx(h) == path(3)
    assert sorted(to_networkx(path(3)).edges()) == [(0, 1), (1, 2)]
    with pytest.raises(ParseError):
        from_networkx(nx.empty_graph(65))


def test_graph6_long_size_prefix():
    g = random_gnp(63, 1, 9, 2)
    text = write_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g
