"""Graph construction, edge-list parsing, and basic structure queries."""

from fractions import Fraction

import pytest

from irrlab.graph import (
    EdgeListParseError,
    Graph,
    degree,
    degree_sequence,
    format_edge_list,
    from_edge_list,
    is_connected,
    is_tree,
    min_max_mean_degree,
    parse_edge_list,
)


def test_constructor_normalizes_edges():
    g = Graph(4, [(2, 0), (0, 2), (3, 1), (0, 1)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.neighbors == ((1, 2), (0, 3), (0,), (1,))
    assert g.degrees == (2, 2, 1, 1)


def test_constructor_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(0, [])
    Graph(1, [])  # a single isolated vertex is fine


def test_equality_and_hash():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(2, 1), (1, 0)])
    c = Graph(4, [(0, 1), (1, 2)])
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


def test_from_edge_list_infers_order():
    g = from_edge_list([(0, 4), (1, 2)])
    assert g.n == 5
    assert from_edge_list([(0, 1)], declared_n=6).n == 6
    with pytest.raises(ValueError):
        from_edge_list([(0, 5)], declared_n=3)
    with pytest.raises(ValueError):
        from_edge_list([(-1, 2)])


def test_parse_edge_list_basics():
    text = "# a comment\n\np 5\n0 1\n1 2   # trailing comment\n\n3 4\n"
    g = parse_edge_list(text)
    assert g.n == 5
    assert g.edges == ((0, 1), (1, 2), (3, 4))


def test_parse_edge_list_header_rules():
    # header is only recognized as the first content line
    with pytest.raises(EdgeListParseError) as exc:
        parse_edge_list("0 1\np 4\n")
    assert exc.value.line_no == 2
    with pytest.raises(EdgeListParseError):
        parse_edge_list("p x\n0 1\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("p 4\np 4\n")


@pytest.mark.parametrize(
    "bad,line_no",
    [
        ("0 1\n2\n", 2),
        ("0 1 2\n", 1),
        ("0 one\n", 1),
        ("p 2\n0 2\n", 2),
        ("0 0\n", 1),
    ],
)
def test_parse_edge_list_errors(bad, line_no):
    with pytest.raises(EdgeListParseError) as exc:
        parse_edge_list(bad)
    assert exc.value.line_no == line_no


def test_parse_empty_graph():
    assert parse_edge_list("p 3\n").edges == ()
    with pytest.raises(EdgeListParseError):
        parse_edge_list("")  # no header and no edges: order is undefined


def test_format_roundtrip():
    g = Graph(6, [(0, 1), (2, 5), (1, 4)])
    text = format_edge_list(g)
    assert text.startswith("p 6\n") and text.endswith("\n")
    assert parse_edge_list(text) == g


def test_degree_queries():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert degree(g, 0) == 3 and degree(g, 2) == 1
    assert degree_sequence(g) == (3, 1, 1, 1)
    assert min_max_mean_degree(g) == (1, 3, Fraction(3, 2))


def test_connectivity_and_trees():
    assert is_connected(Graph(1, []))
    assert not is_connected(Graph(2, []))
    assert is_connected(Graph(3, [(0, 1), (1, 2)]))
    assert is_tree(Graph(3, [(0, 1), (1, 2)]))
    assert not is_tree(Graph(3, [(0, 1), (1, 2), (0, 2)]))  # cycle
    assert not is_tree(Graph(4, [(0, 1), (2, 3)]))  # forest, not a tree
    assert is_tree(Graph(1, []))
