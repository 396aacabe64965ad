import math

import networkx as nx
import pytest

from surfskew.errors import ParameterError, ParseError
from surfskew.graph import (
    Circulant,
    Complete,
    CompleteBipartite,
    Cube,
    Cycle,
    FamilySpec,
    FoldedCube,
    Graph,
    Octahedron,
    Path,
    components,
    cycle_rank,
    generate,
    girth,
    is_connected,
    parse_graph,
    serialize_graph,
)

FAMILIES = [
    Complete(1), Complete(5), CompleteBipartite(3, 5), Cube(0), Cube(4), FoldedCube(3),
    FoldedCube(6), Octahedron(4), Circulant(12, [1, 3]), Circulant(10, [1, 5]), Cycle(7), Path(4),
]


@pytest.mark.parametrize("spec", FAMILIES, ids=str)
def test_handshake_and_round_trip(spec):
    g = generate(spec)
    assert 2 * g.q == sum(g.degree(v) for v in range(g.p))
    text = serialize_graph(g)
    h = parse_graph(text)
    assert h == g and h.family == spec
    assert serialize_graph(h) == text


def test_cube_basics():
    g = generate(Cube(3))
    assert (g.p, g.q) == (8, 12)
    parts = g.bipartition
    assert parts is not None and parts[0] == frozenset(v for v in range(8) if bin(v).count("1") % 2 == 0)
    assert g.has_edge(0b010, 0b110) and not g.has_edge(0, 3)


@pytest.mark.parametrize("d", range(2, 8))
def test_regularity(d):
    q = generate(Cube(d))
    assert q.p == 2**d and {q.degree(v) for v in range(q.p)} == {d}
    if d >= 3:
        f = generate(FoldedCube(d))
        assert {f.degree(v) for v in range(f.p)} == {d + 1}
        assert (f.bipartition is not None) == (d % 2 == 1)


def test_folded_cube_3_is_k44():
    f = nx.Graph(generate(FoldedCube(3)).edges)
    assert nx.is_isomorphic(f, nx.complete_bipartite_graph(4, 4))


@pytest.mark.parametrize("r", range(2, 7))
def test_octahedron(r):
    g = generate(Octahedron(r))
    assert g.p == 2 * r and {g.degree(v) for v in range(g.p)} == {2 * r - 2}


def test_octahedron_4():
    g = generate(Octahedron(4))
    assert (g.p, g.q) == (8, 24)


def test_circulant_neighbours():
    g = generate(Circulant(12, [1, 3]))
    assert set(g.adj[0]) == {1, 11, 3, 9}
    assert generate(Circulant(10, [1, 5])).q == 15  # the diameter jump is a matching


@pytest.mark.parametrize(
    "spec",
    [("cube", (-1,)), ("circulant", (10, 6)), ("circulant", (10, 3, 3)), ("complete-bipartite", (0, 2)),
     ("circulant", (2, 1)), ("octahedron", (0,))],
)
def test_bad_parameters(spec):
    with pytest.raises(ParameterError):
        generate(FamilySpec(*spec))


def test_unknown_family():
    with pytest.raises(ParameterError):
        FamilySpec.parse("petersen")


def test_girth():
    assert girth(generate(Complete(5))) == 3
    assert girth(generate(FoldedCube(5))) == 4
    assert girth(generate(Path(4))) == math.inf
    assert girth(generate(Cycle(9))) == 9
    for a, b in [(2, 2), (3, 5), (6, 4)]:
        assert girth(generate(CompleteBipartite(a, b))) == 4
    for d in range(2, 7):
        assert girth(generate(Cube(d))) == 4
    pete = nx.petersen_graph()
    assert girth(Graph.from_edges(10, pete.edges)) == 5


def test_cycle_rank():
    assert cycle_rank(generate(Cube(2))) == 1
    assert cycle_rank(generate(Cube(3))) == 5
    # (d-2)2^(d-3) - 2^(d-2) + 1 with d = 8 is the cycle rank of Q_6
    assert cycle_rank(generate(Cube(6))) == 129


def test_components():
    assert is_connected(generate(Complete(1)))
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert components(g) == [[0, 1], [2, 3]]
    q4 = generate(Cube(4))
    fibre = [(0, 1), (1, 3), (3, 2), (0, 2)]
    assert is_connected(q4.without(fibre))


def test_parse_examples():
    g = parse_graph("3 3\n0 1\n1 2\n0 2\n")
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert parse_graph("# header comment\n2 1\n1 0\n# trailing\n").edges == ((0, 1),)


@pytest.mark.parametrize(
    "text,line,needle",
    [
        ("2 1\n0 0\n", 2, "loop"),
        ("2 1\n0 2\n", 2, "range"),
        ("3 2\n0 1\n1 0\n", 3, "duplicate"),
        ("3 2\n0 1\n", 1, "promises"),
        ("3 1\n0 x\n", 2, ""),
        ("", None, "header"),
    ],
)
def test_parse_errors(text, line, needle):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert needle in str(info.value)


def test_relabel_and_without():
    g = generate(Cycle(4))
    h = g.relabel([1, 2, 3, 0])
    assert h.edge_set == g.edge_set
    assert g.without([(1, 0)]).q == 3
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
