import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kpaths.errors import BadLength, CharOutOfRange, MalformedHeader, NonzeroPadding, OrderTooLarge
from kpaths.g6codec import body_length, decode, encode, read_list, write_list
from kpaths.graph import Graph


def nx_g6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


@st.composite
def graphs(draw, max_n=26):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def test_known_strings():
    assert encode(Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])) == "Bw"
    assert decode("EzKg").num_edges() == 9
    assert encode(decode("I~|xxsxMG")) == "I~|xxsxMG"


def test_single_vertex():
    assert encode(Graph(1, (0,))) == "@"
    assert decode("@").n == 1


@given(graphs())
def test_encode_agrees_with_networkx(g):
    assert encode(g) == nx_g6(g)


@settings(max_examples=300)
@given(graphs())
def test_round_trip(g):
    assert decode(encode(g)) == g


def test_round_trip_ten_thousand_random_graphs():
    import random

    rng = random.Random(20240611)
    for _ in range(10_000):
        n = rng.randint(1, 26)
        p = rng.random()
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        s = encode(g)
        assert len(s) == 1 + body_length(n)
        assert decode(s) == g


def test_order_limits():
    with pytest.raises(OrderTooLarge):
        encode(Graph(63, (0,) * 63))
    assert len(encode(Graph(62, (0,) * 62))) == 1 + body_length(62)


@pytest.mark.parametrize(
    "text,err",
    [
        ("", MalformedHeader),
        (">>graph6<<Bw", MalformedHeader),
        ("~?@~", MalformedHeader),
        ("Bww", BadLength),
        ("E", BadLength),
        ("Bx", NonzeroPadding),
        ("B w", CharOutOfRange),
        ("?", MalformedHeader),
    ],
)
def test_decode_rejects(text, err):
    with pytest.raises(err):
        decode(text)


def test_list_round_trip(tmp_path):
    path = tmp_path / "list.txt"
    strings = ["Bw", "EzKg", "EzKW"]
    assert write_list(path, strings) == 3
    assert path.read_text() == "Bw\nEzKg\nEzKW\n"
    assert [encode(g) for g in read_list(path)] == strings
    assert [p.name for p in tmp_path.iterdir()] == ["list.txt"]


def test_list_blank_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("Bw\n\nEzKg\n")
    with pytest.raises(BadLength):
        list(read_list(path))


def test_failed_write_leaves_no_file(tmp_path):
    path = tmp_path / "out.txt"

    def broken():
        yield "Bw"
        raise RuntimeError("boom")

    with pytest.raises(RuntimeError):
        write_list(path, broken())
    assert list(tmp_path.iterdir()) == []
