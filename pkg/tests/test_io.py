import random
import warnings

import networkx as nx
import pytest
from hypothesis import given

from cochromatic.graph import Graph, complete, cycle, empty, sample_gnp
from cochromatic.io import (
    FormatError, iter_graph6_lines, parse_dimacs, parse_graph6, read_graph, write_dimacs, write_graph6,
)
from conftest import DATA
from strategies import graphs


def test_graph6_single_vertex():
    assert parse_graph6(b"@") == empty(1)
    assert write_graph6(empty(1)) == b"@"
    assert write_graph6(empty(0)) == b"?"


def test_graph6_k2_hand_packed():
    # header 2+63 = 'A'; single bit 1 padded to 100000b = 32, +63 = '_'
    assert write_graph6(complete(2)) == b"A_"
    assert parse_graph6(b"A_") == complete(2)


def test_graph6_header_and_whitespace():
    assert parse_graph6(b">>graph6<<A_\n") == complete(2)
    assert parse_graph6("A_") == complete(2)


@pytest.mark.parametrize("n", [5, 40, 62, 63, 70, 130])
def test_graph6_matches_networkx(n):
    g = sample_gnp(n, "1/2", n)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(nxg, header=False).strip()
    assert write_graph6(g) == expected
    assert parse_graph6(expected) == g


@pytest.mark.parametrize("name", ["triangle_free_le9.g6", "k4_free_le8.g6", "all_2_to_7.g6"])
def test_graph6_external_corpus_round_trip(name):
    lines = (DATA / name).read_bytes().split()
    for line in lines:
        g = parse_graph6(line)
        assert write_graph6(g) == line
        nxg = nx.from_graph6_bytes(line)
        assert sorted(tuple(sorted(e)) for e in nxg.edges()) == g.edges()


def test_graph6_errors_carry_offsets():
    with pytest.raises(FormatError) as exc:
        parse_graph6(b"C\x01x")
    assert exc.value.offset == 1
    with pytest.raises(FormatError, match="truncated bit stream") as exc:
        parse_graph6(b"D?")
    assert exc.value.offset == 2
    with pytest.raises(FormatError, match="extended header"):
        parse_graph6(b"~??")
    with pytest.raises(FormatError, match="trailing"):
        parse_graph6(b"A__")
    with pytest.raises(FormatError):
        parse_graph6(b"")


def test_graph6_stream_reports_line_numbers():
    out = list(iter_graph6_lines([b"A_", b"", b"D?", b"@"]))
    assert [ln for ln, _ in out] == [1, 3, 4]
    assert isinstance(out[1][1], FormatError)
    assert out[2][1] == empty(1)


@given(graphs(max_n=30))
def test_round_trips(g):
    assert parse_graph6(write_graph6(g)) == g
    assert parse_dimacs(write_dimacs(g)) == g


def test_round_trip_random_corpus_byte_exact():
    rng = random.Random(13)
    for _ in range(1000):
        n = rng.randint(0, 30)
        g = sample_gnp(n, rng.choice(["1/2", "1/5", "4/5"]), rng.getrandbits(64))
        s = write_graph6(g)
        assert write_graph6(parse_graph6(s)) == s
        d = write_dimacs(g)
        assert write_dimacs(parse_dimacs(d)) == d


def test_dimacs_parse():
    g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete(3)


def test_dimacs_duplicates_collapse_with_warning():
    with pytest.warns(UserWarning, match="declares 4 edges"):
        g = parse_dimacs("p edge 3 4\ne 1 2\ne 2 1\ne 2 3\ne 1 3\n")
    assert g == complete(3)


def test_dimacs_errors():
    with pytest.raises(FormatError, match="out of range") as exc:
        parse_dimacs("p edge 3 1\ne 4 1\n")
    assert exc.value.offset == 2
    with pytest.raises(FormatError, match="missing"):
        parse_dimacs("c nothing\n")
    with pytest.raises(FormatError, match="before problem"):
        parse_dimacs("e 1 2\np edge 2 1\n")


def test_dimacs_round_trip_gnp():
    g = sample_gnp(20, "1/2", 99)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert parse_dimacs(write_dimacs(g)) == g


def test_read_graph_sniffs_format():
    c5 = cycle(5)
    assert read_graph(write_dimacs(c5).encode()) == c5
    assert read_graph(write_graph6(c5) + b"\n") == c5
    with pytest.raises(FormatError):
        read_graph(b"A_\nA_\n", "graph6")
