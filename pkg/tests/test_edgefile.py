import random

import pytest

from kegraphs.edgefile import (
    GraphFormatError,
    format_graph,
    parse_graph,
    read_graph,
    write_graph,
)
from kegraphs.constructions import random_graph


def test_round_trip_is_bit_exact():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(0, 10)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        text = format_graph(g)
        assert parse_graph(text) == g
        assert format_graph(parse_graph(text)) == text


def test_comments_and_blank_lines_are_skipped():
    g = parse_graph("c hello\n\np 3 1\nc mid\ne 0 2\n")
    assert g.n == 3 and g.edges == {(0, 2)}


def test_edges_are_written_sorted():
    text = format_graph(random_graph(8, 0.5, 1))
    lines = text.splitlines()
    edge_lines = [tuple(map(int, l.split()[1:])) for l in lines[1:]]
    assert edge_lines == sorted(edge_lines)


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("e 0 1\np 2 1\n", 1),          # edge before header
        ("p 2\n", 1),                   # short header
        ("p 2 x\n", 1),                 # non-integer count
        ("p 2 1\np 2 1\n", 2),          # duplicate header
        ("p 2 1\ne 0 0\n", 2),          # self-loop
        ("p 2 1\ne 0 5\n", 2),          # out of range
        ("p 2 2\ne 0 1\ne 1 0\n", 3),   # duplicate edge
        ("p 2 1\nq 0 1\n", 2),          # unknown line type
        ("p 2 1\ne 0 one\n", 2),        # non-integer endpoint
    ],
)
def test_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert err.value.line_no == line_no


def test_edge_count_mismatch():
    with pytest.raises(GraphFormatError):
        parse_graph("p 3 2\ne 0 1\n")


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("c only a comment\n")


def test_file_round_trip(tmp_path):
    g = random_graph(7, 0.4, 9)
    target = tmp_path / "g.gr"
    write_graph(target, g)
    assert read_graph(target) == g
