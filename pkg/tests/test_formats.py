import json

import pytest
from hypothesis import given, settings

from packgap.families import CaterpillarSpec, corona_k1, gen_caterpillar, gen_cycle
from packgap.formats import (
    ParseError,
    format_coloring,
    format_graph,
    parse_coloring,
    parse_graph,
    read_graph,
    write_instance,
)

from test_graph import graphs


@given(graphs(max_n=12))
@settings(max_examples=80, deadline=None)
def test_graph_round_trip(g):
    text = format_graph(g, ("a comment",))
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text), ("a comment",)) == text


def test_format_is_one_indexed():
    text = format_graph(gen_cycle(3).graph)
    assert text.splitlines() == ["p pcg 3 3", "e 1 2", "e 1 3", "e 2 3"]


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\n",
        "p pcg 2 1\n",
        "p pcg 2 1\ne 1 3\n",
        "p pcg 2 1\ne 1 1\n",
        "p pcg 2 2\ne 1 2\ne 2 1\n",
        "p pcg x 1\n",
        "p pcg 2 1\nq 1 2\n",
        "p pcg 2 1\np pcg 2 1\ne 1 2\n",
        "",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_comments_and_blank_lines_ignored():
    assert parse_graph("c hello\n\np pcg 2 1\nc mid\ne 2 1\n").edges() == [(0, 1)]


def test_coloring_round_trip_and_errors():
    assert parse_coloring(format_coloring((1, 2, 1, 3)), 4) == (1, 2, 1, 3)
    assert parse_coloring("2 2\n1 1\n", 2) == (1, 2)
    for bad in ["1 1\n", "1 1\n1 2\n2 1\n", "1 0\n2 1\n", "3 1\n1 1\n2 1\n", "1 x\n2 1\n"]:
        with pytest.raises(ParseError):
            parse_coloring(bad, 2)


def test_write_instance_metadata(tmp_path):
    inst = corona_k1(gen_caterpillar(CaterpillarSpec((1, 1))))
    path = write_instance(tmp_path / "c.gr", inst)
    assert read_graph(path) == inst.graph
    meta = json.loads((tmp_path / "c.gr.json").read_text())
    assert meta["family"] == "corona" and meta["n"] == 8
    assert meta["spine"] == [1, 2]
    assert meta["c_T"] == 0


def test_write_instance_is_deterministic(tmp_path):
    inst = gen_caterpillar(CaterpillarSpec((2, 0, 3)))
    write_instance(tmp_path / "a.gr", inst)
    write_instance(tmp_path / "b.gr", inst)
    assert (tmp_path / "a.gr").read_bytes() == (tmp_path / "b.gr").read_bytes()
    assert (tmp_path / "a.gr.json").read_bytes() == (tmp_path / "b.gr.json").read_bytes()
