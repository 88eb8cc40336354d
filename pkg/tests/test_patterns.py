import json
import random

import pytest

from packgap.families import (
    CaterpillarSpec,
    SpiderSpec,
    corona_k1,
    gen_caterpillar,
    gen_cycle,
    gen_path,
    gen_spider,
)
from packgap.gap import gap_report
from packgap.graph import GraphError
from packgap.patterns import (
    CORONA_SPINE_PATTERN,
    FIGURE3,
    color_caterpillar_via_corona,
    color_corona_caterpillar,
    color_path_pattern,
    color_spider,
    figure3_fixture,
    regenerate_fixtures,
)
from packgap.solver import chi_p, verify_coloring


def test_path_pattern_small():
    assert color_path_pattern(6).colors == (1, 2, 1, 3, 1, 2)
    assert color_path_pattern(1).claimed_max == 1
    with pytest.raises(GraphError):
        color_path_pattern(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 17, 64])
def test_path_pattern_valid_and_optimal(n):
    pc = color_path_pattern(n)
    g = gen_path(n).graph
    assert verify_coloring(g, pc.colors) == []
    assert pc.max_color == pc.claimed_max == chi_p(g).chi


def test_spider_pattern():
    spec = SpiderSpec((5, 3, 1))
    pc = color_spider(spec)
    assert pc.colors[0] == 3
    assert pc.colors[1:6] == (1, 2, 1, 3, 1)
    assert verify_coloring(gen_spider(spec).graph, pc.colors) == []


def test_corona_pattern_structure():
    base = gen_caterpillar(CaterpillarSpec((1, 0, 2, 1)))
    inst = corona_k1(base)
    pc = color_corona_caterpillar(inst)
    for j, v in enumerate(inst.spine):
        assert pc.colors[v] == CORONA_SPINE_PATTERN[j % 12]
    n = base.graph.n
    # the pendant of a spine vertex is 1; its leaves' pendants get 2 (or 3 next to spine color 2)
    assert all(pc.colors[n + v] == 1 for v in inst.spine)
    assert verify_coloring(inst.graph, pc.colors) == []
    assert chi_p(inst.graph).chi <= pc.max_color <= 7


def test_corona_pattern_never_puts_2_and_3_on_adjacent_spine_vertices():
    pat = CORONA_SPINE_PATTERN + CORONA_SPINE_PATTERN[:1]
    assert all({a, b} != {2, 3} for a, b in zip(pat, pat[1:]))


def test_corona_pattern_random_long_spines():
    rng = random.Random(11)
    for _ in range(10):
        ell = rng.randint(1, 120)
        inst = corona_k1(gen_caterpillar(CaterpillarSpec(tuple(rng.randint(0, 4) for _ in range(ell)))))
        pc = color_corona_caterpillar(inst)
        assert verify_coloring(inst.graph, pc.colors) == [] and pc.max_color <= 7


def test_corona_pattern_rejects_other_graphs():
    with pytest.raises(GraphError):
        color_corona_caterpillar(gen_caterpillar(CaterpillarSpec((1, 1))))
    with pytest.raises(GraphError):
        color_corona_caterpillar(corona_k1(gen_cycle(5)))


def test_caterpillar_via_corona_restriction():
    spec = CaterpillarSpec((3, 1, 0, 2, 2))
    pc = color_caterpillar_via_corona(spec)
    assert verify_coloring(gen_caterpillar(spec).graph, pc.colors) == []


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_fixtures_realise_chi_k_gap_1(k):
    fx = figure3_fixture(k)[0]
    rep = gap_report(fx.instance.graph)
    assert (fx.claimed_chi, fx.claimed_gap) == (k, 1)
    assert rep.chi == k and rep.mu == 1
    assert all(rep.deltas[v] == 1 for v in fx.critical_vertices)
    assert fx.instance.params[0].spine_length == FIGURE3[k][0]


def test_k7_fixture_shape_and_certificate():
    fx = figure3_fixture(7)[0]
    g = fx.instance.graph
    assert g.n == 245 and fx.instance.params[0].spine_length == 35
    pc = color_caterpillar_via_corona(fx.instance.params[0])
    assert verify_coloring(g, pc.colors) == [] and pc.max_color <= 7


def test_fixture_errors():
    with pytest.raises(GraphError):
        figure3_fixture(8)


def test_regenerated_fixtures_match_committed(tmp_path):
    regenerate_fixtures(tmp_path, ks=(3, 4, 5))
    for k in (3, 4, 5):
        fresh = figure3_fixture(k, root=tmp_path)[0]
        committed = figure3_fixture(k)[0]
        assert fresh.instance.graph == committed.instance.graph
        meta = json.loads((tmp_path / f"k{k}.gr.json").read_text())
        assert meta["claimed_chi"] == k and meta["bundle_size"] >= 1


def test_fixture_graph_metadata_mismatch_detected(tmp_path):
    regenerate_fixtures(tmp_path, ks=(4,))
    meta = json.loads((tmp_path / "k4.gr.json").read_text())
    meta["params"][0]["leaf_counts"][0] += 1
    (tmp_path / "k4.gr.json").write_text(json.dumps(meta))
    with pytest.raises(GraphError):
        figure3_fixture(4, root=tmp_path)
