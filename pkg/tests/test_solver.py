import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from packgap.families import (
    CaterpillarSpec,
    gen_caterpillar,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_star,
)
from packgap.graph import Graph, disjoint_union, distance_matrix
from packgap.solver import (
    PackingColoring,
    SolveBudget,
    SolverError,
    brute_force_chi,
    chi_p,
    decide_k,
    greedy_upper_bound,
    independence_number,
    lower_bound,
    verify_coloring,
)

from conftest import from_nx, to_nx


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(u, v), max(u, v)) for u, v in extra if u != v}
    return Graph.from_edges(n, sorted(edges))


def test_verify_reports_violations():
    p4 = gen_path(4).graph
    assert verify_coloring(p4, (1, 2, 1, 3)) == []
    assert verify_coloring(p4, (3, 1, 2, 3)) == [(0, 3, 3)]
    assert verify_coloring(p4, (1, 1, 2, 3)) == [(0, 1, 1)]
    with pytest.raises(SolverError):
        verify_coloring(p4, (1, 2, 1))
    with pytest.raises(SolverError):
        verify_coloring(p4, (0, 2, 1, 3))


@given(connected_graphs(max_n=9), st.data())
@settings(max_examples=80, deadline=None)
def test_verify_with_and_without_matrix_agree(g, data):
    colors = data.draw(st.lists(st.integers(1, 4), min_size=g.n, max_size=g.n))
    assert verify_coloring(g, colors) == verify_coloring(g, colors, distance_matrix(g))


def test_small_values():
    assert chi_p(Graph.empty(0)).chi == 0
    assert chi_p(Graph.empty(3)).chi == 1
    assert chi_p(gen_complete(5).graph).chi == 5
    assert chi_p(gen_cycle(7).graph).chi == 4
    assert chi_p(gen_cycle(8).graph).chi == 3
    assert chi_p(gen_star(6).graph).chi == 2


def test_brute_force_small_values_and_limit():
    assert brute_force_chi(gen_path(4).graph) == 3
    assert brute_force_chi(gen_cycle(5).graph) == 4
    assert brute_force_chi(Graph.empty(0)) == 0
    with pytest.raises(SolverError):
        brute_force_chi(gen_path(10).graph)
    assert brute_force_chi(gen_path(10).graph, limit=10) == 3


def test_solver_matches_brute_force_on_atlas(atlas_connected):
    for g in atlas_connected:
        res = chi_p(g)
        assert res.chi == brute_force_chi(g)
        assert verify_coloring(g, res.witness) == []
        assert res.witness.max_color == res.chi


@given(connected_graphs(min_n=5, max_n=9))
@settings(max_examples=100, deadline=None)
def test_solver_matches_brute_force_random(g):
    assert chi_p(g).chi == brute_force_chi(g)


@given(connected_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_bounds_bracket_the_exact_value(g):
    chi = chi_p(g).chi
    greedy = greedy_upper_bound(g)
    assert lower_bound(g) <= chi <= greedy.chi
    assert verify_coloring(g, greedy.witness) == []


@given(connected_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_decide_is_monotone_in_k(g):
    chi = chi_p(g).chi
    if chi > 1:
        assert decide_k(g, chi - 1).status == "infeasible"
    d = decide_k(g, chi)
    assert d.status == "feasible"
    assert verify_coloring(g, d.witness) == [] and d.witness.max_color <= chi


def test_independence_number_matches_networkx(atlas_connected):
    for g in atlas_connected[::7]:
        comp = nx.complement(to_nx(g))
        ref = max(len(c) for c in nx.find_cliques(comp))
        assert independence_number(g) == ref


def test_disjoint_union_is_max():
    rng = random.Random(3)
    for _ in range(30):
        a = from_nx(nx.gnp_random_graph(rng.randint(1, 5), 0.5, seed=rng.randrange(10**6)))
        b = from_nx(nx.gnp_random_graph(rng.randint(1, 4), 0.5, seed=rng.randrange(10**6)))
        u = disjoint_union(a, b)
        assert brute_force_chi(u) == max(brute_force_chi(a), brute_force_chi(b)) == chi_p(u).chi


def test_solver_is_deterministic():
    g = gen_caterpillar(CaterpillarSpec((2, 3, 1, 0, 2, 4))).graph
    first = chi_p(g)
    again = chi_p(g)
    assert first.chi == again.chi
    assert first.witness == again.witness
    assert first.nodes_expanded == again.nodes_expanded


def test_budget_truncation_returns_valid_upper_bound():
    g = gen_caterpillar(CaterpillarSpec((6,) * 35)).graph
    res = chi_p(g, SolveBudget(node_limit=50))
    assert res.exhausted
    assert verify_coloring(g, res.witness) == []
    assert res.chi >= 7 and res.witness.max_color == res.chi


def test_time_budget_is_respected():
    g = gen_caterpillar(CaterpillarSpec((6,) * 35)).graph
    res = chi_p(g, SolveBudget(time_limit=0.01))
    assert res.exhausted or res.chi == 7


def test_budget_validation():
    with pytest.raises(SolverError):
        SolveBudget(node_limit=0)
    with pytest.raises(SolverError):
        SolveBudget(time_limit=-1)
    with pytest.raises(SolverError):
        decide_k(gen_path(3).graph, 0)


def test_caterpillar_threshold_for_seven_colors():
    assert chi_p(gen_caterpillar(CaterpillarSpec((6,) * 34)).graph).chi == 6
    res = chi_p(gen_caterpillar(CaterpillarSpec((6,) * 35)).graph)
    assert res.chi == 7 and not res.exhausted


def test_packing_coloring_type():
    c = PackingColoring([1, 2, 3])
    assert c.colors == (1, 2, 3) and c.max_color == 3 and len(c) == 3
