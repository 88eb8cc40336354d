"""Vertex-deletion analysis: per-vertex drops, the gap mu_p, criticality."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError, components, delete_vertex, is_tree, tree_certificate
from .solver import UNLIMITED, SolveBudget, chi_p


@dataclass(frozen=True)
class GapReport:
    chi: int
    per_vertex: tuple[Optional[int], ...]  # chi of G - v, None when not evaluated
    deltas: tuple[Optional[int], ...]
    mu: int
    delta_set: tuple[int, ...]
    argmax: tuple[int, ...]
    critical: bool
    exact: bool
    spine_only: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def _graph_key(g: Graph):
    if is_tree(g):
        return ("tree", tree_certificate(g))
    return ("graph", g.n, tuple(g.edges()))


def forest_chi(g: Graph, budget: SolveBudget = UNLIMITED, cache: Optional[dict] = None):
    """chi_p as the max over components, memoising exact component values.

    Returns ``(chi, exact)``.
    """
    if g.n == 0:
        return 0, True
    if cache is None:
        res = chi_p(g, budget)
        return res.chi, not res.exhausted
    chi, exact = 0, True
    for comp, _ in components(g):
        key = _graph_key(comp)
        value = cache.get(key)
        if value is None:
            res = chi_p(comp, budget)
            value = res.chi
            if res.exhausted:
                exact = False
            else:
                cache[key] = value
        chi = max(chi, value)
    return chi, exact


def gap_report(
    g: Graph,
    budget: SolveBudget = UNLIMITED,
    spine: Optional[Sequence[int]] = None,
    cache: Optional[dict] = None,
) -> GapReport:
    """chi_p(G), chi_p(G - v) for every v, and the gap.

    With ``spine`` given, only spine vertices are deleted (the caterpillar
    shortcut); other entries are left as None.  ``cache`` maps component
    keys to exact values and may be shared across calls.
    """
    if g.n == 0:
        raise GraphError("gap of the empty graph is undefined")
    if cache is None:
        cache = {}
    chi, exact = forest_chi(g, budget, cache)
    targets = sorted(set(spine)) if spine is not None else range(g.n)
    per_vertex: list[Optional[int]] = [None] * g.n
    for v in targets:
        h, _ = delete_vertex(g, v)
        value, ok = forest_chi(h, budget, cache)
        per_vertex[v] = value
        exact = exact and ok
    deltas = tuple(None if p is None else chi - p for p in per_vertex)
    known = [d for d in deltas if d is not None]
    mu = max(known)
    return GapReport(
        chi=chi,
        per_vertex=tuple(per_vertex),
        deltas=deltas,
        mu=mu,
        delta_set=tuple(sorted(set(known))),
        argmax=tuple(v for v, d in enumerate(deltas) if d == mu),
        critical=min(known) >= 1,
        exact=exact,
        spine_only=spine is not None,
    )


def mu_p(g: Graph, budget: SolveBudget = UNLIMITED, cache: Optional[dict] = None) -> int:
    return gap_report(g, budget, cache=cache).mu


def is_vertex_critical(g: Graph, budget: SolveBudget = UNLIMITED) -> bool:
    return gap_report(g, budget).critical
