"""Exact packing chromatic number.

The exact solver runs a sequence of decision searches ``decide_k`` for
k = lower bound, lower bound + 1, ... until one is feasible.  Every infeasible
answer is a complete refutation, so the first feasible k is optimal.

``brute_force_chi`` is an independent oracle for small graphs: it enumerates
every i-packing of the vertex set directly from Floyd-Warshall distances and
shares no code with the search.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    components,
    diameter,
    distance_matrix,
    is_star,
)


class SolverError(ValueError):
    pass


@dataclass(frozen=True)
class PackingColoring:
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)

    def __len__(self):
        return len(self.colors)


@dataclass(frozen=True)
class SolveBudget:
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise SolverError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise SolverError("time_limit must be positive")

    @property
    def unbounded(self) -> bool:
        return self.node_limit is None and self.time_limit is None


UNLIMITED = SolveBudget()


@dataclass
class SolveResult:
    chi: int
    witness: PackingColoring
    exhausted: bool = False
    nodes_expanded: int = 0


class _Meter:
    """Shared node/time accounting for one chi_p call."""

    def __init__(self, budget: SolveBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = (
            time.monotonic() + budget.time_limit if budget.time_limit is not None else None
        )

    def tick(self) -> bool:
        """Count one node; False once the budget is spent."""
        self.nodes += 1
        lim = self.budget.node_limit
        if lim is not None and self.nodes > lim:
            return False
        if self.deadline is not None and (self.nodes & 1023) == 0:
            return time.monotonic() < self.deadline
        return True


class _BudgetExhausted(Exception):
    pass


# ----------------------------------------------------------------- verification

def verify_coloring(g: Graph, c: PackingColoring | Sequence[int], dm=None):
    """List every violating pair ``(u, v, color)`` with u < v; empty means valid."""
    colors = c.colors if isinstance(c, PackingColoring) else tuple(c)
    if len(colors) != g.n:
        raise SolverError(f"coloring has {len(colors)} entries for {g.n} vertices")
    if any(x <= 0 for x in colors):
        raise SolverError("colors must be positive integers")
    bad = []
    if dm is not None:
        dist = dm.dist
        for u in range(g.n):
            cu = colors[u]
            row = dist[u]
            for v in range(u + 1, g.n):
                if colors[v] == cu and row[v] <= cu:
                    bad.append((u, v, cu))
        return bad
    # BFS from each vertex only as deep as its own color
    adj = g.adjacency
    for u in range(g.n):
        cu = colors[u]
        depth = {u: 0}
        frontier = [u]
        for d in range(1, cu + 1):
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if w not in depth:
                        depth[w] = d
                        nxt.append(w)
            frontier = nxt
        bad.extend((u, v, cu) for v in sorted(depth) if v > u and colors[v] == cu)
    return bad


def is_valid_coloring(g: Graph, c, dm=None) -> bool:
    return not verify_coloring(g, c, dm)


# ----------------------------------------------------------------- search order

def search_order(g: Graph) -> list[int]:
    """BFS from a maximum-degree vertex (smallest index on ties)."""
    if g.n == 0:
        return []
    seen = [False] * g.n
    order = []
    while len(order) < g.n:
        rest = [v for v in range(g.n) if not seen[v]]
        root = max(rest, key=lambda v: (g.degree(v), -v))
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


# ----------------------------------------------------------------- bounds

def greedy_upper_bound(g: Graph, dm=None, order=None) -> SolveResult:
    """The better of first-fit in search order and a layered greedy.

    The layered greedy fills color 1, then 2, and so on, each time scanning
    uncolored vertices by ascending degree and keeping those still far enough
    from the class built so far.
    """
    dm = dm or distance_matrix(g)
    order = search_order(g) if order is None else order
    first = _first_fit(g, dm.dist, order)
    layered = _layered(g, dm.dist, order)
    return layered if layered.chi < first.chi else first


def _layered(g: Graph, dist, order) -> SolveResult:
    rank = {v: i for i, v in enumerate(order)}
    scan = sorted(range(g.n), key=lambda v: (g.degree(v), rank[v]))
    colors = [0] * g.n
    left = g.n
    color = 0
    while left:
        color += 1
        members: list[int] = []
        for u in scan:
            if colors[u] == 0 and all(dist[u][w] > color for w in members):
                colors[u] = color
                members.append(u)
                left -= 1
    col = PackingColoring(colors)
    return SolveResult(col.max_color, col)


def _first_fit(g: Graph, dist, order) -> SolveResult:
    colors = [0] * g.n
    done = []
    for u in order:
        row = dist[u]
        used = {colors[w] for w in done if row[w] <= colors[w]}
        c = 1
        while c in used:
            c += 1
        colors[u] = c
        done.append(u)
    col = PackingColoring(colors)
    return SolveResult(col.max_color, col)


def independence_number(g: Graph) -> int:
    """Exact alpha by branching on a vertex of maximum degree."""
    adj = [0] * g.n
    for v in range(g.n):
        for w in g.adjacency[v]:
            adj[v] |= 1 << w

    def alpha(mask: int) -> int:
        if mask == 0:
            return 0
        best_v, best_d = -1, -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = bin(adj[v] & mask).count("1")
            if d > best_d:
                best_v, best_d = v, d
            m ^= low
        if best_d <= 0:
            return bin(mask).count("1")
        v = best_v
        without = alpha(mask & ~(1 << v))
        with_v = 1 + alpha(mask & ~(1 << v) & ~adj[v])
        return max(without, with_v)

    return alpha((1 << g.n) - 1)


ALPHA_LIMIT = 20


def lower_bound(g: Graph) -> int:
    """Cheap lower bound for a connected graph."""
    if g.n == 0:
        return 0
    lb = 1
    if g.m >= 1:
        lb = 2
        if g.n >= 2 and not is_star(g):
            lb = 3
    if g.n <= ALPHA_LIMIT and diameter(g) <= 2:
        # only color 1 may repeat when every distance is at most 2
        lb = max(lb, g.n - independence_number(g) + 1)
    return lb


# ----------------------------------------------------------------- decision search

@dataclass
class Decision:
    status: str  # "feasible" | "infeasible" | "budget_exhausted"
    witness: Optional[PackingColoring] = None
    nodes: int = 0


class _Searcher:
    """Depth-first k-coloring search over a fixed vertex order.

    ``blocked[i][x]`` counts colored vertices of color i within distance i of
    x; a color is open at x while the count is zero.  After each assignment
    the search fails fast when an uncolored vertex has no open color left.

    Two dominance rules prune without losing solutions:
      * a vertex whose neighbors all come earlier and none has color 1 takes
        color 1 (it then constrains nobody);
      * pendant leaves sharing a parent that precedes them are
        interchangeable, so their colors are kept non-decreasing.
    """

    def __init__(self, g: Graph, dm, order: Sequence[int]):
        self.g = g
        self.n = g.n
        self.order = list(order)
        self.dist = dm.dist
        pos = [0] * g.n
        for i, v in enumerate(self.order):
            pos[v] = i
        self.pos = pos
        self.nbrs_before = [all(pos[w] < pos[v] for w in g.adjacency[v]) for v in range(g.n)]
        # previous sibling leaf for the twin rule
        prev_twin = [-1] * g.n
        last_leaf_of: dict[int, int] = {}
        for v in self.order:
            if g.degree(v) == 1:
                p = g.adjacency[v][0]
                if pos[p] < pos[v] and g.degree(p) > 1:
                    prev_twin[v] = last_leaf_of.get(p, -1)
                    last_leaf_of[p] = v
        self.prev_twin = prev_twin
        self._balls: dict[int, list[list[int]]] = {}

    def balls(self, k: int) -> list[list[int]]:
        """balls[r][u] = vertices at distance 1..r from u, for r <= k."""
        out = self._balls.get(k)
        if out is None:
            n, dist = self.n, self.dist
            out = [[[] for _ in range(n)]]
            for r in range(1, k + 1):
                out.append([[w for w in range(n) if 0 < dist[u][w] <= r] for u in range(n)])
            self._balls[k] = out
        return out

    def decide(self, k: int, meter: _Meter) -> Decision:
        n = self.n
        start = meter.nodes
        if n == 0:
            return Decision("feasible", PackingColoring(()), 0)
        balls = self.balls(k)
        order = self.order
        nbrs_before = self.nbrs_before
        prev_twin = self.prev_twin
        blocked = [None] + [[0] * n for _ in range(k)]
        open_count = [k] * n
        color = [0] * n
        colors_range = range(1, k + 1)

        def assign(u: int, c: int) -> bool:
            row = blocked[c]
            ok = True
            for x in balls[c][u]:
                if row[x] == 0:
                    oc = open_count[x] - 1
                    open_count[x] = oc
                    if oc == 0 and color[x] == 0:
                        ok = False
                row[x] += 1
            return ok

        def unassign(u: int, c: int) -> None:
            row = blocked[c]
            for x in balls[c][u]:
                row[x] -= 1
                if row[x] == 0:
                    open_count[x] += 1

        def rec(idx: int) -> bool:
            if idx == n:
                return True
            if not meter.tick():
                raise _BudgetExhausted
            u = order[idx]
            if nbrs_before[u] and blocked[1][u] == 0:
                candidates = (1,)
            else:
                t = prev_twin[u]
                lo = color[t] if t >= 0 else 1
                candidates = range(lo, k + 1) if lo > 1 else colors_range
            for c in candidates:
                if blocked[c][u]:
                    continue
                color[u] = c
                if assign(u, c) and rec(idx + 1):
                    return True
                unassign(u, c)
                color[u] = 0
            return False

        try:
            found = rec(0)
        except _BudgetExhausted:
            return Decision("budget_exhausted", None, meter.nodes - start)
        if found:
            return Decision("feasible", PackingColoring(color), meter.nodes - start)
        return Decision("infeasible", None, meter.nodes - start)


def decide_k(g: Graph, k: int, budget: SolveBudget = UNLIMITED, dm=None) -> Decision:
    """Is there a packing coloring of ``g`` with colors 1..k?"""
    if k < 1:
        raise SolverError("k must be at least 1")
    dm = dm or distance_matrix(g)
    return _Searcher(g, dm, search_order(g)).decide(k, _Meter(budget))


# ----------------------------------------------------------------- exact value

def _solve_connected(g: Graph, meter: _Meter) -> tuple[int, PackingColoring, bool]:
    dm = distance_matrix(g)
    order = search_order(g)
    greedy = greedy_upper_bound(g, dm, order)
    lb = lower_bound(g)
    if lb >= greedy.chi:
        return greedy.chi, greedy.witness, False
    searcher = _Searcher(g, dm, order)
    for k in range(lb, greedy.chi):
        try:
            d = searcher.decide(k, meter)
        except RecursionError:  # pragma: no cover - n beyond the recursion limit
            raise SolverError(f"graph with {g.n} vertices is too deep for the search")
        if d.status == "feasible":
            return k, d.witness, False
        if d.status == "budget_exhausted":
            return greedy.chi, greedy.witness, True
    return greedy.chi, greedy.witness, False


def chi_p(g: Graph, budget: SolveBudget = UNLIMITED) -> SolveResult:
    """Exact packing chromatic number, the max over connected components."""
    if g.n == 0:
        return SolveResult(0, PackingColoring(()), False, 0)
    meter = _Meter(budget)
    colors = [0] * g.n
    chi = 0
    exhausted = False
    for comp, old_ids in components(g):
        value, wit, ex = _solve_connected(comp, meter)
        exhausted = exhausted or ex
        chi = max(chi, value)
        for i, v in enumerate(old_ids):
            colors[v] = wit.colors[i]
    return SolveResult(chi, PackingColoring(colors), exhausted, meter.nodes)


# ----------------------------------------------------------------- brute-force oracle

BRUTE_FORCE_LIMIT = 9


def _floyd_warshall(g: Graph) -> list[list[int]]:
    n = g.n
    inf = UNREACHABLE
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for m in range(n):
        dm = d[m]
        for i in range(n):
            dim = d[i][m]
            if dim == inf:
                continue
            di = d[i]
            for j in range(n):
                if dim + dm[j] < di[j]:
                    di[j] = dim + dm[j]
    return d


def _maximal_packings(d: list[list[int]], n: int, i: int) -> list[int]:
    """Bitmasks of all maximal i-packings, by enumerating every subset."""
    compat = [sum(1 << w for w in range(n) if w != v and d[v][w] > i) for v in range(n)]
    is_packing = bytearray(1 << n)
    is_packing[0] = 1
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        v = low.bit_length() - 1
        is_packing[s] = is_packing[rest] and (rest & ~compat[v]) == 0
    out = []
    for s in range(1, 1 << n):
        if is_packing[s] and not any(
            not s >> v & 1 and is_packing[s | 1 << v] for v in range(n)
        ):
            out.append(s)
    return out


def brute_force_chi(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Exhaustive oracle, refusing graphs above ``limit`` vertices (default 9).

    Every subset of the vertices is tested for being an i-packing (pairwise
    distance > i, from Floyd-Warshall distances).  Colors 1..k suffice iff the
    vertex set is covered by one i-packing per color i <= k; the covers are
    enumerated color by color over all reachable unions.  The witness
    assembled from the cover is re-checked with verify_coloring.
    """
    n = g.n
    if n > limit:
        raise SolverError(f"brute force refuses n={n} > {limit}")
    if n == 0:
        return 0
    d = _floyd_warshall(g)
    full = (1 << n) - 1
    layers: list[dict[int, tuple[int, int]]] = [{0: (0, 0)}]
    for i in range(1, n + 1):
        packings = _maximal_packings(d, n, i)
        nxt: dict[int, tuple[int, int]] = {}
        for mask in layers[-1]:
            for p in packings:
                new = mask | p
                if new not in nxt:
                    nxt[new] = (mask, p)
        layers.append(nxt)
        if full in nxt:
            colors = [0] * n
            mask = full
            for color in range(i, 0, -1):
                prev, p = layers[color][mask]
                for v in range(n):
                    if p >> v & 1 and colors[v] == 0:
                        colors[v] = color
                mask = prev
            if verify_coloring(g, colors):
                raise AssertionError("brute-force witness failed verification")
            return i
    raise AssertionError("unreachable: n colors always suffice")
