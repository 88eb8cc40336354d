"""Simple undirected graphs, BFS distances, vertex deletion and components."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

# Larger than any distance and any color a caller could reasonably test against,
# so that cross-component pairs never violate a packing constraint.
UNREACHABLE = 2**31 - 1


class GraphError(ValueError):
    """Malformed graph or out-of-range vertex."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if u <= prev:
                    raise GraphError(f"neighbors of {v} not strictly ascending")
                prev = u
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge {v}-{u} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple[tuple[int, ...], ...]

    def __call__(self, u: int, v: int) -> int:
        return self.dist[u][v]


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs shortest path lengths, one BFS per vertex."""
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph induced by ``keep``; vertex keep[i] becomes i."""
    new_id = {v: i for i, v in enumerate(keep)}
    adj = tuple(
        tuple(sorted(new_id[w] for w in g.adjacency[v] if w in new_id)) for v in keep
    )
    return Graph(len(keep), adj)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[Optional[int], ...]]:
    """Return ``G - v`` and the old->new index map (``None`` at ``v``)."""
    g.check_vertex(v)
    keep = [u for u in range(g.n) if u != v]
    mapping = tuple(None if u == v else (u if u < v else u - 1) for u in range(g.n))
    return induced_subgraph(g, keep), mapping


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components ordered by smallest original vertex.

    Each entry is ``(component, old_ids)`` where ``old_ids[i]`` is the original
    index of the component's vertex ``i``.
    """
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        members.sort()
        if len(members) == g.n:
            out.append((g, tuple(range(g.n))))
        else:
            out.append((induced_subgraph(g, members), tuple(members)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or UNREACHABLE not in bfs_distances(g, 0)


def diameter(g: Graph) -> int:
    """Largest distance; ``UNREACHABLE`` if disconnected, 0 for K_1."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    best = 0
    for s in range(g.n):
        d = max(bfs_distances(g, s))
        if d == UNREACHABLE:
            return UNREACHABLE
        best = max(best, d)
    return best


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_star(g: Graph) -> bool:
    """Connected K_{1,r} with r >= 1 (K_2 counts, K_1 does not)."""
    if g.n < 2 or not is_tree(g):
        return False
    return max(len(a) for a in g.adjacency) == g.n - 1


def _rooted_code(adj, root: int, parent: int) -> str:
    children = sorted(_rooted_code(adj, w, root) for w in adj[root] if w != parent)
    return "(" + "".join(children) + ")"


def tree_centers(g: Graph) -> list[int]:
    degree = [len(a) for a in g.adjacency]
    layer = [v for v in range(g.n) if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def tree_certificate(g: Graph) -> str:
    """Canonical string for a tree: equal iff the trees are isomorphic."""
    if not is_tree(g):
        raise GraphError("tree_certificate needs a tree")
    return min(_rooted_code(g.adjacency, c, -1) for c in tree_centers(g))
