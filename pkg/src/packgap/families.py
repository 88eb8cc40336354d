"""Graph family generators, canonical enumeration and closed-form values.

Vertex numbering is deterministic for every generator so that files written by
the CLI and reports produced by sweeps are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Iterator, Optional

from .graph import Graph, GraphError, distance_matrix, is_tree, tree_certificate


@dataclass(frozen=True)
class CaterpillarSpec:
    """Leaf counts ``a_1..a_l`` along a spine of length ``l``."""

    leaf_counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leaf_counts", tuple(int(a) for a in self.leaf_counts))
        if not self.leaf_counts:
            raise GraphError("caterpillar needs a spine of length >= 1")
        if any(a < 0 for a in self.leaf_counts):
            raise GraphError("leaf counts must be non-negative")

    @property
    def spine_length(self) -> int:
        return len(self.leaf_counts)

    @property
    def order(self) -> int:
        return len(self.leaf_counts) + sum(self.leaf_counts)

    @property
    def is_canonical(self) -> bool:
        a = self.leaf_counts
        if len(a) >= 2 and (a[0] < 1 or a[-1] < 1):
            return False
        return a <= a[::-1]

    def canonical(self) -> "CaterpillarSpec":
        # a spine end without leaves is itself a leaf of the next spine vertex
        a = list(self.leaf_counts)
        while len(a) >= 2 and a[0] == 0:
            a = [a[1] + 1] + a[2:]
        while len(a) >= 2 and a[-1] == 0:
            a = a[:-2] + [a[-2] + 1]
        t = tuple(a)
        return CaterpillarSpec(min(t, t[::-1]))

    def is_star(self) -> bool:
        """True for K_{1,r}, r >= 1 (K_2 included, K_1 excluded)."""
        c = self.canonical().leaf_counts
        return len(c) == 1 and c[0] >= 1


@dataclass(frozen=True)
class SpiderSpec:
    """Leg lengths in edges from the body."""

    leg_lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leg_lengths", tuple(int(x) for x in self.leg_lengths))
        if any(x < 1 for x in self.leg_lengths):
            raise GraphError("spider legs need at least one edge")

    @property
    def leg_count(self) -> int:
        return len(self.leg_lengths)

    @property
    def is_proper(self) -> bool:
        """A genuine spider (body degree >= 3); fewer legs give a path."""
        return self.leg_count >= 3

    @property
    def order(self) -> int:
        return 1 + sum(self.leg_lengths)


@dataclass(frozen=True)
class LobsterSpec:
    """Per spine vertex, the branches hanging off it.

    A branch is described by the number of leaves hanging from the branch
    vertex: 0 is a plain leaf of the spine, k >= 1 a depth-2 star with k
    leaves.  Each per-vertex tuple is kept sorted descending.
    """

    branches: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.branches:
            raise GraphError("lobster needs a spine of length >= 1")
        norm = []
        for b in self.branches:
            for k in b:
                if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                    raise GraphError(f"branch descriptor {k!r} exceeds depth 2 or is invalid")
            norm.append(tuple(sorted(b, reverse=True)))
        object.__setattr__(self, "branches", tuple(norm))

    @property
    def spine_length(self) -> int:
        return len(self.branches)

    @property
    def order(self) -> int:
        return len(self.branches) + sum(1 + k for b in self.branches for k in b)

    def canonical(self) -> "LobsterSpec":
        return LobsterSpec(min(self.branches, self.branches[::-1]))

    @property
    def c_t(self) -> int:
        return max(sum(1 for k in b if k >= 3) for b in self.branches)

    @property
    def is_caterpillar_shaped(self) -> bool:
        return all(k == 0 for b in self.branches for k in b)


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: tuple[Any, ...]
    graph: Graph = field(repr=False)
    spine: Optional[tuple[int, ...]] = None
    canonical: bool = True
    base: Optional["FamilyInstance"] = field(default=None, repr=False)

    @property
    def label(self) -> str:
        return f"{self.family}{_fmt_params(self.params)}"


def _fmt_params(params) -> str:
    def one(p):
        if isinstance(p, (CaterpillarSpec,)):
            return "[" + ",".join(map(str, p.leaf_counts)) + "]"
        if isinstance(p, SpiderSpec):
            return "[" + ",".join(map(str, p.leg_lengths)) + "]"
        if isinstance(p, LobsterSpec):
            return "[" + "|".join(",".join(map(str, b)) for b in p.branches) + "]"
        if isinstance(p, FamilyInstance):
            return p.label
        return str(p)

    return "(" + ";".join(one(p) for p in params) + ")"


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


# ----------------------------------------------------------------- basic families

def gen_path(n: int) -> FamilyInstance:
    _need(n >= 1, "path needs n >= 1")
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    return FamilyInstance("path", (n,), g, spine=tuple(range(n)))


def gen_cycle(n: int) -> FamilyInstance:
    _need(n >= 3, "cycle needs n >= 3")
    g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return FamilyInstance("cycle", (n,), g)


def gen_complete(n: int) -> FamilyInstance:
    _need(n >= 1, "complete graph needs n >= 1")
    g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return FamilyInstance("complete", (n,), g)


def gen_complete_bipartite(m: int, n: int) -> FamilyInstance:
    _need(m >= 1 and n >= 1, "complete bipartite graph needs m, n >= 1")
    g = Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    return FamilyInstance("complete_bipartite", (m, n), g)


def gen_star(leaves: int) -> FamilyInstance:
    _need(leaves >= 0, "star needs leaves >= 0")
    g = Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    return FamilyInstance("star", (leaves,), g, spine=(0,))


def gen_spider(spec: SpiderSpec) -> FamilyInstance:
    edges = []
    nxt = 1
    for length in spec.leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    g = Graph.from_edges(nxt, edges)
    return FamilyInstance("spider", (spec,), g, canonical=spec.is_proper)


def gen_caterpillar(spec: CaterpillarSpec) -> FamilyInstance:
    ell = spec.spine_length
    edges = [(i, i + 1) for i in range(ell - 1)]
    nxt = ell
    for i, a in enumerate(spec.leaf_counts):
        for _ in range(a):
            edges.append((i, nxt))
            nxt += 1
    g = Graph.from_edges(nxt, edges)
    return FamilyInstance(
        "caterpillar", (spec,), g, spine=tuple(range(ell)), canonical=spec.is_canonical
    )


def gen_lobster(spec: LobsterSpec) -> FamilyInstance:
    ell = spec.spine_length
    edges = [(i, i + 1) for i in range(ell - 1)]
    nxt = ell
    for i, branch in enumerate(spec.branches):
        for k in branch:
            b = nxt
            edges.append((i, b))
            nxt += 1
            for _ in range(k):
                edges.append((b, nxt))
                nxt += 1
    g = Graph.from_edges(nxt, edges)
    if not is_lobster(g):
        raise GraphError("generated graph is not a lobster")
    return FamilyInstance(
        "lobster", (spec,), g, spine=tuple(range(ell)), canonical=spec == spec.canonical()
    )


def corona_k1(inst: FamilyInstance) -> FamilyInstance:
    """Attach one pendant vertex ``n + i`` to every vertex ``i``."""
    g = inst.graph
    _need(g.n >= 1, "corona needs a non-empty base graph")
    n = g.n
    edges = g.edges() + [(i, n + i) for i in range(n)]
    return FamilyInstance(
        "corona", (inst,), Graph.from_edges(2 * n, edges), spine=inst.spine, base=inst
    )


def gen_windmill(m: int, t: int) -> FamilyInstance:
    """t copies of K_m sharing vertex 0; copy j uses 1+j(m-1) .. (j+1)(m-1)."""
    _need(m >= 3 and t >= 1, "windmill needs m >= 3 and t >= 1")
    edges = []
    for j in range(t):
        block = [0] + [1 + j * (m - 1) + r for r in range(m - 1)]
        edges.extend((block[a], block[b]) for a in range(m) for b in range(a + 1, m))
    g = Graph.from_edges(1 + t * (m - 1), edges)
    return FamilyInstance("windmill", (m, t), g)


def gen_friendship(t: int) -> FamilyInstance:
    _need(t >= 1, "friendship graph needs t >= 1")
    w = gen_windmill(3, t)
    return FamilyInstance("friendship", (t,), w.graph)


# ----------------------------------------------------------------- tree shapes

def _strip_leaves(g: Graph, alive: set[int]) -> set[int]:
    return {v for v in alive if sum(1 for w in g.adjacency[v] if w in alive) >= 2}


def _is_path_set(g: Graph, alive: set[int]) -> bool:
    if not alive:
        return True
    degs = [sum(1 for w in g.adjacency[v] if w in alive) for v in alive]
    return max(degs) <= 2


def is_caterpillar(g: Graph) -> bool:
    """Tree whose non-leaf vertices induce a path."""
    return is_tree(g) and _is_path_set(g, _strip_leaves(g, set(range(g.n))))


def is_lobster(g: Graph) -> bool:
    """Tree that becomes a caterpillar once its leaves are removed."""
    if not is_tree(g):
        return False
    core = _strip_leaves(g, set(range(g.n)))
    return _is_path_set(g, _strip_leaves(g, core))


def lobster_core(g: Graph) -> list[int]:
    """Vertices left after stripping leaves twice, in path order."""
    core = _strip_leaves(g, _strip_leaves(g, set(range(g.n))))
    if not core:
        return []
    ends = [v for v in core if sum(1 for w in g.adjacency[v] if w in core) <= 1]
    order = [min(ends)]
    while len(order) < len(core):
        prev = order[-2] if len(order) >= 2 else -1
        order.append(next(w for w in g.adjacency[order[-1]] if w in core and w != prev))
    return order


def compute_cT(inst: FamilyInstance) -> int:
    """Max over spine vertices of the number of off-spine neighbors of degree >= 4."""
    if inst.spine is None:
        raise GraphError(f"{inst.label} has no designated spine")
    g = inst.graph
    on_spine = set(inst.spine)
    return max(
        (sum(1 for w in g.adjacency[v] if w not in on_spine and g.degree(w) >= 4)
         for v in inst.spine),
        default=0,
    )


def _lobster_spec_along(g: Graph, path: list[int]) -> LobsterSpec:
    on_path = set(path)
    branches = []
    for v in path:
        branch = []
        for w in g.adjacency[v]:
            if w in on_path:
                continue
            _need(all(g.degree(x) == 1 for x in g.adjacency[w] if x != v),
                  "vertex beyond distance 2 from the path")
            branch.append(g.degree(w) - 1)
        branches.append(tuple(branch))
    return LobsterSpec(tuple(branches)).canonical()


def lobster_spec_min_cT(g: Graph) -> LobsterSpec:
    """Spec along the central path that minimises c_T.

    Every central path of a lobster contains its twice-stripped core, so the
    candidates are the paths through the core.  Ties go to the shortest spine,
    then the lexicographically smallest spec.
    """
    core = lobster_core(g)
    if not core:
        spine = sorted(v for v in range(g.n) if g.degree(v) >= 2) or [0]
        return _lobster_spec_along(g, spine)
    dm = distance_matrix(g).dist
    a, b = core[0], core[-1]
    best = None
    for u in range(g.n):
        for v in range(g.n):
            duv = dm[u][v]
            if dm[u][a] + dm[a][v] != duv or dm[u][b] + dm[b][v] != duv:
                continue
            if dm[u][a] > dm[u][b]:
                continue  # each path once, oriented from the a side
            path = sorted((x for x in range(g.n) if dm[u][x] + dm[x][v] == duv),
                          key=lambda x: dm[u][x])
            spec = _lobster_spec_along(g, path)
            key = (spec.c_t, spec.spine_length, spec.branches)
            if best is None or key < best[0]:
                best = (key, spec)
    return best[1]


# ----------------------------------------------------------------- enumeration

def enumerate_caterpillars(max_n: int) -> Iterator[CaterpillarSpec]:
    """One canonical spec per caterpillar with at most ``max_n`` vertices.

    Ordered by vertex count, then spine length, then leaf counts.
    """
    if max_n >= 1:
        yield CaterpillarSpec((0,))
    if max_n >= 2:
        yield CaterpillarSpec((1,))
    for n in range(3, max_n + 1):
        yield CaterpillarSpec((n - 1,))
        for ell in range(2, n - 1):
            for a in _compositions(n - ell, ell):
                if a[0] >= 1 and a[-1] >= 1 and a <= a[::-1]:
                    yield CaterpillarSpec(a)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_spiders(max_legs: int, max_leg_len: int) -> Iterator[SpiderSpec]:
    """One spec per multiset of leg lengths, legs sorted descending."""
    lengths = list(range(max_leg_len, 0, -1))
    for count in range(1, max_legs + 1):
        for legs in combinations_with_replacement(lengths, count):
            yield SpiderSpec(legs)


def _branch_multisets(budget: int) -> list[tuple[int, ...]]:
    """Descending tuples of branch sizes whose vertex total is at most ``budget``."""
    out = [()]

    def rec(prefix, max_k, left):
        for k in range(min(max_k, left - 1), -1, -1):
            cur = prefix + (k,)
            out.append(cur)
            rec(cur, k, left - 1 - k)

    rec((), budget, budget)
    return out


def _raw_lobster_specs(max_n: int) -> Iterator[LobsterSpec]:
    """Specs whose spine is the twice-stripped core, plus stars and double stars."""
    sets = _branch_multisets(max_n)
    size = {b: sum(1 + k for k in b) for b in sets}
    deep = [b for b in sets if any(k >= 1 for k in b)]

    # core empty: K_1, stars, double stars
    for r in range(0, max_n):
        yield LobsterSpec(((0,) * r,))
    for r1 in range(1, max_n):
        for r2 in range(r1, max_n - 1 - r1):
            yield LobsterSpec(((0,) * r1, (0,) * r2))

    # core of one vertex: at least two deep branches
    for b in sets:
        if 1 + size[b] <= max_n and sum(1 for k in b if k >= 1) >= 2:
            yield LobsterSpec((b,))

    def rec(prefix, used):
        # prefix holds spine vertices 1..j (first is an end); try closing with an end
        for end in deep:
            if used + 1 + size[end] <= max_n:
                yield prefix + (end,)
        for mid in sets:
            if used + 1 + size[mid] + 1 + 2 <= max_n:
                yield from rec(prefix + (mid,), used + 1 + size[mid])

    for first in deep:
        if 1 + size[first] + 3 <= max_n:
            for branches in rec((first,), 1 + size[first]):
                if branches <= branches[::-1]:
                    yield LobsterSpec(branches)


def enumerate_lobsters(max_n: int, cT_max: int) -> Iterator[LobsterSpec]:
    """One spec per lobster with at most ``max_n`` vertices and c_T <= ``cT_max``.

    c_T is taken over the best central path; the emitted spec uses that path
    as its spine.  Specs are deduplicated by tree certificate and emitted in
    (order, spine length, branches) order.
    """
    seen = set()
    found = []
    for raw in _raw_lobster_specs(max_n):
        g = gen_lobster(raw).graph
        cert = tree_certificate(g)
        if cert in seen:
            continue
        seen.add(cert)
        spec = lobster_spec_min_cT(g)
        if spec.c_t <= cT_max:
            found.append(spec)
    found.sort(key=lambda s: (s.order, s.spine_length, s.branches))
    yield from found


# ----------------------------------------------------------------- closed forms

def formula_chi(inst: FamilyInstance) -> Optional[int]:
    f, p = inst.family, inst.params
    if f == "path":
        n = p[0]
        return 1 if n == 1 else 2 if n <= 3 else 3
    if f == "cycle":
        n = p[0]
        return 3 if n == 3 or n % 4 == 0 else 4
    if f == "complete":
        return p[0]
    if f == "complete_bipartite":
        return 1 + min(p)
    if f == "star":
        return 1 if p[0] == 0 else 2
    if f == "friendship":
        return p[0] + 2
    if f == "windmill":
        m, t = p
        return t * (m - 2) + 2
    return None


def formula_gap(inst: FamilyInstance) -> Optional[int]:
    f, p = inst.family, inst.params
    if f == "complete":
        return 1
    if f == "friendship":
        return p[0]
    if f == "windmill":
        m, t = p
        return t * (m - 2) - m + 3
    return None


# ----------------------------------------------------------------- lookup by name

GENERATORS = {
    "path": (gen_path, 1),
    "cycle": (gen_cycle, 1),
    "complete": (gen_complete, 1),
    "complete_bipartite": (gen_complete_bipartite, 2),
    "star": (gen_star, 1),
    "friendship": (gen_friendship, 1),
    "windmill": (gen_windmill, 2),
}


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def generate(family: str, args: list[str]) -> FamilyInstance:
    """Build an instance from a family name and string arguments.

    Integer families take integers; ``caterpillar`` and ``spider`` take a comma
    list; ``lobster`` takes per-spine-vertex comma lists separated by ``/``;
    ``corona`` takes another family description.
    """
    family = family.replace("-", "_")
    if family == "bipartite":
        family = "complete_bipartite"
    try:
        if family in GENERATORS:
            fn, arity = GENERATORS[family]
            if len(args) != arity:
                raise GraphError(f"{family} takes {arity} integer parameter(s)")
            return fn(*(int(a) for a in args))
        if family == "caterpillar":
            _need(len(args) == 1, "caterpillar takes one comma-separated leaf list")
            return gen_caterpillar(CaterpillarSpec(_int_list(args[0])))
        if family == "spider":
            _need(len(args) == 1, "spider takes one comma-separated leg list")
            return gen_spider(SpiderSpec(_int_list(args[0])))
        if family == "lobster":
            _need(len(args) == 1, "lobster takes 'b,b/b/...' per spine vertex")
            return gen_lobster(LobsterSpec(tuple(_int_list(x) for x in args[0].split("/"))))
        if family == "corona":
            _need(len(args) >= 1, "corona takes a base family")
            return corona_k1(generate(args[0], args[1:]))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameters for {family}: {exc}") from exc
    raise GraphError(f"unknown family {family!r}")
