"""Explicit constructive packing colorings and the committed gap-1 caterpillar fixtures."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import NamedTuple, Optional

from .families import (
    CaterpillarSpec,
    FamilyInstance,
    SpiderSpec,
    corona_k1,
    gen_caterpillar,
    gen_path,
    gen_spider,
)
from .formats import parse_graph, write_instance
from .graph import GraphError

PATH_PATTERN = (1, 2, 1, 3)
CORONA_SPINE_PATTERN = (2, 4, 3, 5, 2, 6, 3, 4, 2, 5, 3, 7)


@dataclass(frozen=True)
class PatternColoring:
    colors: tuple[int, ...]
    claimed_max: int
    source_rule: str

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)


def color_path_pattern(n: int) -> PatternColoring:
    """Repeat 1,2,1,3 along P_n."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    colors = tuple(PATH_PATTERN[i % 4] for i in range(n))
    claimed = 1 if n == 1 else 2 if n <= 3 else 3
    return PatternColoring(colors, claimed, "path_1213")


def color_spider(spec: SpiderSpec) -> PatternColoring:
    """Body gets 3, each leg repeats 1,2,1,3 outward (numbering of gen_spider)."""
    colors = [3]
    for length in spec.leg_lengths:
        colors.extend(PATH_PATTERN[d % 4] for d in range(length))
    return PatternColoring(tuple(colors), 3, "spider")


def color_corona_caterpillar(inst: FamilyInstance) -> PatternColoring:
    """Coloring of T o K_1 for a caterpillar T with designated spine.

    The spine repeats (2 4 3 5 2 6 3 4 2 5 3 7) from its first vertex.  Every
    off-spine neighbor of the spine (L_1) gets 1.  Every vertex two steps off
    the spine (L_2) gets 2, or 3 when its spine vertex is colored 2.
    """
    g = inst.graph
    spine = inst.spine
    if inst.family != "corona" or not spine:
        raise GraphError("expected the corona of a caterpillar with a designated spine")
    for a, b in zip(spine, spine[1:]):
        if b not in g.adjacency[a]:
            raise GraphError("spine does not induce a path")
    colors = [0] * g.n
    on_spine = set(spine)
    for j, v in enumerate(spine):
        sc = CORONA_SPINE_PATTERN[j % 12]
        colors[v] = sc
        for w in g.adjacency[v]:
            if w in on_spine:
                continue
            if colors[w]:
                raise GraphError("off-spine vertex adjacent to two spine vertices")
            colors[w] = 1
            for x in g.adjacency[w]:
                if x == v:
                    continue
                if x in on_spine or colors[x] or g.degree(x) != 1:
                    raise GraphError("graph is not the corona of a caterpillar along this spine")
                colors[x] = 3 if sc == 2 else 2
    if 0 in colors:
        raise GraphError("vertices farther than 2 from the spine")
    return PatternColoring(tuple(colors), 7, "corona_spine_12")


def color_caterpillar_via_corona(spec: CaterpillarSpec) -> PatternColoring:
    """Restrict the corona coloring to T, an isometric subgraph of T o K_1."""
    base = gen_caterpillar(spec)
    full = color_corona_caterpillar(corona_k1(base))
    return PatternColoring(full.colors[: base.graph.n], 7, "caterpillar_via_corona")


# ----------------------------------------------------------------- fixtures

class Fixture(NamedTuple):
    instance: FamilyInstance
    claimed_chi: int
    claimed_gap: int
    critical_vertices: tuple[int, ...]


# k -> (spine length, 1-based spine positions carrying leaves,
#       1-based red positions, reference spine colors)
FIGURE3 = {
    3: (2, (1, 2), (1, 2), (2, 3)),
    4: (5, (1, 4, 5), (1, 2, 3, 4, 5), (2, 1, 3, 2, 4)),
    5: (6, (1, 2, 3, 4, 5, 6), (2, 3, 4, 5), (2, 3, 4, 2, 5, 3)),
    6: (10, tuple(range(1, 11)), (4, 6), (2, 3, 4, 2, 5, 3, 2, 4, 6, 2)),
    7: (35, tuple(range(1, 36)), tuple(range(1, 36)), None),
}
K7_LEAVES = 6
FIXTURE_DIR = "data/figure3"


def figure3_spec(k: int, bundle: int) -> CaterpillarSpec:
    length, bundles, _, _ = FIGURE3[k]
    return CaterpillarSpec(tuple(bundle if i in bundles else 0 for i in range(1, length + 1)))


def search_figure3_bundle(k: int, max_bundle: int = 12) -> int:
    """Smallest uniform bundle size giving chi = k, mu = 1 and red deltas of 1."""
    from .gap import gap_report

    if k == 7:
        return K7_LEAVES
    _, _, red, _ = FIGURE3[k]
    for bundle in range(1, max_bundle + 1):
        rep = gap_report(gen_caterpillar(figure3_spec(k, bundle)).graph)
        if rep.chi == k and rep.mu == 1 and all(rep.deltas[p - 1] == 1 for p in red):
            return bundle
    raise RuntimeError(f"no bundle size up to {max_bundle} realises k={k}")


def _check_k(k: int) -> None:
    if k not in FIGURE3:
        raise GraphError(f"gap-1 fixtures exist for k in 3..7, not {k}")


def regenerate_fixtures(out_dir: Path, ks=(3, 4, 5, 6, 7)) -> list[Path]:
    """Recompute bundle sizes with the exact solver and write the fixture files."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for k in ks:
        _check_k(k)
        bundle = search_figure3_bundle(k)
        inst = gen_caterpillar(figure3_spec(k, bundle))
        _, _, red, colors = FIGURE3[k]
        extra = {
            "claimed_chi": k,
            "claimed_gap": 1,
            "critical_vertices": [p for p in red],
            "figure_spine_colors": None if colors is None else list(colors),
            "bundle_size": bundle,
            "exact_claim_source": "solver" if k < 7 else "published",
            "regenerate": "packgap fixtures --regenerate",
        }
        path = out_dir / f"k{k}.gr"
        write_instance(path, inst, extra)
        written.append(path)
    return written


def figure3_fixture(k: int, root: Optional[Path] = None) -> list[Fixture]:
    """Load the committed fixture for ``k`` (3..7)."""
    _check_k(k)
    if root is None:
        base = resources.files("packgap").joinpath(FIXTURE_DIR)
        text = base.joinpath(f"k{k}.gr").read_text()
        meta = json.loads(base.joinpath(f"k{k}.gr.json").read_text())
    else:
        text = (Path(root) / f"k{k}.gr").read_text()
        meta = json.loads((Path(root) / f"k{k}.gr.json").read_text())
    spec = CaterpillarSpec(tuple(meta["params"][0]["leaf_counts"]))
    inst = gen_caterpillar(spec)
    if parse_graph(text) != inst.graph:
        raise GraphError(f"fixture k{k} graph file disagrees with its metadata")
    critical = tuple(inst.spine[p - 1] for p in meta["critical_vertices"])
    return [Fixture(inst, meta["claimed_chi"], meta["claimed_gap"], critical)]
