"""Graph, coloring and metadata file formats (1-indexed on disk).

Graph files::

    c optional comment
    p pcg <n> <m>
    e <u> <v>        (m lines)

Coloring files hold one ``<v> <color>`` line per vertex, in any order.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .families import (
    CaterpillarSpec,
    FamilyInstance,
    LobsterSpec,
    SpiderSpec,
    compute_cT,
)
from .graph import Graph, GraphError

PathLike = Union[str, Path]


class ParseError(GraphError):
    pass


def format_graph(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p pcg {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if n is not None:
                    raise ParseError(f"line {lineno}: second problem line")
                if len(parts) != 4 or parts[1] != "pcg":
                    raise ParseError(f"line {lineno}: expected 'p pcg <n> <m>'")
                n, declared_m = int(parts[2]), int(parts[3])
                if n < 0 or declared_m < 0:
                    raise ParseError(f"line {lineno}: negative size")
            elif parts[0] == "e":
                if n is None:
                    raise ParseError(f"line {lineno}: edge before problem line")
                if len(parts) != 3:
                    raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
                if not (0 <= u < n and 0 <= v < n):
                    raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
                if u == v:
                    raise ParseError(f"line {lineno}: self-loop")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise ParseError(f"line {lineno}: duplicate edge {u + 1}-{v + 1}")
                seen.add(key)
                edges.append(key)
            else:
                raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise ParseError("missing 'p pcg <n> <m>' line")
    if len(edges) != declared_m:
        raise ParseError(f"problem line declares {declared_m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def read_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(path: PathLike, g: Graph, comments: tuple[str, ...] = ()) -> None:
    Path(path).write_text(format_graph(g, comments))


def format_coloring(colors) -> str:
    return "".join(f"{v + 1} {c}\n" for v, c in enumerate(colors))


def parse_coloring(text: str, n: int) -> tuple[int, ...]:
    colors = [0] * n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<v> <color>'")
        try:
            v, c = int(parts[0]) - 1, int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if not 0 <= v < n:
            raise ParseError(f"line {lineno}: vertex {v + 1} out of range 1..{n}")
        if c <= 0:
            raise ParseError(f"line {lineno}: color must be positive")
        if colors[v]:
            raise ParseError(f"line {lineno}: vertex {v + 1} listed twice")
        colors[v] = c
    missing = [v + 1 for v, c in enumerate(colors) if c == 0]
    if missing:
        raise ParseError(f"coloring misses vertices {missing[:10]}")
    return tuple(colors)


def read_coloring(path: PathLike, n: int) -> tuple[int, ...]:
    return parse_coloring(Path(path).read_text(), n)


def params_to_json(params) -> list[Any]:
    out = []
    for p in params:
        if isinstance(p, CaterpillarSpec):
            out.append({"leaf_counts": list(p.leaf_counts)})
        elif isinstance(p, SpiderSpec):
            out.append({"leg_lengths": list(p.leg_lengths)})
        elif isinstance(p, LobsterSpec):
            out.append({"branches": [list(b) for b in p.branches]})
        elif isinstance(p, FamilyInstance):
            out.append({"family": p.family, "params": params_to_json(p.params)})
        else:
            out.append(p)
    return out


def instance_metadata(inst: FamilyInstance) -> dict:
    meta = {
        "family": inst.family,
        "params": params_to_json(inst.params),
        "label": inst.label,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "canonical": inst.canonical,
        "spine": None if inst.spine is None else [v + 1 for v in inst.spine],
    }
    if inst.spine is not None:
        meta["c_T"] = compute_cT(inst)
    return meta


def write_instance(path: PathLike, inst: FamilyInstance, extra: dict | None = None) -> Path:
    """Write ``<path>`` (graph) and ``<path>.json`` (metadata); return ``path``."""
    path = Path(path)
    write_graph(path, inst.graph, comments=(inst.label,))
    meta = instance_metadata(inst)
    if extra:
        meta.update(extra)
    meta_path = path.with_name(path.name + ".json")
    meta_path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return path
