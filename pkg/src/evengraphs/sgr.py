"""Reading and writing the line-based ``.sgr`` graph format.

::

    sgr 1
    n 8
    subdominant 0 4
    vertex 0
    edge 0 0 1 label 3        # direction tail -> head
    ray 0 0
    rot 0 e0.t r0 ...         # counterclockwise
    anchor 0 sector 0

Blank lines and ``#`` comments are ignored.  :func:`serialize` writes lines
sorted by kind and then id, so canonical graphs serialize byte-stably.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .cellgraph import CellGraph, Dart, Edge
from .errors import GraphError, SgrError
from .frame import SectorFrame


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise SgrError(f"expected an integer, got {tok!r}", lineno) from None


def parse(text) -> CellGraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    J = None
    vertices: List[int] = []
    edges: Dict[int, Edge] = {}
    rays: Dict[int, int] = {}
    rotation: Dict[int, Tuple[Dart, ...]] = {}
    rot_lines: Dict[int, int] = {}
    anchor = None
    header_seen = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if not header_seen:
            if tok != ["sgr", "1"]:
                raise SgrError("expected header 'sgr 1'", lineno)
            header_seen = True
            continue
        if kind == "n":
            if len(tok) != 2:
                raise SgrError("expected 'n <int>'", lineno)
            n = _int(tok[1], lineno)
        elif kind == "subdominant":
            J = [_int(t, lineno) for t in tok[1:]]
        elif kind == "vertex":
            if len(tok) != 2:
                raise SgrError("expected 'vertex <vid>'", lineno)
            vid = _int(tok[1], lineno)
            if vid in vertices:
                raise SgrError(f"vertex {vid} declared twice", lineno)
            vertices.append(vid)
        elif kind == "edge":
            if len(tok) != 6 or tok[4] != "label":
                raise SgrError("expected 'edge <eid> <tail> <head> label <j>'", lineno)
            eid, tail, head, lab = (_int(tok[i], lineno) for i in (1, 2, 3, 5))
            if eid in edges:
                raise SgrError(f"edge {eid} declared twice", lineno)
            for v in (tail, head):
                if v not in vertices:
                    raise SgrError(f"edge {eid} references unknown vertex {v}", lineno)
            if tail == head:
                raise SgrError(f"edge {eid} is a loop", lineno)
            edges[eid] = Edge(tail, head, lab if n is None else lab % n)
        elif kind == "ray":
            if len(tok) != 3:
                raise SgrError("expected 'ray <rid> <vid>'", lineno)
            rid, vid = _int(tok[1], lineno), _int(tok[2], lineno)
            if rid in rays:
                raise SgrError(f"ray {rid} declared twice", lineno)
            if vid not in vertices:
                raise SgrError(f"ray {rid} references unknown vertex {vid}", lineno)
            rays[rid] = vid
        elif kind == "rot":
            if len(tok) < 2:
                raise SgrError("expected 'rot <vid> <darts...>'", lineno)
            vid = _int(tok[1], lineno)
            if vid not in vertices:
                raise SgrError(f"rotation for unknown vertex {vid}", lineno)
            if vid in rotation:
                raise SgrError(f"rotation for vertex {vid} given twice", lineno)
            darts = []
            for t in tok[2:]:
                try:
                    darts.append(Dart.parse(t))
                except ValueError:
                    raise SgrError(f"bad dart token {t!r}", lineno) from None
            rotation[vid] = tuple(darts)
            rot_lines[vid] = lineno
        elif kind == "anchor":
            if len(tok) != 4 or tok[2] != "sector":
                raise SgrError("expected 'anchor <rid> sector <k>'", lineno)
            if anchor is not None:
                raise SgrError("anchor given more than once", lineno)
            anchor = (_int(tok[1], lineno), _int(tok[3], lineno))
        else:
            raise SgrError(f"unknown line kind {kind!r}", lineno)

    if not header_seen:
        raise SgrError("empty file")
    if n is None:
        raise SgrError("missing 'n' line")
    if J is None:
        raise SgrError("missing 'subdominant' line")
    try:
        frame = SectorFrame(n, J)
    except GraphError as exc:
        raise SgrError(f"invalid frame: {exc}") from None
    if anchor is None:
        raise SgrError("missing anchor")
    if len(rays) != n:
        raise SgrError(f"ray count mismatch: {len(rays)} rays declared for n={n}")
    if anchor[0] not in rays:
        raise SgrError(f"anchor names unknown ray {anchor[0]}")

    edges = {eid: Edge(e.tail, e.head, e.label % n) for eid, e in edges.items()}
    used = {}
    for vid, darts in rotation.items():
        lineno = rot_lines[vid]
        for d in darts:
            if d.kind == "e":
                if d.id not in edges:
                    raise SgrError(f"rotation mentions unknown dart {d}", lineno)
                e = edges[d.id]
                owner = e.tail if d.end == "t" else e.head
            else:
                if d.id not in rays:
                    raise SgrError(f"rotation mentions unknown dart {d}", lineno)
                owner = rays[d.id]
            if d in used:
                raise SgrError(f"dart reused: {d} appears in rotations of {used[d]} and {vid}", lineno)
            if owner != vid:
                raise SgrError(f"dart {d} belongs to vertex {owner}, listed at {vid}", lineno)
            used[d] = vid
    for eid in edges:
        for end in "th":
            d = Dart("e", eid, end)
            if d not in used:
                raise SgrError(f"dangling twin: dart {d} of edge {eid} is in no rotation")
    for rid in rays:
        if Dart("r", rid) not in used:
            raise SgrError(f"ray r{rid} is in no rotation")
    for vid in vertices:
        if vid not in rotation:
            raise SgrError(f"vertex {vid} has no rotation")

    return CellGraph(
        frame=frame,
        vertices=tuple(vertices),
        edges=edges,
        rays=rays,
        rotation=rotation,
        anchor=anchor,
    )


def _rotated(darts):
    if not darts:
        return ()
    k = min(range(len(darts)), key=lambda i: darts[i].sort_key())
    return tuple(darts[k:]) + tuple(darts[:k])


def serialize(g: CellGraph) -> str:
    lines = ["sgr 1", f"n {g.frame.n}", "subdominant " + " ".join(map(str, sorted(g.frame.subdominant)))]
    for v in sorted(g.vertices):
        lines.append(f"vertex {v}")
    for eid in sorted(g.edges):
        e = g.edges[eid]
        lines.append(f"edge {eid} {e.tail} {e.head} label {e.label}")
    for rid in sorted(g.rays):
        lines.append(f"ray {rid} {g.rays[rid]}")
    for v in sorted(g.rotation):
        lines.append(" ".join([f"rot {v}"] + [str(d) for d in _rotated(g.rotation[v])]))
    lines.append(f"anchor {g.anchor[0]} sector {g.anchor[1]}")
    return "\n".join(lines) + "\n"


def load(path) -> CellGraph:
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump(g: CellGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(g))
