"""Report-based validation of cell graphs against the labeling laws.

Laws are numbered I to VII:

I    no two bounded faces share an edge
II   bounded-face edges run clockwise with labels increasing in that order
III  each label at most once per bounded face
IV   labels cyclically increase counterclockwise around each vertex
V    a dominant face is bounded by its own label, counterclockwise
VI   no ``j``-edges for subdominant ``j``
VII  every vertex has even degree

plus ``standard-order``, ``tree`` (the tree view is a tree), ``parallel`` (at
most two parallel edges, bounding a bigon) and ``symmetry``.

Ray darts stand for infinite tails: ray ``k`` carries an incoming
``(k-1)``-edge and an outgoing ``k``-edge when those labels are dominant, and
these count toward laws IV and VII.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .cellgraph import CellGraph, Dart

LAWS = ("I", "II", "III", "IV", "V", "VI", "VII", "standard-order", "tree", "parallel", "symmetry")


@dataclass
class ValidationReport:
    violations: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def laws(self) -> List[str]:
        seen = []
        for law, _ in self.violations:
            if law not in seen:
                seen.append(law)
        return seen

    def add(self, law: str, message: str) -> None:
        self.violations.append((law, message))

    def __bool__(self) -> bool:
        return self.ok

    def text(self) -> str:
        if self.ok:
            return "ok\n"
        return "".join(f"law {law}: {msg}\n" for law, msg in self.violations)


def _cyclic_descents(seq) -> int:
    return sum(1 for i in range(len(seq)) if seq[(i + 1) % len(seq)] < seq[i])


def _tail_labels(frame, sector: int) -> List[int]:
    """Labels of the tail edges of a ray with ``sector`` counterclockwise of it (ccw order)."""
    out = []
    if frame.is_dominant(sector - 1):
        out.append((sector - 1) % frame.n)
    if frame.is_dominant(sector):
        out.append(sector % frame.n)
    return out


def validate(g, symmetry: bool = True) -> ValidationReport:
    """Check every law; never raises for a parse-valid graph."""
    if not isinstance(g, CellGraph):
        g = g.to_cellgraph()
    rep = ValidationReport()
    frame = g.frame
    J = frame.subdominant

    for eid, e in sorted(g.edges.items()):
        if e.label % frame.n in J:
            rep.add("VI", f"edge e{eid} carries subdominant label {e.label}")

    # tree view
    pairs = Counter()
    for eid, e in g.edges.items():
        if e.tail == e.head:
            rep.add("tree", f"edge e{eid} is a loop")
        pairs[frozenset((e.tail, e.head))] += 1
    simple = [p for p in pairs if len(p) == 2]
    adj: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for p in simple:
        a, b = tuple(p)
        adj[a].append(b)
        adj[b].append(a)
    seen = {g.vertices[0]} if g.vertices else set()
    stack = list(seen)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(g.vertices):
        rep.add("tree", "tree view is disconnected")
    elif len(simple) != len(g.vertices) - 1:
        rep.add("tree", "tree view has a cycle")

    faces = g.raw_faces
    face_of: Dict[Dart, int] = {}
    for i, (cycle, _) in enumerate(faces):
        for d in cycle:
            face_of[d] = i
    bounded = [i for i, (_, b) in enumerate(faces) if b]

    for p, count in sorted(pairs.items(), key=lambda kv: sorted(kv[0])):
        if count > 2:
            rep.add("parallel", f"{count} parallel edges between vertices {sorted(p)}")
        elif count == 2 and len(p) == 2:
            eids = sorted(eid for eid, e in g.edges.items() if frozenset((e.tail, e.head)) == p)
            darts = {d for eid in eids for d in (Dart("e", eid, "t"), Dart("e", eid, "h"))}
            if not any(faces[i][1] and set(faces[i][0]) <= darts for i in bounded):
                rep.add("parallel", f"parallel edges e{eids[0]}, e{eids[1]} do not bound a bigon")

    # laws I-III on bounded faces
    for eid in sorted(g.edges):
        ft, fh = face_of[Dart("e", eid, "t")], face_of[Dart("e", eid, "h")]
        if ft != fh and faces[ft][1] and faces[fh][1]:
            rep.add("I", f"edge e{eid} is shared by two bounded faces")
    for i in bounded:
        cycle = faces[i][0]
        if any(d.kind != "e" or d.end != "h" for d in cycle):
            rep.add("II", f"bounded face through {cycle[0]} is not bounded clockwise")
            continue
        labels = [g.edges[d.id].label for d in reversed(cycle)]
        if len(set(labels)) != len(labels):
            rep.add("III", f"bounded face through {cycle[0]} repeats a label")
        elif _cyclic_descents(labels) > 1:
            rep.add("II", f"labels {labels} around a bounded face do not increase clockwise")

    sectors = g.ray_sectors
    if sectors is None or len(g.rays) != frame.n:
        rep.add("standard-order", "unbounded faces do not match the sectors in counterclockwise order")
    else:
        for i, (cycle, is_bounded) in enumerate(faces):
            if is_bounded:
                continue
            k = sectors[cycle[-1].id]
            edge_darts = [d for d in cycle if d.kind == "e"]
            if k in J:
                bad = [d for d in edge_darts if d.end == "t"]
                if bad:
                    rep.add("standard-order", f"subdominant sector {k} lies left of edge e{bad[0].id}")
                continue
            for d in edge_darts:
                e = g.edges[d.id]
                if d.end != "t" or e.label != k:
                    rep.add("V", f"sector {k} is bounded by edge e{d.id} (label {e.label}, {d.end} side)")
                    break
        for v in g.vertices:
            labels = []
            for d in g.rotation[v]:
                if d.kind == "r":
                    labels.extend(_tail_labels(frame, sectors[d.id]))
                else:
                    labels.append(g.edges[d.id].label)
            if len(labels) % 2:
                rep.add("VII", f"vertex {v} has odd degree {len(labels)}")
            if labels and _cyclic_descents(labels) > 1:
                rep.add("IV", f"labels {labels} at vertex {v} do not increase counterclockwise")

    if symmetry:
        from .symmetry import cell_involution

        if cell_involution(g) is None:
            rep.add("symmetry", "no central involution")
    return rep
