"""Tree view, root metric, bounded faces and canonical form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .cellgraph import CellGraph
from .symmetry import central_involution
from .tree import PlaneTree, as_tree


class _Infinite:
    """Bounded-face count of a frame with adjacent dominant sectors."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    __str__ = __repr__


INFINITE = _Infinite()


@dataclass(frozen=True)
class TreeView:
    """Undirected simple graph of ``g``; ``sources`` maps each edge to its labeled edges."""

    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    sources: Dict[Tuple[int, int], Tuple[int, ...]]

    def adjacency(self) -> Dict[int, List[int]]:
        adj = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def is_tree(self) -> bool:
        if len(self.edges) != len(self.vertices) - 1:
            return False
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def tree_view(g: CellGraph) -> TreeView:
    sources: Dict[Tuple[int, int], List[int]] = {}
    for eid, e in sorted(g.edges.items()):
        if e.tail == e.head:
            continue
        sources.setdefault(tuple(sorted((e.tail, e.head))), []).append(eid)
    return TreeView(
        tuple(sorted(g.vertices)),
        tuple(sorted(sources)),
        {k: tuple(v) for k, v in sources.items()},
    )


def distances(t: PlaneTree, sources) -> Dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for w in t.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def root_metric(g) -> int:
    """Sum of ``(deg v - 2) * dist(v, nearest root)`` over the tree view."""
    t = as_tree(g)
    roots = central_involution(t).center
    dist = distances(t, roots)
    return sum((t.degree(v) - 2) * dist[v] for v in t.vertices())


def bounded_faces(g):
    """Number of bigons, or :data:`INFINITE` when two dominant sectors are adjacent."""
    t = as_tree(g)
    if not t.frame.alternating:
        return INFINITE
    return sum(1 for v, w in t.edges() if t.multiplicity(v, w) == 2)


def canonicalize(g) -> CellGraph:
    return as_tree(g).to_cellgraph()


def equals(g1, g2) -> bool:
    return canonicalize(g1).serialize() == canonicalize(g2).serialize()
