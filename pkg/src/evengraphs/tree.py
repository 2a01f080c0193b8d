"""Plane trees with rays: the working representation of standard graphs.

For a standard graph the undirected view ``T`` is a tree whose leaves are the
``n`` rays.  Each complementary region of the embedded tree is an unbounded
face and carries a sector index, and the directed labeled edges are recovered
from the faces: a tree edge separating faces ``a`` and ``b`` carries an
``a``-edge when ``a`` is dominant (directed with face ``a`` on its left) and a
``b``-edge when ``b`` is dominant.  Two edges means a bigon.

Items in a rotation are ints: ``w >= 0`` is the tree edge towards vertex
``w`` and ``~k`` (negative) is ray ``k``.  Ray ``k`` has sector ``k`` on its
counterclockwise side and sector ``k - 1`` on its clockwise side.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Dict, Iterable, List, Optional, Tuple

from .cellgraph import CellGraph, Dart, Edge
from .errors import InvalidGraph
from .frame import SectorFrame


def ray(k: int) -> int:
    return ~k


def is_ray(x: int) -> bool:
    return x < 0


class PlaneTree:
    """An embedded tree with ray ends, in one of the sector frames.

    Instances are treated as immutable; rewrites build new trees.
    """

    __slots__ = ("frame", "rot", "_faces", "_owner", "_pos")

    def __init__(self, frame: SectorFrame, rot: Dict[int, Iterable[int]], check: bool = True):
        self.frame = frame
        self.rot = {v: tuple(items) for v, items in rot.items()}
        self._faces = None
        self._owner = None
        self._pos = None
        if check:
            self.check()

    # -- basic access -------------------------------------------------------

    @property
    def n(self) -> int:
        return self.frame.n

    def vertices(self) -> List[int]:
        return sorted(self.rot)

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def neighbors(self, v: int) -> List[int]:
        return [x for x in self.rot[v] if x >= 0]

    def index(self, v: int, x: int) -> int:
        if self._pos is None:
            self._pos = {(u, y): i for u, items in self.rot.items() for i, y in enumerate(items)}
        return self._pos[(v, x)]

    def next(self, v: int, x: int) -> int:
        items = self.rot[v]
        return items[(self.index(v, x) + 1) % len(items)]

    def prev(self, v: int, x: int) -> int:
        items = self.rot[v]
        return items[(self.index(v, x) - 1) % len(items)]

    def ray_owner(self, k: int) -> int:
        if self._owner is None:
            self._owner = {~x: v for v, items in self.rot.items() for x in items if x < 0}
        return self._owner[k % self.n]

    def ray_ids(self) -> List[int]:
        return sorted(~x for items in self.rot.values() for x in items if x < 0)

    def edges(self) -> List[Tuple[int, int]]:
        return [(v, w) for v, items in self.rot.items() for w in items if w >= 0 and v < w]

    # -- faces --------------------------------------------------------------

    @property
    def faces(self) -> Dict[Tuple[int, int], int]:
        """Sector of the corner counterclockwise of each item."""
        if self._faces is None:
            self._faces = self._compute_faces()
        return self._faces

    def _compute_faces(self) -> Dict[Tuple[int, int], int]:
        n = self.n
        faces: Dict[Tuple[int, int], int] = {}
        for v0, items in self.rot.items():
            for x0 in items:
                if x0 >= 0:
                    continue
                k = ~x0
                v, x = v0, x0
                while True:
                    if (v, x) in faces:
                        raise InvalidGraph(f"corner at vertex {v} reached twice while tracing sector {k}")
                    faces[(v, x)] = k
                    y = self.next(v, x)
                    if y < 0:
                        if ~y != (k + 1) % n:
                            raise InvalidGraph(
                                f"sector {k} closes at ray {~y}; rays are out of counterclockwise order"
                            )
                        break
                    v, x = y, v
        return faces

    def face(self, v: int, x: int) -> int:
        return self.faces[(v, x)]

    def face_cw(self, v: int, x: int) -> int:
        return self.faces[(v, self.prev(v, x))]

    def edge_faces(self, v: int, w: int) -> Tuple[int, int]:
        """(left, right) sectors of the tree edge traversed from ``v`` to ``w``."""
        return self.faces[(v, w)], self.faces[(w, v)]

    def check(self) -> None:
        n = self.n
        if not self.rot:
            raise InvalidGraph("empty tree")
        rays = self.ray_ids()
        if rays != list(range(n)):
            raise InvalidGraph(f"expected rays 0..{n - 1} once each, got {rays}")
        nedges = 0
        for v, items in self.rot.items():
            if len(set(items)) != len(items):
                raise InvalidGraph(f"vertex {v} repeats an item in its rotation")
            for w in items:
                if w >= 0:
                    if w not in self.rot or v not in self.rot[w]:
                        raise InvalidGraph(f"edge {v}-{w} is not mutual")
                    if w == v:
                        raise InvalidGraph(f"loop at {v}")
                    nedges += 1
        if nedges // 2 != len(self.rot) - 1:
            raise InvalidGraph("undirected view is not a tree")
        seen = {next(iter(self.rot))}
        stack = list(seen)
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self.rot):
            raise InvalidGraph("undirected view is disconnected")
        faces = self.faces
        total = sum(len(items) for items in self.rot.values())
        if len(faces) != total:
            raise InvalidGraph("face tracing did not cover every corner")
        J = self.frame.subdominant
        for v, w in self.edges():
            a, b = self.edge_faces(v, w)
            if a in J and b in J:
                raise InvalidGraph(f"edge {v}-{w} separates two subdominant sectors {a}, {b}")
        for v, items in self.rot.items():
            if len(items) == 1 and items[0] >= 0:
                raise InvalidGraph(f"vertex {v} is a finite leaf")

    # -- directed labeled edges ----------------------------------------------

    def gamma_edges(self) -> List[Edge]:
        """Directed labeled edges between finite vertices (ray tails excluded)."""
        J = self.frame.subdominant
        out = []
        for v, w in self.edges():
            a, b = self.edge_faces(v, w)
            if a not in J:
                out.append(Edge(v, w, a))
            if b not in J:
                out.append(Edge(w, v, b))
        return out

    def multiplicity(self, v: int, w: int) -> int:
        J = self.frame.subdominant
        a, b = self.edge_faces(v, w)
        return (a not in J) + (b not in J)

    def gamma_degree(self, v: int) -> int:
        """Degree in the directed graph, counting each ray by the edges of its tail."""
        J = self.frame.subdominant
        deg = 0
        for x in self.rot[v]:
            deg += (self.face(v, x) not in J) + (self.face_cw(v, x) not in J)
        return deg

    # -- rewriting helpers --------------------------------------------------

    def copy_rot(self) -> Dict[int, List[int]]:
        return {v: list(items) for v, items in self.rot.items()}

    def new_vertex_id(self) -> int:
        return max(self.rot) + 1

    def trimmed(self) -> "PlaneTree":
        """Drop chain vertices between the outermost junction of a branch and its ray."""
        rot = self.copy_rot()
        changed = True
        while changed:
            changed = False
            for v in list(rot):
                items = rot[v]
                if len(items) == 2 and len(rot) > 1:
                    rays_here = [x for x in items if x < 0]
                    if len(rays_here) == 1:
                        (w,) = [x for x in items if x >= 0]
                        wi = rot[w]
                        wi[wi.index(v)] = rays_here[0]
                        del rot[v]
                        changed = True
        if len(rot) == len(self.rot):
            return self
        return PlaneTree(self.frame, rot, check=False)

    # -- canonical form ------------------------------------------------------

    def canonical_order(self) -> Tuple[Dict[int, int], Dict[int, Tuple[int, ...]]]:
        """Breadth-first renumbering from the owner of ray 0.

        Returns ``(old -> new ids, new rotation)`` where each new rotation starts
        at the item pointing back to the BFS parent (ray 0 at the root).
        """
        root = self.ray_owner(0)
        parent_item = {root: ray(0)}
        newid = {root: 0}
        queue = deque([root])
        rot_new = {}
        while queue:
            v = queue.popleft()
            items = self.rot[v]
            i0 = self.index(v, parent_item[v])
            ordered = [items[(i0 + t) % len(items)] for t in range(len(items))]
            for x in ordered[1:]:
                if x >= 0 and x not in newid:
                    newid[x] = len(newid)
                    parent_item[x] = v
                    queue.append(x)
            rot_new[v] = ordered
        relabelled = {
            newid[v]: tuple(newid[x] if x >= 0 else x for x in ordered) for v, ordered in rot_new.items()
        }
        return newid, relabelled

    def canonical(self) -> "PlaneTree":
        t = self.trimmed()
        _, rot = t.canonical_order()
        out = PlaneTree(self.frame, rot, check=False)
        if t._faces is not None:
            out._faces = None
        return out

    def key(self) -> Tuple:
        """Hashable canonical identity (frame plus canonical rotations)."""
        _, rot = self.trimmed().canonical_order()
        return (self.n, tuple(sorted(self.frame.subdominant)), tuple(rot[i] for i in range(len(rot))))

    def __eq__(self, other):
        return isinstance(other, PlaneTree) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PlaneTree({self.frame}, {dict(sorted(self.rot.items()))})"

    # -- conversion ------------------------------------------------------------

    def to_cellgraph(self, canonical: bool = True) -> CellGraph:
        t = self.canonical() if canonical else self
        J = t.frame.subdominant
        gedges = sorted(t.gamma_edges())
        eid = {}
        edges = {}
        for i, e in enumerate(gedges):
            edges[i] = e
            eid[(e.tail, e.head, e.label)] = i
        rays = {}
        rotation = {}
        for v in sorted(t.rot):
            darts = []
            for x in t.rot[v]:
                if x < 0:
                    rays[~x] = v
                    darts.append(Dart("r", ~x))
                    continue
                cw = t.face_cw(v, x)
                ccw = t.face(v, x)
                if cw not in J:
                    darts.append(Dart("e", eid[(x, v, cw)], "h"))
                if ccw not in J:
                    darts.append(Dart("e", eid[(v, x, ccw)], "t"))
            k = min(range(len(darts)), key=lambda i: darts[i].sort_key())
            rotation[v] = tuple(darts[k:] + darts[:k])
        return CellGraph(
            frame=t.frame,
            vertices=tuple(sorted(t.rot)),
            edges=edges,
            rays=rays,
            rotation=rotation,
            anchor=(0, 0),
        )

    @classmethod
    def from_cellgraph(cls, g: CellGraph, check: bool = True) -> "PlaneTree":
        """Recover the plane tree; raises :class:`InvalidGraph` if ``g`` is not a standard graph."""
        sectors = g.ray_sectors
        if sectors is None:
            raise InvalidGraph("unbounded faces do not close up around the anchor")
        rot = {}
        for v in g.vertices:
            items = []
            for d in g.rotation[v]:
                if d.kind == "r":
                    items.append(~sectors[d.id])
                else:
                    e = g.edges[d.id]
                    items.append(e.head if d.end == "t" else e.tail)
            while len(items) > 1 and items[0] == items[-1]:
                items.pop()
            collapsed = [x for i, x in enumerate(items) if i == 0 or x != items[i - 1]]
            rot[v] = collapsed
        t = cls(g.frame, rot, check=True)
        if check:
            mine = Counter(t.gamma_edges())
            theirs = Counter(g.edges.values())
            if mine != theirs:
                raise InvalidGraph("edge labels or directions disagree with the face sectors")
            for v in g.vertices:
                if _dart_signature(g, v) != _tree_signature(t, v):
                    raise InvalidGraph(f"rotation at vertex {v} disagrees with the labeling")
        return t


def _cyclic_min(seq):
    seq = list(seq)
    if not seq:
        return ()
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def _dart_signature(g: CellGraph, v: int):
    sig = []
    for d in g.rotation[v]:
        if d.kind == "r":
            sig.append(("r",))
        else:
            e = g.edges[d.id]
            other = e.head if d.end == "t" else e.tail
            sig.append((d.end, other, e.label))
    return _cyclic_min(sig)


def _tree_signature(t: PlaneTree, v: int):
    J = t.frame.subdominant
    sig = []
    for x in t.rot[v]:
        if x < 0:
            sig.append(("r",))
            continue
        cw, ccw = t.face_cw(v, x), t.face(v, x)
        if cw not in J:
            sig.append(("h", x, cw))
        if ccw not in J:
            sig.append(("t", x, ccw))
    return _cyclic_min(sig)


def as_tree(g) -> PlaneTree:
    """Accept either representation."""
    if isinstance(g, PlaneTree):
        return g
    cached = g.__dict__.get("_tree")
    if cached is None:
        cached = PlaneTree.from_cellgraph(g)
        g.__dict__["_tree"] = cached
    return cached
