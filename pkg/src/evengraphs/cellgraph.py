"""The embedded, directed, labeled graph of a cell decomposition.

A :class:`CellGraph` stores what the ``.sgr`` format stores: vertices, directed
labeled edges (each a pair of twin darts), rays to infinity (unpaired darts),
a counterclockwise rotation of darts at every vertex, and an anchor fixing
which ray bounds which Stokes sector.  Nothing here assumes the graph obeys the
labeling laws; :mod:`evengraphs.validate` checks those.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

from .frame import SectorFrame


class Edge(NamedTuple):
    tail: int
    head: int
    label: int


class Dart(NamedTuple):
    """``kind`` is ``"e"`` or ``"r"``; ``end`` is ``"t"``/``"h"`` for edges, ``""`` for rays."""

    kind: str
    id: int
    end: str = ""

    def __str__(self) -> str:
        if self.kind == "r":
            return f"r{self.id}"
        return f"e{self.id}.{self.end}"

    @property
    def is_ray(self) -> bool:
        return self.kind == "r"

    def twin(self) -> "Dart":
        assert self.kind == "e"
        return Dart("e", self.id, "h" if self.end == "t" else "t")

    def sort_key(self) -> tuple:
        if self.kind == "e":
            return (0, self.id, 0 if self.end == "t" else 1)
        return (1, self.id, 0)

    @classmethod
    def parse(cls, token: str) -> "Dart":
        if token.startswith("r"):
            return cls("r", int(token[1:]))
        if token.startswith("e") and token[-2:] in (".t", ".h"):
            return cls("e", int(token[1:-2]), token[-1])
        raise ValueError(f"bad dart token {token!r}")


@dataclass(frozen=True)
class Face:
    """One face of the rotation system.

    ``darts`` lists darts whose left-hand corner lies in the face, in traversal
    order.  Unbounded faces end with their outgoing ray dart.
    """

    darts: Tuple[Dart, ...]
    bounded: bool
    sector: Optional[int] = None
    bigon: Optional[int] = None
    label: Optional[int] = None


@dataclass(frozen=True, eq=False)
class CellGraph:
    frame: SectorFrame
    vertices: Tuple[int, ...]
    edges: Mapping[int, Edge]
    rays: Mapping[int, int]
    rotation: Mapping[int, Tuple[Dart, ...]]
    anchor: Tuple[int, int]

    # -- structural helpers -------------------------------------------------

    def owner(self, d: Dart) -> int:
        if d.kind == "r":
            return self.rays[d.id]
        e = self.edges[d.id]
        return e.tail if d.end == "t" else e.head

    @cached_property
    def _positions(self) -> Dict[Dart, Tuple[int, int]]:
        pos = {}
        for v, darts in self.rotation.items():
            for i, d in enumerate(darts):
                pos[d] = (v, i)
        return pos

    def ccw_next(self, d: Dart) -> Dart:
        v, i = self._positions[d]
        rot = self.rotation[v]
        return rot[(i + 1) % len(rot)]

    def ccw_prev(self, d: Dart) -> Dart:
        v, i = self._positions[d]
        rot = self.rotation[v]
        return rot[(i - 1) % len(rot)]

    def darts(self) -> List[Dart]:
        out = []
        for eid in sorted(self.edges):
            out.append(Dart("e", eid, "t"))
            out.append(Dart("e", eid, "h"))
        out.extend(Dart("r", rid) for rid in sorted(self.rays))
        return out

    def ray_darts(self) -> List[Dart]:
        return [Dart("r", rid) for rid in sorted(self.rays)]

    def gamma_degree(self, v: int) -> int:
        """Number of edge darts at ``v`` (rays excluded)."""
        return sum(1 for d in self.rotation[v] if d.kind == "e")

    # -- faces --------------------------------------------------------------

    def face_step(self, d: Dart) -> Optional[Dart]:
        """Next dart along the face on the left of ``d``; None when ``d`` is a ray."""
        if d.kind == "r":
            return None
        return self.ccw_prev(d.twin())

    @cached_property
    def raw_faces(self) -> List[Tuple[Tuple[Dart, ...], bool]]:
        """Orbits of the face permutation: (darts, bounded) without sector data."""
        seen = set()
        faces = []
        # Unbounded faces start just clockwise of an incoming ray.
        for r in self.ray_darts():
            start = self.ccw_prev(r)
            cycle = []
            d = start
            while d is not None and d not in seen:
                seen.add(d)
                cycle.append(d)
                d = self.face_step(d)
            faces.append((tuple(cycle), False))
        for d0 in self.darts():
            if d0 in seen:
                continue
            cycle = []
            d = d0
            while d not in seen:
                seen.add(d)
                cycle.append(d)
                d = self.face_step(d)
            faces.append((tuple(cycle), True))
        return faces

    @cached_property
    def ray_sectors(self) -> Optional[Dict[int, int]]:
        """Sector of the face counterclockwise of each ray, propagated from the anchor.

        None when the unbounded faces do not close up into one cyclic sequence
        through all rays.
        """
        n = self.frame.n
        # face ending at outgoing ray r_out starts just clockwise of incoming ray r_in;
        # walking around infinity counterclockwise goes r_out -> r_in
        following = {}
        for cycle, bounded in self.raw_faces:
            if bounded or not cycle:
                continue
            last = cycle[-1]
            if last.kind != "r":
                return None
            first_owner_dart = self.ccw_next(cycle[0])
            if first_owner_dart.kind != "r":
                return None
            following[last.id] = first_owner_dart.id
        rid, sector = self.anchor
        if rid not in self.rays:
            return None
        sectors = {}
        cur, k = rid, sector % n
        while cur not in sectors:
            sectors[cur] = k
            if cur not in following:
                return None
            cur = following[cur]
            k = (k + 1) % n
        if len(sectors) != len(self.rays) or cur != rid:
            return None
        return sectors

    def faces(self) -> List[Face]:
        """All faces with sector indices (unbounded) or bigon ids (bounded)."""
        sectors = self.ray_sectors or {}
        out = []
        bigon = 0
        for cycle, bounded in self.raw_faces:
            labels = {self.edges[d.id].label for d in cycle if d.kind == "e"}
            label = labels.pop() if len(labels) == 1 else None
            if bounded:
                out.append(Face(cycle, True, bigon=bigon, label=label))
                bigon += 1
            else:
                sector = sectors.get(cycle[-1].id) if cycle and cycle[-1].kind == "r" else None
                if sector is not None and sector in self.frame.subdominant:
                    label = sector
                out.append(Face(cycle, False, sector=sector, label=label))
        return out

    # -- identity -----------------------------------------------------------

    def serialize(self) -> str:
        from .sgr import serialize

        return serialize(self)

    def __eq__(self, other):
        if not isinstance(other, CellGraph):
            return NotImplemented
        return (
            self.frame == other.frame
            and tuple(self.vertices) == tuple(other.vertices)
            and dict(self.edges) == dict(other.edges)
            and dict(self.rays) == dict(other.rays)
            and {v: tuple(r) for v, r in self.rotation.items()}
            == {v: tuple(r) for v, r in other.rotation.items()}
            and tuple(self.anchor) == tuple(other.anchor)
        )

    def __hash__(self):
        return hash(self.serialize())

    def __repr__(self) -> str:
        return (
            f"CellGraph({self.frame}, vertices={len(self.vertices)}, "
            f"edges={len(self.edges)}, rays={len(self.rays)})"
        )
