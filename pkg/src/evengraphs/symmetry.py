"""Central symmetry ``z -> -z``: sectors and labels shift by ``nu``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .cellgraph import CellGraph, Dart
from .errors import NotSymmetric
from .tree import PlaneTree

CENTER_VERTEX = "CenterVertex"
CENTER_DOUBLE_EDGE = "CenterDoubleEdge"


@dataclass(frozen=True)
class Involution:
    """The automorphism ``sigma`` on tree vertices, with its center."""

    mapping: Dict[int, int]
    center_type: str
    center: Tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v]


def shifted(t: PlaneTree) -> PlaneTree:
    """The same tree with every ray (and hence every sector) relabelled by ``+nu``."""
    n, nu = t.n, t.frame.nu
    rot = {v: [~((~x + nu) % n) if x < 0 else x for x in items] for v, items in t.rot.items()}
    return PlaneTree(t.frame, rot, check=False)


def _involution(t: PlaneTree) -> Optional[Involution]:
    t = t.trimmed()
    s = shifted(t)
    ids_t, rot_t = t.canonical_order()
    ids_s, rot_s = s.canonical_order()
    if rot_t != rot_s:
        return None
    back = {c: v for v, c in ids_t.items()}
    sigma = {v: back[ids_s[v]] for v in t.vertices()}
    fixed = tuple(v for v in t.vertices() if sigma[v] == v)
    if len(fixed) == 1:
        return Involution(sigma, CENTER_VERTEX, fixed)
    if not fixed:
        swapped = [(v, w) for v, w in t.edges() if sigma[v] == w]
        if len(swapped) == 1:
            return Involution(sigma, CENTER_DOUBLE_EDGE, swapped[0])
    return None


def cell_involution(g: CellGraph) -> Optional[Involution]:
    """Rotation-preserving automorphism of a cell graph shifting labels by ``nu``.

    Works on the darts directly, so it applies to graphs that are not standard.
    """
    frame = g.frame
    sectors = g.ray_sectors
    if sectors is None:
        return None
    by_sector = {k: rid for rid, k in sectors.items()}
    r0 = g.anchor[0]
    img = by_sector.get(frame.shift(sectors[r0]))
    if img is None:
        return None
    dmap: Dict[Dart, Dart] = {}
    vmap: Dict[int, int] = {}
    queue = [(Dart("r", r0), Dart("r", img))]
    while queue:
        a, b = queue.pop()
        va, vb = g.owner(a), g.owner(b)
        if va in vmap:
            if vmap[va] != vb or dmap.get(a) != b:
                return None
            continue
        vmap[va] = vb
        ra, rb = g.rotation[va], g.rotation[vb]
        if len(ra) != len(rb):
            return None
        i, j = ra.index(a), rb.index(b)
        for t in range(len(ra)):
            x, y = ra[(i + t) % len(ra)], rb[(j + t) % len(rb)]
            if x.kind != y.kind:
                return None
            if x.kind == "r":
                if sectors[y.id] != frame.shift(sectors[x.id]):
                    return None
            else:
                ex, ey = g.edges[x.id], g.edges[y.id]
                if x.end != y.end or ey.label != frame.shift(ex.label):
                    return None
                queue.append((x.twin(), y.twin()))
            if dmap.setdefault(x, y) != y:
                return None
    if len(vmap) != len(g.vertices) or len(set(vmap.values())) != len(vmap):
        return None
    if any(vmap[vmap[v]] != v for v in vmap):
        return None
    fixed = tuple(v for v in g.vertices if vmap[v] == v)
    if len(fixed) == 1:
        return Involution(vmap, CENTER_VERTEX, fixed)
    pairs = {tuple(sorted((e.tail, e.head))) for e in g.edges.values() if vmap[e.tail] == e.head}
    if not fixed and len(pairs) == 1:
        return Involution(vmap, CENTER_DOUBLE_EDGE, pairs.pop())
    return None


def _any_involution(g) -> Optional[Involution]:
    if isinstance(g, CellGraph):
        return cell_involution(g)
    return _involution(g)


def central_involution(g) -> Involution:
    """``sigma`` as a vertex map; raises :class:`NotSymmetric`."""
    inv = _any_involution(g)
    if inv is None:
        raise NotSymmetric("graph is not centrally symmetric")
    return inv


def is_symmetric(g) -> bool:
    return _any_involution(g) is not None


def require_symmetric(g) -> None:
    central_involution(g)


def center_type(g) -> str:
    return central_involution(g).center_type


def roots(g) -> Tuple[int, ...]:
    """Root junctions: the center vertex, or both ends of the central double edge."""
    return central_involution(g).center
