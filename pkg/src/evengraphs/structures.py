"""Junctions and the I/V/Y structures attached at ``j``-junctions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .cellgraph import Edge
from .errors import InvalidLabel
from .tree import PlaneTree, as_tree

I, V, Y = "I", "V", "Y"


@dataclass(frozen=True)
class Structure:
    """The structure at a ``j``-junction.

    ``block`` is the run of rotation items at the junction (counterclockwise)
    that belong to the structure; it is one item for I and Y, two rays for V.
    ``forward``/``backward`` are the items along which the structure moves
    under the squared even action and its inverse.
    """

    kind: str
    j: int
    junction: int
    yjunction: Optional[int]
    block: Tuple[int, ...]
    forward: int
    backward: int
    members: Tuple[Edge, ...]


def face_path(t: PlaneTree, k: int) -> List[Tuple[int, int, int]]:
    """Boundary of sector ``k`` walked counterclockwise around the face.

    Enters along ray ``k + 1`` and leaves along ray ``k``; each entry is
    ``(vertex, in_item, out_item)``.  For a dominant sector this is the path
    of ``k``-edges in their direction.
    """
    n = t.n
    v = t.ray_owner((k + 1) % n)
    x_in = ~((k + 1) % n)
    path = []
    while True:
        x_out = t.prev(v, x_in)
        path.append((v, x_in, x_out))
        if x_out < 0:
            if ~x_out != k % n:
                raise AssertionError(f"face {k} left along ray {~x_out}")
            return path
        v, x_in = x_out, v


def junctions(g) -> List[Tuple[int, int]]:
    """Vertices of tree degree at least 3, with their degrees."""
    t = as_tree(g)
    return [(v, t.degree(v)) for v in t.vertices() if t.degree(v) >= 3]


def structure_at(g, j: int) -> Optional[Structure]:
    """The structure at the ``j``-junction, or None when there is no ``j``-junction."""
    t = as_tree(g)
    frame = t.frame
    j %= frame.n
    if not frame.is_dominant(j):
        raise InvalidLabel(f"label {j} is subdominant; there are no {j}-edges")
    jp = frame.succ(j)
    pj = face_path(t, j)
    pjp = face_path(t, jp)
    on_jp = {v: (x_in, x_out) for v, x_in, x_out in pjp}
    common = [(idx, v) for idx, (v, _, _) in enumerate(pj) if v in on_jp]
    if not common:
        return None
    meet_idx, meet = common[0]
    sep_idx, sep = common[-1]
    _, x_in, x_out = pj[sep_idx]
    y_in, y_out = on_jp[sep]
    items = t.rot[sep]
    i0 = items.index(x_in)
    block = []
    i = i0
    while True:
        block.append(items[i])
        if items[i] == y_out:
            break
        i = (i + 1) % len(items)
        if i == i0:
            raise AssertionError("structure block does not close")
    if frame.is_dominant(j + 1):
        kind = I
    elif meet == sep:
        kind = V
    else:
        kind = Y
    members = []
    for v, a, b in pj[: sep_idx + 1]:
        if a >= 0:
            members.append(Edge(a, v, j))
    seen_sep = False
    for v, a, b in pjp:
        if v == sep:
            seen_sep = True
        if seen_sep and b >= 0:
            members.append(Edge(v, b, jp))
    return Structure(
        kind=kind,
        j=j,
        junction=sep,
        yjunction=meet if kind == Y else None,
        block=tuple(block),
        forward=x_out,
        backward=y_in,
        members=tuple(members),
    )


def j_junction(g, j: int) -> Optional[Tuple[int, Structure]]:
    s = structure_at(g, j)
    return None if s is None else (s.junction, s)


def all_structures(g) -> List[Structure]:
    t = as_tree(g)
    out = []
    for j in t.frame.dominant:
        s = structure_at(t, j)
        if s is not None:
            out.append(s)
    return out


def y_junctions(g) -> set:
    return {s.yjunction for s in all_structures(g) if s.kind == Y}
