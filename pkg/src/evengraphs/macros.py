"""Composite rewrites on ivy-form graphs, built from squared even actions.

Each rewrite acts on two cyclically adjacent structures at a root, at labels
``j-`` and ``j`` (and on their images under the central symmetry).  With
``L`` the tree distance from the root to the Y-junction involved:

* the Y comes first (at ``j-``): ``E_j^{+2}`` L times, then ``E_{j-}^{+2}`` L times;
* the Y comes second (at ``j``): ``E_{j-}^{-2}`` L times, then ``E_j^{-2}`` L times.

Applied to a Y next to a V this interchanges them, next to an I it turns the
Y into a V, and next to another Y it merges the two stems into one Y.  The
expected descriptor is checked after every rewrite.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .braid import FORWARD, INVERSE, even_action_sq_tree
from .errors import InvalidGraph, PreconditionFailed
from .normalize import Arm, ivy_descriptor, is_ivy
from .structures import I, V, Y
from .tree import PlaneTree, as_tree
from .validate import validate

Step = Tuple[int, int]  # (label, +2 or -2)


def _pair(t: PlaneTree, root: int, position: int) -> Tuple[Arm, Arm]:
    if not is_ivy(t):
        raise PreconditionFailed("graph is not in ivy form")
    d = ivy_descriptor(t)
    if root not in d.roots:
        raise PreconditionFailed(f"vertex {root} is not a root (roots are {list(d.roots)})")
    arms = d.arms[d.roots.index(root)]
    if not arms:
        raise PreconditionFailed(f"root {root} carries no structures")
    a, b = arms[position % len(arms)], arms[(position + 1) % len(arms)]
    if len(arms) < 2 or t.frame.succ(a.j) != b.j:
        raise PreconditionFailed(f"structures at position {position} are not at consecutive labels")
    return a, b


def _steps(a: Arm, b: Arm, keep_first: bool) -> List[Step]:
    if a.kind == Y and not (b.kind == Y and keep_first):
        L = a.length + 1
        return [(b.j, +2)] * L + [(a.j, +2)] * L
    L = b.length + 1
    return [(a.j, -2)] * L + [(b.j, -2)] * L


def _labels(d) -> Dict[int, Tuple[str, int]]:
    return {a.j: (a.kind, a.length) for arms in d.arms for a in arms}


def _run(t: PlaneTree, steps: List[Step]) -> PlaneTree:
    for j, e in steps:
        t = even_action_sq_tree(t, j, FORWARD if e > 0 else INVERSE)
    return t.canonical()


def _rewrite(g, root: int, position: int, kinds, expect, keep_first: bool = False):
    t = as_tree(g).canonical()
    a, b = _pair(t, root, position)
    if (a.kind, b.kind) not in kinds:
        raise PreconditionFailed(f"structures at position {position} are {a.kind},{b.kind}")
    before = ivy_descriptor(t)
    out = _run(t, _steps(a, b, keep_first))
    frame = t.frame
    want = _labels(before)
    for x, y in ((a.j, b.j), (frame.shift(a.j), frame.shift(b.j))):
        want[x], want[y] = expect(want[x], want[y])
    if not is_ivy(out):
        raise InvalidGraph("rewrite left ivy form")
    after = ivy_descriptor(out)
    if _labels(after) != want or after.center_type != before.center_type:
        raise InvalidGraph(f"rewrite produced {after.text()!r}, expected arms {want}")
    if after.bounded_faces != before.bounded_faces:
        raise InvalidGraph("rewrite changed the number of bounded faces")
    rep = validate(out)
    if not rep.ok:
        raise InvalidGraph("rewrite output fails validation: " + rep.text())
    return out if isinstance(g, PlaneTree) else out.to_cellgraph()


def swap_YV_at_root(g, root: int, position: int):
    """Interchange an adjacent Y and V at ``root``."""
    return _rewrite(g, root, position, {(Y, V), (V, Y)}, lambda x, y: (y, x))


def convert_Y_next_to_I(g, root: int, position: int):
    """Turn the Y of an adjacent I,Y pair into a V."""

    def expect(x, y):
        return ((V, 0), y) if x[0] == Y else (x, (V, 0))

    return _rewrite(g, root, position, {(I, Y), (Y, I)}, expect)


def merge_YY(g, root: int, position: int):
    """Merge two adjacent Y-structures; the first keeps the combined stem."""
    return _rewrite(
        g, root, position, {(Y, Y)}, lambda x, y: ((Y, x[1] + y[1] + 1), (V, 0)), keep_first=True
    )


def macro_steps(g, root: int, position: int, keep_first: bool = False) -> List[Step]:
    """The generator sequence a rewrite at ``(root, position)`` would apply."""
    t = as_tree(g).canonical()
    a, b = _pair(t, root, position)
    return _steps(a, b, keep_first)
