"""Ivy form, reduction to a class representative, and the component invariant."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .braid import FORWARD, INVERSE, ActionLog, LogEntry, even_action_sq_tree
from .errors import NonTermination, NotSymmetric, PreconditionFailed
from .metrics import bounded_faces, distances, root_metric
from .structures import V, Structure, all_structures, y_junctions
from .symmetry import central_involution, is_symmetric
from .tree import PlaneTree, as_tree


class Arm(NamedTuple):
    kind: str
    j: int
    length: int


@dataclass(frozen=True)
class IvyDescriptor:
    """Roots, center type and per-root cyclic arm lists of an ivy-form graph.

    ``length`` counts chain vertices between the root and the outermost
    junction of the structure (its Y-junction for Y, else the root itself).
    """

    frame: object
    center_type: str
    roots: Tuple[int, ...]
    arms: Tuple[Tuple[Arm, ...], ...]
    bounded_faces: object

    def kinds(self, root: int = 0) -> Tuple[str, ...]:
        return tuple(a.kind for a in self.arms[root])

    def text(self) -> str:
        lines = [f"frame {self.frame}", f"center {self.center_type}", f"bounded_faces {self.bounded_faces}"]
        for r, arms in zip(self.roots, self.arms):
            lines.append(f"root {r}: " + " ".join(f"{a.kind}{a.j}/{a.length}" for a in arms))
        return "\n".join(lines) + "\n"


def _roots(t: PlaneTree) -> Tuple[int, ...]:
    return central_involution(t).center


def non_ivy_junctions(t: PlaneTree) -> List[int]:
    roots = set(_roots(t))
    ys = y_junctions(t)
    return [v for v in t.vertices() if t.degree(v) >= 3 and v not in roots and v not in ys]


def is_ivy(g) -> bool:
    """True iff every non-root junction is a Y-junction; False for asymmetric graphs."""
    t = as_tree(g)
    if not is_symmetric(t):
        return False
    return not non_ivy_junctions(t)


def _arm(t: PlaneTree, s: Structure, root: int) -> Arm:
    outer = s.yjunction if s.yjunction is not None else s.junction
    d = distances(t, [root])[outer]
    return Arm(s.kind, s.j, max(d - 1, 0))


def ivy_descriptor(g) -> IvyDescriptor:
    t = as_tree(g).canonical()
    inv = central_involution(t)
    if non_ivy_junctions(t):
        raise PreconditionFailed("graph is not in ivy form")
    per_root = []
    for r in inv.center:
        items = t.rot[r]
        here = [s for s in all_structures(t) if s.junction == r]
        here.sort(key=lambda s: items.index(s.block[0]))
        arms = [_arm(t, s, r) for s in here]
        if arms:
            i0 = min(range(len(arms)), key=lambda i: arms[i].j)
            arms = arms[i0:] + arms[:i0]
        per_root.append((r, tuple(arms)))
    per_root.sort(key=lambda ra: (min((a.j for a in ra[1]), default=0), ra[0]))
    return IvyDescriptor(
        frame=t.frame,
        center_type=inv.center_type,
        roots=tuple(r for r, _ in per_root),
        arms=tuple(a for _, a in per_root),
        bounded_faces=bounded_faces(t),
    )


def _ivy_step(t: PlaneTree) -> Tuple[int, int]:
    """The generator moving the farthest non-ivy junction one step toward its root."""
    frame = t.frame
    roots = _roots(t)
    dist = distances(t, roots)
    bad = non_ivy_junctions(t)
    far = max(dist[v] for v in bad)
    u1 = min(v for v in bad if dist[v] == far)
    (v,) = [w for w in t.neighbors(u1) if dist[w] == far - 1] or [None]
    if v is None:
        raise AssertionError("farthest junction has no neighbor closer to the root")
    back, out = t.edge_faces(u1, v)  # left of u1->v, left of v->u1
    if frame.is_dominant(back):
        return back, +2
    return frame.pred(out), -2


def to_ivy(g) -> Tuple[object, ActionLog]:
    """Drive ``g`` to ivy form; the metric must drop by at least two per step."""
    t = as_tree(g).canonical()
    if not is_symmetric(t):
        raise NotSymmetric("graph is not centrally symmetric")
    log = ActionLog()
    start = metric = root_metric(t)
    steps = 0
    while non_ivy_junctions(t):
        j, exponent = _ivy_step(t)
        nxt = even_action_sq_tree(t, j, FORWARD if exponent > 0 else INVERSE).canonical()
        new_metric = root_metric(nxt)
        if new_metric > metric - 2:
            raise NonTermination(f"E {j} {exponent:+d} changed the root metric from {metric} to {new_metric}")
        steps += 1
        if 2 * steps > start:
            raise NonTermination("more steps than half the initial root metric")
        t, metric = nxt, new_metric
        log.record(LogEntry("E", j, exponent), t)
    return _same_kind(g, t), log


def _same_kind(g, t: PlaneTree):
    return t if isinstance(g, PlaneTree) else t.to_cellgraph()


# -- reduction to the class representative -----------------------------------

REP_SEARCH_LIMIT = 200_000


class CenterTag(NamedTuple):
    center: str

    def __str__(self):
        return f"CenterTag({self.center})"


class ZeroCount(NamedTuple):
    k: int

    def __str__(self):
        return f"ZeroCount({self.k})"


def component_invariant(g):
    """Center type for frames with adjacent dominant sectors, else the number of zeros."""
    t = as_tree(g)
    if t.frame.alternating:
        # symmetry is still required of the input
        central_involution(t)
        return ZeroCount(bounded_faces(t))
    return CenterTag(central_involution(t).center_type)


def _walks(d, frame, kinds_from, kinds_to):
    """Candidate (root, position, direction, distance) walks of a structure through V-arms."""
    out = []
    for r, arms in zip(d.roots, d.arms):
        m = len(arms)
        for p in range(m):
            if arms[p].kind not in kinds_from:
                continue
            for direction in (+1, -1):
                q, dist = p, 0
                while dist < m - 1:
                    nq = (q + direction) % m
                    lo, hi = (q, nq) if direction > 0 else (nq, q)
                    if frame.succ(arms[lo].j) != arms[hi].j:
                        break
                    dist += 1
                    if arms[nq].kind in kinds_to:
                        out.append((dist, r, p, direction))
                        break
                    if arms[nq].kind != V:
                        break
                    q = nq
    return sorted(out, key=lambda w: (w[0], d.roots.index(w[1]), w[2], -w[3]))


def _macro(t, log, name, root, position):
    from . import macros

    fn = {"swapYV": macros.swap_YV_at_root, "convYI": macros.convert_Y_next_to_I, "mergeYY": macros.merge_YY}[name]
    t = fn(t, root, position).canonical()
    log.record(LogEntry("MACRO", macro=name, root=root, position=position), t)
    return t


def _y_count(t) -> int:
    return sum(1 for s in all_structures(t) if s.kind == "Y")


def _eliminate(t: PlaneTree, log: ActionLog, partner_kinds, final_macro: str, keep: int) -> PlaneTree:
    """Walk Y-structures through V-arms until one meets a partner, then rewrite.

    One rewrite per round, always on the shortest walk, so positions are
    recomputed from the current descriptor every time.
    """
    frame = t.frame
    guard = 4 * frame.n * (len(t.rot) + 1)
    while _y_count(t) > keep:
        guard -= 1
        if guard < 0:
            raise NonTermination("Y-elimination did not finish")
        d = ivy_descriptor(t)
        walks = _walks(d, frame, {"Y"}, partner_kinds)
        if not walks:
            raise AssertionError("no Y-structure can reach a partner through V-arms:\n" + d.text())
        dist, root, p, direction = walks[0]
        m = len(d.arms[d.roots.index(root)])
        pos = p if direction > 0 else (p - 1) % m
        t = _macro(t, log, final_macro if dist == 1 else "swapYV", root, pos)
    return t


def _representative_search(t: PlaneTree, log: ActionLog) -> PlaneTree:
    """Move to the smallest graph (vertex count, canonical key) reachable without growing."""
    from collections import deque

    frame = t.frame
    bound = len(t.rot)
    start = t.key()
    parent = {start: None}
    graphs = {start: t}
    queue = deque([start])
    while queue:
        k = queue.popleft()
        for j in frame.generators() + tuple(frame.shift(x) for x in frame.generators()):
            for direction in (+2, -2):
                u = even_action_sq_tree(graphs[k], j, FORWARD if direction > 0 else INVERSE).canonical()
                if len(u.rot) > bound:
                    continue
                ku = u.key()
                if ku in parent:
                    continue
                parent[ku] = (k, j, direction)
                graphs[ku] = u
                queue.append(ku)
                if len(parent) > REP_SEARCH_LIMIT:
                    from .errors import ResourceGuard

                    raise ResourceGuard("representative search exceeds its limit")
    best = min(parent, key=lambda k: (len(graphs[k].rot), k))
    path = []
    k = best
    while parent[k] is not None:
        k0, j, direction = parent[k]
        path.append((j, direction))
        k = k0
    for j, direction in reversed(path):
        t = even_action_sq_tree(t, j, FORWARD if direction > 0 else INVERSE).canonical()
        log.record(LogEntry("E", j, direction), t)
    return t


def reduce(g) -> Tuple[object, ActionLog]:
    """Canonical representative of the monodromy class of ``g``, with the log reaching it."""
    t, log = to_ivy(as_tree(g))
    t = t.canonical()
    if t.frame.alternating:
        t = _eliminate(t, log, {"Y"}, "mergeYY", keep=2)
    else:
        t = _eliminate(t, log, {"I"}, "convYI", keep=0)
    t = _representative_search(t, log)
    return _same_kind(g, t), log
