"""Squared actions computed by lifting loops through the cell decomposition.

This is an independent route to ``E_j^2``: each dominant label ``l`` gives a
permutation ``pi_l`` of the poles (follow the outgoing ``l``-edge, or stay
put where the ``l``-edge is a removed loop).  A pure braid conjugates the
loops ``gamma_j`` and ``gamma_{j+}`` by their product, so the new permutations
are conjugates of the old ones.  The new graph is rebuilt from the new
permutations alone, using the fixed counterclockwise pattern
``out_l, in_l`` for increasing ``l`` at every pole, and is then checked to be a
standard graph with the same rays.

Ray tails are infinite; they are handled arithmetically rather than stored.
A tail vertex is ``(k, i)`` for ray ``k`` at depth ``i >= 1``.
"""

from __future__ import annotations

from typing import Callable, Dict, Hashable, List

from .errors import InvalidGraph
from .tree import PlaneTree

DEPTH = 8


class Poles:
    """Permutations ``pi_l`` on the finite poles plus the infinite ray tails."""

    def __init__(self, t: PlaneTree):
        self.t = t
        self.frame = t.frame
        n = t.n
        self.fwd: Dict[int, Dict[Hashable, Hashable]] = {l: {} for l in self.frame.dominant}
        for e in t.gamma_edges():
            self.fwd[e.label][e.tail] = e.head
        J = self.frame.subdominant
        for k in range(n):
            o = t.ray_owner(k)
            if k not in J:
                self.fwd[k][o] = (k, 1)
            if (k - 1) % n not in J:
                self.fwd[(k - 1) % n][(k, 1)] = o
        self.bwd = {l: {b: a for a, b in m.items()} for l, m in self.fwd.items()}
        self.owner = {k: t.ray_owner(k) for k in range(n)}

    def step(self, l: int, p, inverse: bool = False):
        table = self.bwd[l] if inverse else self.fwd[l]
        if p in table:
            return table[p]
        if isinstance(p, tuple):
            k, i = p
            n = self.frame.n
            out_label, in_label = k, (k - 1) % n
            if not inverse:
                if l == out_label and i >= 1:
                    return (k, i + 1)
                if l == in_label and i >= 2:
                    return (k, i - 1)
            else:
                if l == out_label and i >= 2:
                    return (k, i - 1)
                if l == in_label and i >= 1:
                    return (k, i + 1)
        return p


def _run(poles_step: Callable, word, p):
    for l, inv in word:
        p = poles_step(l, p, inv)
    return p


def lifted_permutations(t: PlaneTree, j: int, forward: bool = True) -> Dict[int, Callable]:
    """Permutations after ``E_j^2`` (``forward``) or its inverse, as callables."""
    frame = t.frame
    poles = Poles(t)
    changed = {}
    for a in (j % frame.n, frame.shift(j)):
        b = frame.succ(a)
        # conjugate by the loop around both values: c = gamma_a gamma_b.  With
        # right-to-left path lifting, conjugating by c^-1 moves structures along
        # the j-edges, which is the direction taken as E_j^2.
        c = [(a, False), (b, False)]
        c_inv = [(b, True), (a, True)]
        pre, post = (c_inv, c) if forward else (c, c_inv)
        for x in (a, b):
            changed[x] = (pre, [(x, False)], post)
            changed[(x, "inv")] = (pre, [(x, True)], post)

    def make(l, inv):
        if l in changed:
            pre, mid, post = changed[(l, "inv")] if inv else changed[l]
            word = pre + mid + post
            return lambda p: _run(poles.step, word, p)
        return lambda p: poles.step(l, p, inv)

    perms = {}
    for l in frame.dominant:
        perms[l] = make(l, False)
        perms[(l, "inv")] = make(l, True)
    return perms


def lifted_action(t: PlaneTree, j: int, forward: bool = True, depth: int = DEPTH) -> PlaneTree:
    """``E_j^{+-2}(t)`` rebuilt from lifted permutations; raises if the result is not standard."""
    frame = t.frame
    n = frame.n
    perms = lifted_permutations(t, j, forward)
    region: List[Hashable] = list(t.vertices()) + [(k, i) for k in range(n) for i in range(1, depth + 1)]
    inside = set(region)
    ids: Dict[Hashable, int] = {v: v for v in t.vertices()}
    nxt = max(t.vertices()) + 1
    for p in region:
        if p not in ids:
            ids[p] = nxt
            nxt += 1
    labels = sorted(frame.dominant)
    rot = {}
    edges = set()
    for p in region:
        darts = []
        for l in labels:
            q_out = perms[l](p)
            if q_out == p:
                continue
            q_in = perms[(l, "inv")](p)
            darts.append(q_out)
            darts.append(q_in)
            edges.add((p, q_out, l))
        items = []
        for q in darts:
            if q in inside:
                items.append(ids[q])
            elif isinstance(q, tuple) and q[1] == depth + 1:
                items.append(~q[0])
            else:
                raise InvalidGraph(f"lifted edge from {p} leaves the padded region at {q}")
        while len(items) > 1 and items[0] == items[-1]:
            items.pop()
        rot[ids[p]] = [x for i, x in enumerate(items) if i == 0 or x != items[i - 1]]
    new = PlaneTree(frame, rot)
    derived = {(e.tail, e.head, e.label) for e in new.gamma_edges()}
    lifted = {(ids[a], ids[b], l) for a, b, l in edges if b in inside}
    if derived != lifted:
        raise InvalidGraph("lifted edges disagree with the face labels of the rebuilt tree")
    return new.trimmed()
