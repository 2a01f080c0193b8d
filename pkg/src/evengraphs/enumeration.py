"""Exhaustive generation of centrally symmetric standard graphs.

A standard tree is dual to a dissection of an ``n``-gon whose corners are the
sectors: every junction is a cell, every ray a polygon side and every tree path
between two junctions a chord, subdivided by its chain vertices.  A chord may
not join two subdominant sectors, since the tree edge crossing it would
separate two subdominant faces.  Symmetric trees are symmetric dissections with
symmetric chord multiplicities.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import ResourceGuard
from .frame import SectorFrame
from .tree import PlaneTree, ray

Chord = Tuple[int, int]

# Upper bound on the number of graphs a single enumeration may emit.
DEFAULT_LIMIT = 250_000


def _crosses(c: Chord, d: Chord) -> bool:
    (a, b), (x, y) = c, d
    return a < x < b < y or x < a < y < b


def allowed_chords(frame: SectorFrame) -> List[Chord]:
    n, J = frame.n, frame.subdominant
    out = []
    for a in range(n):
        for b in range(a + 2, n):
            if b - a == n - 1:
                continue
            if a in J and b in J:
                continue
            out.append((a, b))
    return out


def _symmetric_image(frame: SectorFrame, c: Chord) -> Chord:
    a, b = (frame.shift(x) for x in c)
    return (min(a, b), max(a, b))


def dissections(frame: SectorFrame) -> Iterator[Tuple[Chord, ...]]:
    """Centrally symmetric non-crossing chord sets, in a fixed order."""
    chords = allowed_chords(frame)
    orbits: List[Tuple[Chord, ...]] = []
    seen = set()
    for c in chords:
        if c in seen:
            continue
        img = _symmetric_image(frame, c)
        orb = (c,) if img == c else (c, img)
        seen.update(orb)
        # a chord crossing its own image can never be used
        if len(orb) == 2 and _crosses(c, img):
            continue
        orbits.append(orb)

    def rec(i: int, chosen: List[Chord]):
        if i == len(orbits):
            yield tuple(sorted(chosen))
            return
        yield from rec(i + 1, chosen)
        orb = orbits[i]
        if all(not _crosses(c, d) for c in orb for d in chosen):
            chosen.extend(orb)
            yield from rec(i + 1, chosen)
            del chosen[-len(orb):]

    yield from rec(0, [])


def _cells(n: int, chords: Sequence[Chord]) -> List[Tuple[int, ...]]:
    """Interior faces of the dissected polygon as counterclockwise corner lists."""
    nbrs: Dict[int, List[int]] = {v: [(v - 1) % n, (v + 1) % n] for v in range(n)}
    for a, b in chords:
        nbrs[a].append(b)
        nbrs[b].append(a)
    used = set()
    cells = []
    starts = [(a, (a + 1) % n) for a in range(n)]
    starts += [(a, b) for a, b in chords] + [(b, a) for a, b in chords]
    for start in starts:
        if start in used:
            continue
        cell = []
        u, v = start
        while (u, v) not in used:
            used.add((u, v))
            cell.append(u)
            back = (u - v) % n
            # next corner: the largest offset from v still short of the way back
            w = max((x for x in nbrs[v] if 0 < (x - v) % n < back), key=lambda x: (x - v) % n)
            u, v = v, w
        cells.append(tuple(cell))
    return cells


def tree_from_dissection(frame: SectorFrame, chords: Sequence[Chord], mult: Dict[Chord, int]) -> PlaneTree:
    n = frame.n
    cells = _cells(n, chords)
    rot: Dict[int, List[int]] = {}
    side_owner: Dict[Chord, List[int]] = {c: [] for c in chords}
    for cid, cell in enumerate(cells):
        items = []
        r = len(cell)
        for i in range(r):
            s, t = cell[i], cell[(i + 1) % r]
            if t == (s + 1) % n:
                items.append(ray(t))
            else:
                c = (min(s, t), max(s, t))
                side_owner[c].append(cid)
                items.append(("chord", c))
        rot[cid] = items
    nxt = len(cells)
    link: Dict[Tuple[int, Chord], int] = {}
    for c in chords:
        p, q = side_owner[c]
        path = [p] + list(range(nxt, nxt + mult[c] - 1)) + [q]
        nxt += mult[c] - 1
        for a, b in zip(path, path[1:]):
            if a >= len(cells):
                rot.setdefault(a, []).append(b)
            if b >= len(cells):
                rot.setdefault(b, []).insert(0, a)
        link[(p, c)] = path[1]
        link[(q, c)] = path[-2]
    for cid in range(len(cells)):
        rot[cid] = [link[(cid, x[1])] if isinstance(x, tuple) else x for x in rot[cid]]
    return PlaneTree(frame, rot)


def _multiplicities(frame, chords, budget) -> Iterator[Dict[Chord, int]]:
    """Symmetric chord multiplicities using at most ``budget`` chain vertices."""
    orbits = []
    seen = set()
    for c in chords:
        if c in seen:
            continue
        img = _symmetric_image(frame, c)
        orb = (c,) if img == c else (c, img)
        seen.update(orb)
        orbits.append(orb)

    def rec(i, left, acc):
        if i == len(orbits):
            yield dict(acc)
            return
        orb = orbits[i]
        extra = 0
        while extra * len(orb) <= left:
            for c in orb:
                acc[c] = 1 + extra
            yield from rec(i + 1, left - extra * len(orb), acc)
            extra += 1
        for c in orb:
            acc.pop(c, None)

    yield from rec(0, budget, {})


def symmetric_trees(frame: SectorFrame, max_vertices: int, limit: int = DEFAULT_LIMIT) -> List[PlaneTree]:
    """All canonical centrally symmetric standard trees with at most ``max_vertices`` vertices."""
    if max_vertices < 1:
        raise ValueError("max_vertices must be at least 1")
    out = {}
    for chords in dissections(frame):
        cells = len(chords) + 1
        if cells > max_vertices:
            continue
        for mult in _multiplicities(frame, chords, max_vertices - cells):
            t = tree_from_dissection(frame, chords, mult).canonical()
            out[t.key()] = t
            if len(out) > limit:
                raise ResourceGuard(
                    f"enumeration of {frame} up to {max_vertices} vertices exceeds {limit} graphs"
                )
    return [out[k] for k in sorted(out)]


def brute_force_trees(frame: SectorFrame, max_vertices: int) -> List[PlaneTree]:
    """Independent, slow oracle: try every rotation system on small labeled trees."""
    from .errors import GraphError
    from .symmetry import is_symmetric

    n = frame.n
    found = {}
    for V in range(1, max_vertices + 1):
        for tree_edges in _labeled_trees(V):
            adj = {v: [] for v in range(V)}
            for a, b in tree_edges:
                adj[a].append(b)
                adj[b].append(a)
            for owners in itertools.product(range(V), repeat=n):
                items = {v: list(adj[v]) + [ray(k) for k in range(n) if owners[k] == v] for v in range(V)}
                if any(len(items[v]) < 2 for v in range(V)):
                    continue
                per_vertex = []
                for v in range(V):
                    first, rest = items[v][0], items[v][1:]
                    per_vertex.append([[first, *p] for p in itertools.permutations(rest)])
                for choice in itertools.product(*per_vertex):
                    rot = {v: choice[v] for v in range(V)}
                    try:
                        t = PlaneTree(frame, rot)
                    except GraphError:
                        continue
                    if not is_symmetric(t):
                        continue
                    c = t.canonical()
                    found[c.key()] = c
    return [found[k] for k in sorted(found)]


def _labeled_trees(V: int) -> Iterator[List[Tuple[int, int]]]:
    if V == 1:
        yield []
        return
    if V == 2:
        yield [(0, 1)]
        return
    # Pruefer sequences
    for seq in itertools.product(range(V), repeat=V - 2):
        degree = [1] * V
        for x in seq:
            degree[x] += 1
        edges = []
        seq = list(seq)
        for x in seq:
            leaf = min(v for v in range(V) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [v for v in range(V) if degree[v] == 1]
        edges.append((u, w))
        yield edges
