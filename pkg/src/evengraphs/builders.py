"""Named graphs used throughout: one-junction graphs and the worked examples."""

from __future__ import annotations

from .frame import SectorFrame
from .tree import PlaneTree, ray


def min_graph(frame: SectorFrame) -> PlaneTree:
    """The graph with a single junction carrying every ray."""
    return PlaneTree(frame, {0: [ray(k) for k in range(frame.n)]}).canonical()


def central_bigon(frame: SectorFrame, a: int = 1) -> PlaneTree:
    """Two junctions joined by the double edge separating sectors ``a`` and ``a + nu``.

    Both sectors must be dominant; the result has center type CenterDoubleEdge.
    """
    n, nu = frame.n, frame.nu
    a %= n
    b = (a + nu) % n
    left = [ray((a + i) % n) for i in range(1, nu + 1)]
    right = [ray((b + i) % n) for i in range(1, nu + 1)]
    return PlaneTree(frame, {0: [1] + left, 1: [0] + right}).canonical()


def worked_ivy() -> PlaneTree:
    """Ivy graph for n=8, J={0,4}: a center junction with four I-structures
    (rays 2, 3, 6, 7) and two Y-structures on stems of length two (rays 4, 5
    and rays 0, 1)."""
    frame = SectorFrame(8, [0, 4])
    rot = {
        0: [3, ray(2), ray(3), 1, ray(6), ray(7)],
        1: [0, 2],
        2: [1, ray(4), ray(5)],
        3: [0, 4],
        4: [3, ray(0), ray(1)],
    }
    return PlaneTree(frame, rot).canonical()


def worked_start() -> PlaneTree:
    """Graph one ``E_1^2`` away from :func:`worked_ivy`: rays 2, 3 and rays 6, 7
    hang off junctions adjacent to the center."""
    frame = SectorFrame(8, [0, 4])
    rot = {
        0: [3, 5, 1, 6],
        5: [0, ray(2), ray(3)],
        6: [0, ray(6), ray(7)],
        1: [0, 2],
        2: [1, ray(4), ray(5)],
        3: [0, 4],
        4: [3, ray(0), ray(1)],
    }
    return PlaneTree(frame, rot).canonical()


def structure_sample() -> PlaneTree:
    """Asymmetric n=6, J={0,3} graph with junctions v (rays 2, 3, 4) and u (ray 5),
    and a Y-junction y (rays 0, 1) hanging off u."""
    frame = SectorFrame(6, [0, 3])
    rot = {
        0: [1, ray(2), ray(3), ray(4)],  # v
        1: [2, 0, ray(5)],  # u
        2: [1, ray(0), ray(1)],  # y
    }
    return PlaneTree(frame, rot, check=True)
