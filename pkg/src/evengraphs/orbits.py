"""Enumeration within a vertex bound and orbit classification under E_j^{+-2}."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .braid import FORWARD, INVERSE, even_action_sq_tree
from .cellgraph import CellGraph
from .enumeration import DEFAULT_LIMIT, symmetric_trees
from .errors import InvalidGraph
from .frame import SectorFrame
from .normalize import component_invariant, reduce
from .tree import PlaneTree, as_tree
from .validate import validate


@dataclass(frozen=True)
class EnumSpec:
    frame: SectorFrame
    max_vertices: int
    generators: Tuple[int, ...] = ()
    limit: int = DEFAULT_LIMIT

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")
        if not self.generators:
            object.__setattr__(self, "generators", self.frame.generators())
        for j in self.generators:
            if not self.frame.is_dominant(j):
                raise ValueError(f"generator {j} is not a dominant label")


def enumerate_trees(spec: EnumSpec) -> List[PlaneTree]:
    return symmetric_trees(spec.frame, spec.max_vertices, spec.limit)


def enumerate_graphs(spec: EnumSpec, check: bool = True) -> List[CellGraph]:
    """Canonical cell graphs of every symmetric standard graph within the bound."""
    out = []
    for t in enumerate_trees(spec):
        g = t.to_cellgraph()
        if check:
            rep = validate(g)
            if not rep.ok:
                raise InvalidGraph(f"enumerated graph fails validation: {rep.text()}")
        out.append(g)
    return out


@dataclass
class OrbitClass:
    invariant: object
    representative: PlaneTree
    members: int
    connected: bool

    @property
    def rep_sgr(self) -> str:
        return self.representative.to_cellgraph().serialize()


@dataclass
class OrbitReport:
    spec: EnumSpec
    classes: List[OrbitClass] = field(default_factory=list)
    merges: List[Tuple[object, object]] = field(default_factory=list)
    # graphs whose reduction disagrees with their class representative
    rep_mismatches: List[str] = field(default_factory=list)
    bfs_edges: int = 0

    def rep_names(self, prefix: str = "class") -> List[str]:
        return [f"{prefix}{i}.sgr" for i in range(len(self.classes))]

    def lines(self, prefix: str = "class") -> str:
        return "".join(
            f"class {c.invariant} members {c.members} rep {name}\n"
            for c, name in zip(self.classes, self.rep_names(prefix))
        )

    def table(self) -> str:
        f = self.spec.frame
        rows = [
            f"frame {f}  max_vertices {self.spec.max_vertices}  generators {list(self.spec.generators)}",
            f"{'invariant':<32}{'members':>8}  connected",
        ]
        for c in self.classes:
            rows.append(f"{str(c.invariant):<32}{c.members:>8}  {'yes' if c.connected else 'no'}")
        rows.append(f"merges {len(self.merges)}  bfs_edges {self.bfs_edges}  rep_mismatches {len(self.rep_mismatches)}")
        return "\n".join(rows) + "\n"


def _neighbours(t: PlaneTree, generators: Sequence[int]):
    for j in generators:
        for direction in (FORWARD, INVERSE):
            yield j, direction, even_action_sq_tree(t, j, direction).canonical()


def orbit_bfs(spec: EnumSpec, seeds: Optional[Sequence] = None, check_reduce: bool = True) -> OrbitReport:
    """Close ``seeds`` under the generators inside the bound and classify.

    Classes are keyed by the component invariant; a BFS edge between
    different invariants is recorded in ``merges``.
    """
    if seeds is None:
        seeds = enumerate_trees(spec)
    bound = spec.max_vertices
    graphs: Dict[tuple, PlaneTree] = {}
    order: List[tuple] = []
    for s in seeds:
        t = as_tree(s).canonical()
        if t.key() not in graphs:
            graphs[t.key()] = t
            order.append(t.key())
    parent = {k: k for k in graphs}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    inv = {k: component_invariant(t) for k, t in graphs.items()}
    report = OrbitReport(spec)
    i = 0
    while i < len(order):
        k = order[i]
        i += 1
        for _, _, u in _neighbours(graphs[k], spec.generators):
            if len(u.rot) > bound:
                continue
            ku = u.key()
            if ku not in graphs:
                graphs[ku] = u
                order.append(ku)
                parent[ku] = ku
                inv[ku] = component_invariant(u)
            report.bfs_edges += 1
            if inv[ku] != inv[k]:
                pair = tuple(sorted((inv[k], inv[ku]), key=str))
                if pair not in report.merges:
                    report.merges.append(pair)
            a, b = find(k), find(ku)
            if a != b:
                parent[max(a, b)] = min(a, b)

    by_inv: Dict[object, List[tuple]] = {}
    for k in order:
        by_inv.setdefault(inv[k], []).append(k)
    for invariant in sorted(by_inv, key=lambda x: (type(x).__name__, tuple(x))):
        keys = by_inv[invariant]
        rep, _ = reduce(graphs[keys[0]])
        rep = rep.canonical()
        if check_reduce:
            for k in keys[1:]:
                r, _ = reduce(graphs[k])
                if r.key() != rep.key():
                    report.rep_mismatches.append(graphs[k].to_cellgraph().serialize())
        roots = {find(k) for k in keys}
        report.classes.append(OrbitClass(invariant, rep, len(keys), len(roots) == 1))
    return report
