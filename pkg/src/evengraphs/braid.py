"""Squared even braid actions as structure-moving rewrites.

The squared action ``E_j^2 = A_j^2 A_{j+nu}^2`` detaches the structure at the
``j``-junction and re-attaches it one vertex further along the ``j``-edges,
and does the same at the ``(j+nu)``-junction.  The inverse moves both
structures one vertex back along the ``j+``-edges.  Vertices are poles and
keep their ids across a move; a move onto a ray materializes one chain vertex
and chain vertices left dangling on a ray are trimmed.

Single actions ``A_j^{+-1}`` act on loops by::

    A_j(gamma_j)    = gamma_j gamma_{j+} gamma_j^-1     A_j^-1(gamma_j)    = gamma_{j+}
    A_j(gamma_{j+}) = gamma_j                            A_j^-1(gamma_{j+}) = gamma_{j+}^-1 gamma_j gamma_{j+}

and permute the asymptotic values, leaving standard order; they are not
provided as rewrites.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .cellgraph import CellGraph
from .errors import InvalidGraph, InvalidLabel
from .structures import Structure, structure_at
from .tree import PlaneTree, as_tree

FORWARD, INVERSE = "forward", "inverse"


def move_structure(t: PlaneTree, s: Structure, forward: bool) -> PlaneTree:
    """Move one structure a single step; the other half of the even action is separate."""
    rot = t.copy_rot()
    u = s.junction
    target = s.forward if forward else s.backward
    items = rot[u]
    for x in s.block:
        items.remove(x)
    if target < 0:
        c = t.new_vertex_id()
        items[items.index(target)] = c
        rot[c] = [u, target]
        target = c
    tr = rot[target]
    at = tr.index(u)
    if not forward:
        at += 1
    tr[at:at] = list(s.block)
    for x in s.block:
        if x >= 0:
            sr = rot[x]
            sr[sr.index(u)] = target
    return PlaneTree(t.frame, rot).trimmed()


def _signed(direction) -> bool:
    if direction in (FORWARD, +2, "+2", True):
        return True
    if direction in (INVERSE, -2, "-2", False):
        return False
    raise ValueError(f"unknown direction {direction!r}")


def even_action_sq_tree(t: PlaneTree, j: int, direction=FORWARD) -> PlaneTree:
    frame = t.frame
    j %= frame.n
    if not frame.is_dominant(j):
        raise InvalidLabel(f"label {j} is subdominant")
    forward = _signed(direction)
    s = structure_at(t, j)
    if s is None:
        return t
    t = move_structure(t, s, forward)
    s2 = structure_at(t, frame.shift(j))
    if s2 is None:
        raise InvalidGraph(f"graph has a {j}-junction but no {frame.shift(j)}-junction")
    return move_structure(t, s2, forward)


def even_action_sq(g, j: int, direction=FORWARD, repeat: int = 1):
    """Apply ``E_j^{2}`` (or its inverse) ``repeat`` times.

    Accepts a :class:`CellGraph` or :class:`PlaneTree` and returns the same
    kind; cell graphs come back in canonical form.
    """
    from .symmetry import require_symmetric

    t = as_tree(g)
    require_symmetric(t)
    for _ in range(repeat):
        t = even_action_sq_tree(t, j, direction)
    if isinstance(g, PlaneTree):
        return t
    return t.to_cellgraph()


# -- action logs ------------------------------------------------------------


def snapshot_hash(g) -> str:
    text = as_tree(g).to_cellgraph().serialize()
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class LogEntry:
    """``E j +2|-2`` generator step, or a named macro rewrite."""

    kind: str
    j: int = 0
    exponent: int = 2
    macro: str = ""
    root: int = 0
    position: int = 0
    snapshot: str = ""

    def line(self, with_hash: bool = True) -> str:
        if self.kind == "E":
            text = f"E {self.j} {'+2' if self.exponent > 0 else '-2'}"
        else:
            text = f"MACRO {self.macro} {self.root} {self.position}"
        if with_hash and self.snapshot:
            text += f" # {self.snapshot}"
        return text


@dataclass
class ActionLog:
    entries: List[LogEntry] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def record(self, entry: LogEntry, result) -> None:
        self.entries.append(
            LogEntry(entry.kind, entry.j, entry.exponent, entry.macro, entry.root, entry.position, snapshot_hash(result))
        )

    def extend(self, other: "ActionLog") -> None:
        self.entries.extend(other.entries)

    def serialize(self) -> str:
        return "".join(e.line() + "\n" for e in self.entries)

    @classmethod
    def parse(cls, text: str) -> "ActionLog":
        log = cls()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            body, _, comment = raw.partition("#")
            tok = body.split()
            if not tok:
                continue
            snap = comment.strip()
            if tok[0] == "E" and len(tok) == 3 and tok[2] in ("+2", "-2"):
                log.entries.append(LogEntry("E", int(tok[1]), int(tok[2]), snapshot=snap))
            elif tok[0] == "MACRO" and len(tok) == 4 and tok[1] in MACROS:
                log.entries.append(LogEntry("MACRO", macro=tok[1], root=int(tok[2]), position=int(tok[3]), snapshot=snap))
            else:
                raise ValueError(f"line {lineno}: unrecognised log entry {raw!r}")
        return log


MACROS = ("swapYV", "convYI", "mergeYY")


def apply_entry(t: PlaneTree, entry: LogEntry) -> PlaneTree:
    if entry.kind == "E":
        return even_action_sq_tree(t, entry.j, FORWARD if entry.exponent > 0 else INVERSE)
    from . import macros

    fn = {"swapYV": macros.swap_YV_at_root, "convYI": macros.convert_Y_next_to_I, "mergeYY": macros.merge_YY}[
        entry.macro
    ]
    return as_tree(fn(t, entry.root, entry.position))


def replay(g, log: ActionLog, verify: bool = True):
    """Re-run a log from ``g``; with ``verify`` every recorded snapshot hash must match."""
    t = as_tree(g).canonical()
    for i, entry in enumerate(log):
        t = apply_entry(t, entry).canonical()
        if verify and entry.snapshot and snapshot_hash(t) != entry.snapshot:
            raise ValueError(f"log entry {i + 1} ({entry.line(False)}) does not reproduce its snapshot")
    if isinstance(g, PlaneTree):
        return t
    return t.to_cellgraph()
