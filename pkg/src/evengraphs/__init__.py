"""Centrally symmetric standard graphs of even polynomial potentials.

Cell decompositions, the even braid action E_j^2, normalization to ivy form,
orbit classification, and a finite-difference spectral cross-check.
"""

from .braid import ActionLog, LogEntry, even_action_sq, replay
from .cellgraph import CellGraph
from .errors import (
    GraphError,
    InvalidGraph,
    InvalidLabel,
    NonTermination,
    NotSymmetric,
    PreconditionFailed,
    ResourceGuard,
    SgrError,
)
from .frame import SectorFrame
from .metrics import INFINITE, bounded_faces, canonicalize, root_metric, tree_view
from .normalize import CenterTag, IvyDescriptor, ZeroCount, component_invariant, is_ivy, ivy_descriptor, reduce, to_ivy
from .orbits import EnumSpec, OrbitReport, enumerate_graphs, orbit_bfs
from .sgr import dump, load, parse, serialize
from .structures import all_structures, structure_at
from .symmetry import central_involution, is_symmetric
from .tree import PlaneTree, as_tree
from .validate import ValidationReport, validate

__version__ = "0.1.0"
