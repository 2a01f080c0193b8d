"""Sector frames: the number of Stokes sectors and the subdominant index set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import GraphError


@dataclass(frozen=True)
class SectorFrame:
    """``n = d + 2`` sectors indexed mod ``n`` with subdominant sectors ``J``.

    Sectors not in ``J`` are dominant and are the only labels that carry edges.
    """

    n: int
    subdominant: frozenset

    def __init__(self, n: int, subdominant: Iterable[int]):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "subdominant", frozenset(int(j) % int(n) for j in subdominant))
        self.check()

    def check(self) -> None:
        n, J = self.n, self.subdominant
        if n < 6 or n % 2:
            raise GraphError(f"n must be even and at least 6, got {n}")
        nu = n // 2
        for j in J:
            if (j + nu) % n not in J:
                raise GraphError(f"subdominant set is not centrally symmetric: {j} without {(j + nu) % n}")
            if (j + 1) % n in J:
                raise GraphError(f"subdominant sectors {j} and {(j + 1) % n} are adjacent")
        if not J:
            raise GraphError("subdominant set is empty")

    @property
    def d(self) -> int:
        return self.n - 2

    @property
    def nu(self) -> int:
        return self.n // 2

    @property
    def m(self) -> int:
        return len(self.subdominant) // 2

    @property
    def dominant(self) -> tuple:
        return tuple(k for k in range(self.n) if k not in self.subdominant)

    @property
    def alternating(self) -> bool:
        """True when no two dominant sectors are adjacent (``m = nu/2``)."""
        return 2 * len(self.subdominant) == self.n

    def is_dominant(self, k: int) -> bool:
        return k % self.n not in self.subdominant

    def succ(self, j: int) -> int:
        """Next dominant label after ``j`` (the ``j+`` of the successor convention)."""
        for step in (1, 2):
            k = (j + step) % self.n
            if k not in self.subdominant:
                return k
        raise AssertionError("frame has two adjacent subdominant sectors")

    def pred(self, j: int) -> int:
        for step in (1, 2):
            k = (j - step) % self.n
            if k not in self.subdominant:
                return k
        raise AssertionError("frame has two adjacent subdominant sectors")

    def shift(self, k: int) -> int:
        """Image of a sector or label under the central symmetry."""
        return (k + self.nu) % self.n

    def generators(self) -> tuple:
        """One dominant label per central pair ``{j, j + nu}``."""
        return tuple(j for j in self.dominant if j < self.nu)

    def __str__(self) -> str:
        return f"n={self.n} J={{{','.join(map(str, sorted(self.subdominant)))}}}"
