"""Finite-difference spectra of ``-y'' + p(x) y`` for even polynomial potentials.

The grid ``x_i = i h`` on ``[0, L]`` carries the two parity blocks exactly:
even functions satisfy ``y_{-1} = y_1`` at the origin, odd ones ``y_0 = 0``.
Together they reproduce the central-difference operator on ``(-L, L)`` with
Dirichlet ends, and they decouple for any even potential, real or complex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import GraphError

EVEN, ODD = "even", "odd"

# decay exponent required beyond the outermost turning point when choosing L
DECAY_ACTION = 25.0

# grid size at which doubling moves the low eigenvalues by about 1e-7 relative
DEFAULT_N = 2 ** 15


class SpectralError(GraphError):
    pass


class DiscretizationUnresolved(SpectralError):
    pass


class ContinuationFailed(SpectralError):
    pass


@dataclass(frozen=True)
class PotentialSpec:
    """``p(x) = x^d + sum_i alpha[i] x^(2i+2)`` with ``alpha = (alpha_2, ..., alpha_{d-2})``."""

    d: int
    alpha: Tuple[complex, ...] = ()

    def __post_init__(self):
        if self.d < 2 or self.d % 2:
            raise ValueError("degree must be even and positive")
        alpha = tuple(complex(a) for a in self.alpha)
        if len(alpha) > self.d // 2 - 1:
            raise ValueError(f"degree {self.d} takes at most {self.d // 2 - 1} coefficients")
        alpha = alpha + (0j,) * (self.d // 2 - 1 - len(alpha))
        object.__setattr__(self, "alpha", alpha)

    @property
    def is_real(self) -> bool:
        return all(a.imag == 0 for a in self.alpha)

    def with_coefficient(self, index: int, value: complex) -> "PotentialSpec":
        alpha = list(self.alpha)
        alpha[index] = complex(value)
        return PotentialSpec(self.d, tuple(alpha))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = x ** self.d + np.zeros_like(x, dtype=complex)
        for i, a in enumerate(self.alpha):
            if a:
                out = out + a * x ** (2 * i + 2)
        return out.real if self.is_real else out


@dataclass(frozen=True)
class SpectralProblem:
    potential: PotentialSpec
    L: float
    N: int
    margin: float = 1.0

    def __post_init__(self):
        if self.N % 2 or self.N < 8:
            raise ValueError("N must be even and at least 8")
        if self.L <= 0:
            raise ValueError("L must be positive")

    @property
    def h(self) -> float:
        return 2 * self.L / self.N

    @property
    def M(self) -> int:
        return self.N // 2

    def refined(self, factor: int = 2) -> "SpectralProblem":
        return SpectralProblem(self.potential, self.L, self.N * factor, self.margin)

    def at(self, potential: PotentialSpec) -> "SpectralProblem":
        return SpectralProblem(potential, self.L, self.N, self.margin)

    def block(self, parity: str):
        """Symmetric tridiagonal ``(diagonal, offdiagonal)`` of one parity block.

        The even block is scaled at the origin (``y_0 -> sqrt(2) y_0``) so that it is
        symmetric; :func:`full_vector` undoes the scaling.
        """
        h2 = self.h ** 2
        x = np.arange(self.M) * self.h
        p = self.potential(x)
        if parity == EVEN:
            diag = 2.0 / h2 + p
            off = np.full(self.M - 1, -1.0 / h2, dtype=diag.dtype)
            off[0] = -math.sqrt(2.0) / h2
        else:
            diag = 2.0 / h2 + p[1:]
            off = np.full(self.M - 2, -1.0 / h2, dtype=diag.dtype)
        return diag, off

    def sparse_block(self, parity: str):
        diag, off = self.block(parity)
        return sp.diags([off, diag, off], [-1, 0, 1], format="csc")

    def full_vector(self, parity: str, v) -> np.ndarray:
        """Eigenvector on the interior grid of ``(-L, L)``."""
        v = np.asarray(v)
        if parity == EVEN:
            half = v.copy()
            half[0] = half[0] / math.sqrt(2.0)
            return np.concatenate([half[:0:-1], half])
        half = np.concatenate([[0.0], v])
        return np.concatenate([-half[:0:-1], half])

    @classmethod
    def auto(cls, potential: PotentialSpec, count: int, N: Optional[int] = None) -> "SpectralProblem":
        """Pick ``L`` so the ``count`` lowest states decay far below double precision."""
        n_ = N or DEFAULT_N
        L = 4.0
        for _ in range(20):
            coarse = cls(PotentialSpec(potential.d, tuple(a.real for a in potential.alpha)), L, 2000)
            lam = max(e for e, _ in _block_eigs(coarse, count))
            xs = np.linspace(0.0, L, 4001)
            gap = np.sqrt(np.clip(coarse.potential(xs) - lam, 0.0, None))
            action = np.trapezoid(gap, xs) if hasattr(np, "trapezoid") else np.trapz(gap, xs)
            if action >= DECAY_ACTION and coarse.potential(np.array([L]))[0] > lam + 1.0:
                return cls(potential, L, n_)
            L *= 1.25
        raise DiscretizationUnresolved("could not find a domain wide enough")


def _block_eigs(prob: SpectralProblem, count: int):
    """Lowest ``count`` eigenvalues of the full operator as (lambda, parity), real case."""
    n_even = (count + 1) // 2
    n_odd = count // 2
    out = []
    for parity, k in ((EVEN, n_even), (ODD, n_odd)):
        if k == 0:
            continue
        diag, off = prob.block(parity)
        vals = sla.eigh_tridiagonal(diag, off, eigvals_only=True, select="i", select_range=(0, k - 1))
        out.extend((float(v), parity) for v in vals)
    out.sort()
    return out[:count]


def sign_changes(v: np.ndarray, rel_tol: float = 1e-8) -> int:
    """Sign changes of a sampled function, ignoring samples that are numerically zero."""
    v = np.asarray(v, dtype=float)
    scale = np.max(np.abs(v)) if v.size else 0.0
    s = np.sign(v[np.abs(v) > rel_tol * scale])
    return int(np.count_nonzero(s[1:] != s[:-1]))


@dataclass(frozen=True)
class Eigenpair:
    index: int
    value: complex
    parity: str
    zeros: Optional[int]


def eigs_real(prob: SpectralProblem, count: int) -> List[Eigenpair]:
    """Lowest ``count`` eigenpairs for real coefficients, from the two parity blocks."""
    if not prob.potential.is_real:
        raise ValueError("eigs_real needs real coefficients")
    n_even, n_odd = (count + 1) // 2, count // 2
    found = []
    for parity, k in ((EVEN, n_even), (ODD, n_odd)):
        if k == 0:
            continue
        diag, off = prob.block(parity)
        vals, vecs = sla.eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1))
        for val, vec in zip(vals, vecs.T):
            found.append((float(val), parity, sign_changes(prob.full_vector(parity, vec))))
    found.sort()
    top = float(prob.potential(np.array([prob.L]))[0]) - prob.margin
    out = []
    for i, (val, parity, zeros) in enumerate(found[:count]):
        if val > top:
            raise DiscretizationUnresolved(f"eigenvalue {val:.6g} exceeds p(L) - margin = {top:.6g}; enlarge L")
        out.append(Eigenpair(i, complex(val), parity, zeros))
    return out


def block_eigs_complex(prob: SpectralProblem, parity: str, count: int) -> np.ndarray:
    """Lowest ``count`` eigenvalues (by real part) of one block, complex coefficients allowed."""
    diag, off = prob.block(parity)
    if prob.potential.is_real:
        vals = sla.eigh_tridiagonal(diag.real, off.real, eigvals_only=True, select="i", select_range=(0, count - 1))
        return vals.astype(complex)
    A = prob.sparse_block(parity)
    # the low spectrum sits near the real axis next to the real-part spectrum; start there
    real_prob = prob.at(PotentialSpec(prob.potential.d, tuple(a.real for a in prob.potential.alpha)))
    guess = block_eigs_complex(real_prob, parity, count)
    out = []
    for g in guess:
        vals = spla.eigs(A.astype(complex), k=1, sigma=complex(g), v0=_start_vector(A.shape[0]), return_eigenvectors=False)
        out.append(vals[0])
    return np.array(sorted(out, key=lambda z: z.real))


def _start_vector(n: int) -> np.ndarray:
    # ARPACK otherwise draws a random start vector and results stop being reproducible
    return np.random.default_rng(0).standard_normal(n).astype(complex)


def _nearest(A, pred: complex, k: int = 3):
    k = min(k, A.shape[0] - 2)
    # ARPACK needs a complex operator for a complex shift
    vals = spla.eigs(A.astype(complex), k=k, sigma=complex(pred), v0=_start_vector(A.shape[0]), return_eigenvectors=False)
    return sorted(vals, key=lambda z: abs(z - pred))


# -- continuation -------------------------------------------------------------


@dataclass(frozen=True)
class ContinuationPath:
    """Closed piecewise-linear loop in coefficient ``alpha[coefficient]``."""

    coefficient: int
    vertices: Tuple[complex, ...]
    tracked: Tuple[int, ...] = (0, 1, 2, 3)
    initial_step: float = 0.05
    max_jump: float = 0.2
    min_step: float = 1e-7

    def __post_init__(self):
        vs = tuple(complex(v) for v in self.vertices)
        if len(vs) < 2:
            raise ValueError("a loop needs at least two vertices")
        if vs[0] != vs[-1]:
            vs = vs + (vs[0],)
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def circle(cls, coefficient: int, center: complex, radius: float, segments: int = 64, **kw):
        pts = [complex(center) + radius * complex(math.cos(2 * math.pi * i / segments), math.sin(2 * math.pi * i / segments)) for i in range(segments)]
        return cls(coefficient, tuple(pts), **kw)

    def reversed(self) -> "ContinuationPath":
        return ContinuationPath(
            self.coefficient, tuple(reversed(self.vertices)), self.tracked, self.initial_step, self.max_jump, self.min_step
        )

    def then(self, other: "ContinuationPath") -> "ContinuationPath":
        if other.vertices[0] != self.vertices[0] or other.coefficient != self.coefficient:
            raise ValueError("loops must share base point and coefficient")
        return ContinuationPath(
            self.coefficient, self.vertices + other.vertices[1:], self.tracked, self.initial_step, self.max_jump, self.min_step
        )

    @property
    def length(self) -> float:
        return sum(abs(b - a) for a, b in zip(self.vertices, self.vertices[1:]))

    def point(self, s: float) -> complex:
        """Point at arc length ``s``."""
        for a, b in zip(self.vertices, self.vertices[1:]):
            seg = abs(b - a)
            if s <= seg or b == self.vertices[-1] and seg > 0 and s - seg < 1e-12:
                return a + (b - a) * (min(s, seg) / seg if seg else 0.0)
            s -= seg
        return self.vertices[-1]


@dataclass
class ContinuationResult:
    start: Dict[int, complex]
    end: Dict[int, complex]
    permutation: Dict[int, int]
    parities: Dict[int, str]
    steps: int
    halvings: int
    trace: Dict[int, List[complex]] = field(default_factory=dict)

    def permutation_line(self) -> str:
        return "permutation " + " ".join(f"{i}->{self.permutation[i]}" for i in sorted(self.permutation))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in self.permutation.items())

    def preserves_parity(self) -> bool:
        return all(self.parities[i] == _parity_of(j) for i, j in self.permutation.items())


def _parity_of(index: int) -> str:
    return EVEN if index % 2 == 0 else ODD


def _track(prob, coefficient, parity, lam, point, total, step, max_jump, min_step, label):
    """Follow one block eigenvalue from ``point(0)`` to ``point(total)``.

    The next value is the eigenvalue nearest a secant prediction; a step is
    halved when the relative jump exceeds ``max_jump`` or when the nearest
    candidate is not clearly separated from the next one.
    """
    s, ds, prev = 0.0, step, None
    trace, steps, halvings = [lam], 0, 0
    while s < total - 1e-13:
        ds = min(ds, total - s)
        z = point(s + ds)
        A = prob.at(prob.potential.with_coefficient(coefficient, z)).sparse_block(parity)
        pred = lam if prev is None else lam + (lam - prev[0]) * (ds / prev[1])
        cands = _nearest(A, pred)
        best = cands[0]
        jump = abs(best - lam) / max(abs(lam), 1e-300)
        ambiguous = len(cands) > 1 and abs(cands[1] - pred) < 2.0 * abs(best - pred)
        if jump > max_jump or ambiguous:
            ds /= 2
            halvings += 1
            if ds < min_step:
                raise ContinuationFailed(f"index {label}: cannot resolve eigenvalue near {lam:.6g} at alpha = {z:.6g}")
            continue
        prev = (lam, ds)
        lam = complex(best)
        s += ds
        steps += 1
        trace.append(lam)
        ds = min(ds * 1.5, step)
    return lam, trace, steps, halvings


def _base_eigenvalues(prob, path, need):
    """Labelled eigenvalues at the base point of ``path``.

    Index k is the k-th eigenvalue for the real part of the base coefficient,
    carried along the straight segment to the base point when that is complex.
    """
    z0 = path.vertices[0]
    real_base = prob.at(prob.potential.with_coefficient(path.coefficient, z0.real))
    starts = {}
    for parity in (EVEN, ODD):
        vals = block_eigs_complex(real_base, parity, (need + 1) // 2 + 1)
        for i, v in enumerate(vals):
            starts[2 * i + (parity == ODD)] = complex(v)
    if real_base.potential.is_real and sorted(starts, key=lambda k: starts[k].real) != sorted(starts):
        raise SpectralError("parity blocks do not interlace at the base point")
    if z0.imag == 0:
        return starts
    seg = abs(z0.imag)
    point = lambda s: complex(z0.real, z0.imag * s / seg)  # noqa: E731
    for k in list(starts):
        starts[k] = _track(prob, path.coefficient, _parity_of(k), starts[k], point, seg, path.initial_step,
                           path.max_jump, path.min_step, k)[0]
    return starts


def continue_eigenvalue(prob: SpectralProblem, path: ContinuationPath, keep_trace: bool = False) -> ContinuationResult:
    """Track eigenvalues around ``path`` and read off the loop's permutation.

    Indices label eigenvalues at the base point (see ``_base_eigenvalues``).
    Each index is continued inside its own parity block; the loop's end
    values must land on distinct base eigenvalues.
    """
    need = max(path.tracked) + 2
    starts = _base_eigenvalues(prob, path, need)
    end: Dict[int, complex] = {}
    trace: Dict[int, List[complex]] = {}
    steps = halvings = 0
    for idx in path.tracked:
        lam, tr, st, hv = _track(prob, path.coefficient, _parity_of(idx), starts[idx], path.point, path.length,
                                 path.initial_step, path.max_jump, path.min_step, idx)
        steps += st
        halvings += hv
        end[idx] = lam
        trace[idx] = tr
    perm = {}
    for idx, lam in end.items():
        k = min(starts, key=lambda k: abs(starts[k] - lam))
        if abs(starts[k] - lam) > 1e-6 * max(abs(lam), 1.0):
            raise ContinuationFailed(f"index {idx} returned to {lam:.6g}, which is not a base eigenvalue")
        perm[idx] = k
    if len(set(perm.values())) != len(perm):
        raise ContinuationFailed("two tracked eigenvalues merged onto one branch: " + str(perm))
    return ContinuationResult(
        start={i: starts[i] for i in path.tracked},
        end=end,
        permutation=perm,
        parities={i: _parity_of(i) for i in path.tracked},
        steps=steps,
        halvings=halvings,
        trace=trace if keep_trace else {},
    )


# -- job files ------------------------------------------------------------------


@dataclass
class Job:
    problem: SpectralProblem
    count: int
    path: Optional[ContinuationPath] = None


def _complex(tok: str) -> complex:
    return complex(tok.replace("i", "j"))


def parse_job(text: str) -> Job:
    """Plain-text job::

        d 4
        alpha 5            # alpha_2 alpha_4 ... (complex as 1+2j)
        count 8
        L 8                # optional; chosen automatically otherwise
        N 16384            # optional
        loop circle 0 0 0.1 64     # coefficient, center, radius, segments
        loop polygon 0 1 1+1j 2j   # coefficient, vertices (closed automatically)
        track 0 1 2 3
    """
    fields: Dict[str, List[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split("#", 1)[0].split()
        if not tok:
            continue
        if tok[0] in fields:
            raise ValueError(f"line {lineno}: duplicate {tok[0]!r}")
        if tok[0] not in ("d", "alpha", "count", "L", "N", "loop", "track"):
            raise ValueError(f"line {lineno}: unknown key {tok[0]!r}")
        fields[tok[0]] = tok[1:]
    if "d" not in fields:
        raise ValueError("job needs a 'd' line")
    pot = PotentialSpec(int(fields["d"][0]), tuple(_complex(a) for a in fields.get("alpha", [])))
    count = int(fields.get("count", ["8"])[0])
    if "L" in fields:
        prob = SpectralProblem(pot, float(fields["L"][0]), int(fields.get("N", [str(DEFAULT_N)])[0]))
    else:
        n_ = int(fields["N"][0]) if "N" in fields else None
        prob = SpectralProblem.auto(pot, count + 2, N=n_)
    path = None
    if "loop" in fields:
        kind, rest = fields["loop"][0], fields["loop"][1:]
        tracked = tuple(int(x) for x in fields.get("track", [str(i) for i in range(min(count, 4))]))
        if kind == "circle":
            c, center, radius = int(rest[0]), _complex(rest[1]), float(rest[2])
            segs = int(rest[3]) if len(rest) > 3 else 64
            path = ContinuationPath.circle(c, center, radius, segs, tracked=tracked)
        elif kind == "polygon":
            path = ContinuationPath(int(rest[0]), tuple(_complex(x) for x in rest[1:]), tracked=tracked)
        else:
            raise ValueError(f"unknown loop kind {kind!r}")
    return Job(prob, count, path)


def run_job(job: Job) -> str:
    """Result table, and a permutation line when the job has a loop."""
    lines = [f"# d={job.problem.potential.d} L={job.problem.L:g} N={job.problem.N}"]
    lines.append(f"{'index':>5} {'parity':>6} {'re':>22} {'im':>22} {'zeros':>5}")
    if job.problem.potential.is_real:
        rows = eigs_real(job.problem, job.count)
    else:
        rows = []
        for parity in (EVEN, ODD):
            k = (job.count + 1) // 2 if parity == EVEN else job.count // 2
            for i, v in enumerate(block_eigs_complex(job.problem, parity, k)):
                rows.append(Eigenpair(2 * i + (parity == ODD), complex(v), parity, None))
        rows.sort(key=lambda e: e.index)
    for e in rows:
        z = "-" if e.zeros is None else str(e.zeros)
        lines.append(f"{e.index:>5} {e.parity:>6} {e.value.real:>22.14e} {e.value.imag:>22.14e} {z:>5}")
    if job.path is not None:
        res = continue_eigenvalue(job.problem, job.path)
        lines.append(res.permutation_line())
    return "\n".join(lines) + "\n"
