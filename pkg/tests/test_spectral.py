import numpy as np
import pytest

from evengraphs.spectral import (
    EVEN,
    ODD,
    ContinuationFailed,
    ContinuationPath,
    PotentialSpec,
    SpectralProblem,
    block_eigs_complex,
    continue_eigenvalue,
    eigs_real,
    parse_job,
    run_job,
    sign_changes,
)


def hermite_oracle(d, alpha, count, size=160, omega=3.0):
    """Rayleigh-Ritz in a scaled harmonic-oscillator basis, independent of the grid solver."""
    big = size + d + 2
    a = np.diag(np.sqrt(np.arange(1, big)), 1)
    X = (a + a.T) / np.sqrt(2 * omega)
    P = 1j * np.sqrt(omega / 2) * (a.T - a)
    H = (P @ P).real + np.linalg.matrix_power(X, d)
    for i, c in enumerate(alpha):
        H = H + c * np.linalg.matrix_power(X, 2 * i + 2)
    H = H[:size, :size]
    vals = np.linalg.eigvals(H)
    return np.array(sorted(vals, key=lambda z: z.real)[:count])


def test_harmonic_oscillator_exact():
    prob = SpectralProblem.auto(PotentialSpec(2), 6, N=2 ** 14)
    vals = [e.value.real for e in eigs_real(prob, 6)]
    assert np.allclose(vals, [1, 3, 5, 7, 9, 11], rtol=1e-6)


@pytest.mark.parametrize("alpha", [0.0, 1.0, 5.0, -2.0])
def test_quartic_against_hermite_oracle(alpha):
    ours = np.array([e.value.real for e in eigs_real(SpectralProblem.auto(PotentialSpec(4, (alpha,)), 8), 8)])
    ref = hermite_oracle(4, (alpha,), 8).real
    assert np.allclose(ours, ref, rtol=1e-6)


def test_complex_coefficient_against_hermite_oracle():
    pot = PotentialSpec(4, (1 + 2j,))
    prob = SpectralProblem.auto(pot, 6, N=2 ** 14)
    ours = sorted(
        [v for p in (EVEN, ODD) for v in block_eigs_complex(prob, p, 3)], key=lambda z: z.real
    )
    ref = hermite_oracle(4, (1 + 2j,), 6)
    assert np.allclose(ours, ref, rtol=1e-6)


def test_sextic_against_hermite_oracle():
    pot = PotentialSpec(6, (0.5, -1.0))
    ours = np.array([e.value.real for e in eigs_real(SpectralProblem.auto(pot, 6), 6)])
    ref = hermite_oracle(6, (0.5, -1.0), 6, size=220, omega=5.0).real
    assert np.allclose(ours, ref, rtol=1e-6)


def test_zeros_and_parity():
    for e in eigs_real(SpectralProblem.auto(PotentialSpec(4, (1.0,)), 8, N=2 ** 13), 8):
        assert e.zeros == e.index
        assert e.parity == (EVEN if e.index % 2 == 0 else ODD)


def test_sign_changes():
    x = np.linspace(-3, 3, 301)
    assert sign_changes(np.sin(2 * x)) == 3
    assert sign_changes(np.exp(-x * x)) == 0


def test_potential_spec():
    p = PotentialSpec(6, (1.0,))
    assert p.alpha == (1 + 0j, 0j)
    assert p.is_real and not p.with_coefficient(1, 1j).is_real
    assert np.isclose(p(np.array([2.0]))[0], 64 + 4)
    with pytest.raises(ValueError):
        PotentialSpec(5)
    with pytest.raises(ValueError):
        PotentialSpec(4, (1, 2))


def test_small_loop_identity():
    prob = SpectralProblem.auto(PotentialSpec(4, (1.0,)), 10, N=2000)
    r = continue_eigenvalue(prob, ContinuationPath.circle(0, 1.0, 0.1, 32))
    assert r.is_identity and r.preserves_parity()
    for i in r.start:
        assert abs(r.end[i] - r.start[i]) <= 1e-6 * abs(r.start[i])


SWAP = dict(center=-3 + 4j, radius=2.0, segments=48)


@pytest.fixture(scope="module")
def coarse():
    return SpectralProblem.auto(PotentialSpec(4, (0,)), 10, N=1500)


def test_loop_around_branch_point_swaps(coarse):
    path = ContinuationPath.circle(0, SWAP["center"], SWAP["radius"], SWAP["segments"], tracked=(0, 1, 2, 3))
    r = continue_eigenvalue(coarse, path)
    assert r.permutation == {0: 0, 1: 3, 2: 2, 3: 1}
    assert r.preserves_parity()


def test_reversed_loop_inverts(coarse):
    path = ContinuationPath.circle(0, -5 + 5j, 2.0, 48, tracked=(1, 2, 3, 4))
    fwd = continue_eigenvalue(coarse, path).permutation
    back = continue_eigenvalue(coarse, path.reversed()).permutation
    assert {fwd[i]: i for i in fwd} == back


def test_concatenated_loops_compose(coarse):
    # the swapping circle starts at -1+4i; the triangle through the same point encloses no branch point
    swap = ContinuationPath.circle(0, SWAP["center"], SWAP["radius"], SWAP["segments"], tracked=(0, 1, 2, 3))
    small = ContinuationPath(0, (swap.vertices[0], 0.5j, 1.5j), tracked=(0, 1, 2, 3))
    p = continue_eigenvalue(coarse, swap).permutation
    q = continue_eigenvalue(coarse, small).permutation
    assert p != q
    for first, second, a, b in ((swap, swap, p, p), (swap, small, p, q), (small, swap, q, p)):
        got = continue_eigenvalue(coarse, first.then(second)).permutation
        assert got == {i: b[a[i]] for i in a}


def test_path_geometry():
    c = ContinuationPath.circle(0, 0, 1.0, 4)
    assert c.vertices[0] == c.vertices[-1]
    assert np.isclose(c.length, 4 * np.sqrt(2))
    assert np.isclose(c.point(c.length / 2), -1)
    with pytest.raises(ValueError):
        ContinuationPath(0, (1,))


def test_unresolvable_step_raises():
    prob = SpectralProblem.auto(PotentialSpec(4, (0,)), 10, N=1500)
    path = ContinuationPath.circle(0, 0, 0.5, 8, initial_step=2.0, max_jump=1e-9, min_step=0.1)
    with pytest.raises(ContinuationFailed):
        continue_eigenvalue(prob, path)


def test_job_file():
    job = parse_job("d 4\nalpha 5\ncount 4\nN 4000\nloop circle 0 5 0.1 16\ntrack 0 1\n")
    out = run_job(job)
    lines = out.splitlines()
    assert lines[-1] == "permutation 0->0 1->1"
    assert len([l for l in lines if l.strip().startswith(("0 ", "1 ", "2 ", "3 "))]) == 4
    with pytest.raises(ValueError):
        parse_job("alpha 1\n")
    with pytest.raises(ValueError):
        parse_job("d 4\nfoo 1\n")
