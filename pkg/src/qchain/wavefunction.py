"""Position-space wavefunction evaluation for chain states.

The decoupled chain is a product of one-dimensional harmonic oscillators in
the normal coordinates, so an occupation-number state evaluates at a
configuration q as: transform q to the mode frame, evaluate each mode's
normalized 1D eigenfunction at its coordinate, take the product, and sum the
state's terms with their amplitudes.

The Gaussian envelopes and normalization prefactors are identical for every
term of a state, so they are accumulated once per sample in log space and
applied at the end.  Only the order-dependent Hermite factors (which are
polynomial, hence of moderate magnitude) stay in linear arithmetic.  This
keeps long chains from underflowing to zero spuriously and is also the fast
path: per-mode factor tables are computed once per batch and shared across
all terms.

All functions here are pure; evaluation can fan out over a shared immutable
basis and state from any number of workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import ModeBasis, build_coupling_matrix
from .fock import FockState, energy_eigenvalue

__all__ = [
    "hermite_phys",
    "eigenfunction_1d",
    "EvalContext",
    "evaluate",
    "evaluate_batch",
    "evaluate_oscillator2d",
    "hamiltonian_residual",
]


def hermite_phys(order: int, x):
    """Physicists' Hermite polynomial H_order(x), by the standard recurrence.

    H_0 = 1, H_1 = 2x, H_{j+1}(x) = 2x H_j(x) - 2j H_{j-1}(x).  Accepts a
    scalar or an array.  Values grow like (2x)^order; callers needing large
    orders at large arguments should work with the normalized eigenfunctions
    instead.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    x = np.asarray(x, dtype=float)
    h_prev = np.ones_like(x)
    if order == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h_cur = 2.0 * x
    for j in range(1, order):
        h_prev, h_cur = h_cur, 2.0 * x * h_cur - 2.0 * j * h_prev
    return h_cur if h_cur.ndim else float(h_cur)


def eigenfunction_1d(order: int, omega_ang: float, mass: float, x):
    """Normalized 1D harmonic-oscillator eigenfunction.

    phi_order(x) = (m*Omega/pi)^(1/4) (2^order order!)^(-1/2)
                   H_order(sqrt(m*Omega) x) exp(-m*Omega x^2 / 2)

    in hbar = 1 units, where Omega is the angular frequency.  Integrates to
    one in the square and solves the 1D oscillator with energy
    Omega*(order + 1/2).  The normalization is computed through log-gamma so
    moderate-to-large orders do not overflow.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if not omega_ang > 0:
        raise ValueError(f"angular frequency must be positive, got {omega_ang}")
    if not mass > 0:
        raise ValueError(f"mass must be positive, got {mass}")
    inv_len_sq = mass * omega_ang  # inverse squared oscillator length
    log_norm = 0.25 * math.log(inv_len_sq / math.pi) - 0.5 * (
        order * math.log(2.0) + math.lgamma(order + 1)
    )
    y = math.sqrt(inv_len_sq) * np.asarray(x, dtype=float)
    vals = hermite_phys(order, y) * np.exp(log_norm - 0.5 * y * y)
    return vals if np.ndim(vals) else float(vals)


def _normed_hermite_table(y: np.ndarray, max_order: int) -> np.ndarray:
    """Table of H_j(y)/sqrt(2^j j!) for j = 0..max_order, vectorized over y."""
    table = np.empty((max_order + 1,) + y.shape)
    table[0] = 1.0
    if max_order >= 1:
        table[1] = math.sqrt(2.0) * y
    for j in range(1, max_order):
        table[j + 1] = math.sqrt(2.0 / (j + 1)) * y * table[j] - math.sqrt(
            j / (j + 1)
        ) * table[j - 1]
    return table


@dataclass(frozen=True)
class EvalContext:
    """Evaluation context: the mode basis plus the highest eigenfunction
    order any term of the state needs."""

    basis: ModeBasis
    max_order: int

    @classmethod
    def for_state(cls, state: FockState, basis: ModeBasis) -> "EvalContext":
        if state.params != basis.params:
            raise ValueError("state and basis belong to different chains")
        max_order = max((max(occ) for occ in state.terms), default=0)
        return cls(basis=basis, max_order=max_order)


def evaluate_batch(state: FockState, basis: ModeBasis, points) -> np.ndarray:
    """Evaluate the wavefunction of ``state`` at many configurations at once.

    Parameters
    ----------
    points : array_like, shape (M, N)
        One configuration per row, site coordinates in site order.

    Returns
    -------
    ndarray, shape (M,), complex
        Wavefunction values; the M=1 row matches :func:`evaluate` on that
        point up to BLAS rounding in the coordinate transform.
    """
    ctx = EvalContext.for_state(state, basis)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    n = basis.params.n_sites
    if points.ndim != 2 or points.shape[1] != n:
        raise ValueError(f"expected points of shape (M, {n}), got {points.shape}")
    m_samples = points.shape[0]
    if not state.terms:
        return np.zeros(m_samples, dtype=complex)

    normal = points @ basis.basis  # normal coordinates, row per sample
    scale = np.sqrt(basis.params.mass * basis.frequencies)
    y = normal * scale  # dimensionless mode coordinates

    # Term-independent envelope: Gaussians and normalization prefactors.
    log_env = 0.25 * float(np.sum(np.log(scale * scale / np.pi))) - 0.5 * np.sum(
        y * y, axis=1
    )
    envelope = np.exp(log_env)

    items = state.sorted_terms()
    per_mode_max = np.max(np.array([occ for occ, _ in items]), axis=0)
    tables = {
        mode: _normed_hermite_table(y[:, mode], int(per_mode_max[mode]))
        for mode in np.nonzero(per_mode_max > 0)[0]
    }

    acc = np.zeros(m_samples, dtype=complex)
    for occ, amp in items:
        factor = None
        for mode, nu in enumerate(occ):
            if nu:
                col = tables[mode][nu]
                factor = col if factor is None else factor * col
        acc += amp if factor is None else amp * factor
    return acc * envelope


def evaluate(state: FockState, basis: ModeBasis, q) -> complex:
    """Wavefunction value of ``state`` at a single configuration q."""
    q = np.asarray(q, dtype=float)
    n = basis.params.n_sites
    if q.shape != (n,):
        raise ValueError(f"expected a length-{n} configuration, got shape {q.shape}")
    return complex(evaluate_batch(state, basis, q[None, :])[0])


def evaluate_oscillator2d(nu1: int, nu2: int, mass: float, kappa: float, points) -> np.ndarray:
    """Separable two-dimensional oscillator eigenstate on (q1, q2) samples.

    Product of two normalized 1D eigenfunctions with the common angular
    frequency sqrt(kappa/mass), orders nu1 along the first coordinate and
    nu2 along the second.
    """
    if nu1 < 0 or nu2 < 0:
        raise ValueError("quantum numbers must be non-negative")
    omega_ang = math.sqrt(kappa / mass)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if points.shape[1] != 2:
        raise ValueError(f"expected points of shape (M, 2), got {points.shape}")
    vals = eigenfunction_1d(nu1, omega_ang, mass, points[:, 0]) * eigenfunction_1d(
        nu2, omega_ang, mass, points[:, 1]
    )
    return np.asarray(vals, dtype=complex)


def hamiltonian_residual(state: FockState, basis: ModeBasis, q, h: float | None = None,
                         floor_ref: float | None = None) -> float:
    """Deviation of the finite-difference energy of an eigenstate at q.

    Applies the chain Hamiltonian (central second differences for the
    kinetic part, exact quadratic potential) to the wavefunction at q,
    divides by the wavefunction value, and returns the absolute deviation
    from the occupation's energy.  Numerical oracle that the frequency
    convention and eigenfunctions are mutually consistent.

    ``h`` defaults to 1e-3 of the narrowest mode's oscillator length, which
    balances truncation against cancellation at double precision.  Points
    where |psi(q)| < 1e-6 * floor_ref are rejected (near-nodal division);
    ``floor_ref`` defaults to |psi(0)|, which is zero for odd-parity states,
    so callers probing those should pass a scale such as the batch maximum.
    """
    if len(state.terms) != 1:
        raise ValueError("residual check requires a single-occupation eigenstate")
    q = np.asarray(q, dtype=float)
    n = basis.params.n_sites
    if q.shape != (n,):
        raise ValueError(f"expected a length-{n} configuration, got shape {q.shape}")
    if h is None:
        sigma_min = 1.0 / math.sqrt(2.0 * basis.params.mass * float(basis.frequencies.max()))
        h = 1e-3 * sigma_min
    if floor_ref is None:
        floor_ref = abs(evaluate(state, basis, np.zeros(n)))

    eye = h * np.eye(n)
    stencil = np.concatenate([q[None, :], q[None, :] + eye, q[None, :] - eye])
    vals = evaluate_batch(state, basis, stencil)
    center = vals[0]
    if abs(center) < 1e-6 * floor_ref:
        raise ValueError("wavefunction magnitude below the rejection floor at this point")

    laplacian = complex(np.sum(vals[1 : n + 1] + vals[n + 1 :] - 2.0 * center)) / (h * h)
    coupling = build_coupling_matrix(basis.params)
    potential = 0.5 * float(q @ coupling @ q)
    applied = -laplacian / (2.0 * basis.params.mass) + potential * center
    (occ, _amp), = state.terms.items()
    return abs(applied / center - energy_eigenvalue(occ, basis))
