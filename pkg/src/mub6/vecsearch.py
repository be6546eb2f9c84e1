"""Numerical discovery of all vectors unbiased to {Id, F(a, b)}.

A phase vector u is unbiased to both bases exactly when the objective
sum_j |<u, f_j>| over the six columns of F(a, b) attains its global
maximum sqrt(6).  The search runs many gradient ascents from random
phase tuples, polishes near-maximal candidates with Newton iterations on
the squared-modulus system, discards non-global local maxima, and
deduplicates the survivors mod 1.

The known landscape: 48 unbiased vectors for every (a, b) tested, forming
16 orthonormal bases at (0, 0), 70 at (1/6, 0) and 8 at generic
parameters; no two of those bases are ever mutually unbiased.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import INV_SQRT_D, SQRT_D, PhaseVector, circular_distance
from .fourier import FourierParams, build_F


@dataclass(frozen=True)
class SearchSettings:
    trials: int = 5000
    opt_tolerance: float = 1e-9
    dedupe_tolerance: float = 1e-5  # turns
    rng_seed: int = 0
    max_iterations: int = 400

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.opt_tolerance <= 0 or self.dedupe_tolerance <= 0:
            raise ValueError("tolerances must be positive")


@dataclass
class UnbiasedCatalog:
    """Search results at fixed (a, b): vectors, bases and basis-pair flags."""

    params: FourierParams
    settings: SearchSettings
    vectors: list[PhaseVector] = field(default_factory=list)
    bases: list[tuple[int, ...]] = field(default_factory=list)
    extension_matrix: np.ndarray | None = None

    @property
    def vector_count(self) -> int:
        return len(self.vectors)

    @property
    def basis_count(self) -> int:
        return len(self.bases)


def _units(phases: np.ndarray) -> np.ndarray:
    """(m, 6) unit vectors from (m, 5) phase tuples in turns."""
    m = phases.shape[0]
    u = np.empty((m, 6), dtype=np.complex128)
    u[:, 0] = 1.0
    u[:, 1:] = np.exp(2j * np.pi * phases)
    return u * INV_SQRT_D


def objective(phases, params: FourierParams) -> float:
    """sum_j |<u, f_j>| for the phase tuple; <= sqrt(6), with equality iff unbiased."""
    return float(objective_many(np.asarray(phases, dtype=float)[None, :], params)[0])


def objective_many(phases: np.ndarray, params: FourierParams) -> np.ndarray:
    F = build_F(params)
    Z = _units(phases) @ F.conj()
    return np.abs(Z).sum(axis=1)


def _objective_and_gradient(phases: np.ndarray, F: np.ndarray):
    u = _units(phases)
    Z = u @ F.conj()  # Z[t, j] = <u_t, f_j>
    absZ = np.abs(Z)
    obj = absZ.sum(axis=1)
    safe = np.where(absZ < 1e-15, 1.0, absZ)
    # d|Z_j|/d phi_k = -2 pi Im(conj(Z_j) u_k conj(F_kj)) / |Z_j|, k = 1..5
    T = (np.conj(Z) / safe)[:, None, :] * u[:, 1:, None] * np.conj(F[None, 1:, :])
    grad = -2 * np.pi * T.imag.sum(axis=2)
    return obj, grad


def _newton_polish(phases: np.ndarray, F: np.ndarray, iterations: int = 8) -> np.ndarray:
    """Newton on |<u, f_j>|^2 - 1/6 = 0 for columns 1..5 (column 0 follows)."""
    ph = phases.copy()
    for _ in range(iterations):
        u = _units(ph)
        Z = u @ F.conj()
        g = (np.abs(Z[:, 1:]) ** 2 - 1.0 / 6.0)
        # J[t, j, k] = -4 pi Im(conj(Z_j) u_k conj(F_kj))
        J = -4 * np.pi * (
            np.conj(Z[:, None, 1:]) * u[:, 1:, None] * np.conj(F[None, 1:, 1:])
        ).imag
        J = np.transpose(J, (0, 2, 1))  # rows = equations j, cols = variables k
        try:
            step = np.linalg.solve(J, -g[:, :, None])[:, :, 0]
        except np.linalg.LinAlgError:
            break
        ph = ph + step
        if np.max(np.abs(step)) < 1e-14:
            break
    return ph % 1.0


def find_unbiased_vectors(
    params: FourierParams, settings: SearchSettings = SearchSettings()
) -> UnbiasedCatalog:
    """Multistart maximization of the objective; deterministic given the seed."""
    F = build_F(params)
    rng = np.random.default_rng(settings.rng_seed)
    ph = rng.random((settings.trials, 5))
    step = np.full(settings.trials, 0.05)
    obj, grad = _objective_and_gradient(ph, F)
    for _ in range(settings.max_iterations):
        active = (SQRT_D - obj > 1e-12) & (step > 1e-13)
        if not active.any():
            break
        cand = ph.copy()
        cand[active] = ph[active] + step[active, None] * grad[active]
        cand_obj, cand_grad = _objective_and_gradient(cand, F)
        better = active & (cand_obj > obj)
        ph[better] = cand[better]
        obj[better] = cand_obj[better]
        grad[better] = cand_grad[better]
        step[better] *= 1.25
        step[active & ~better] *= 0.5
    near = SQRT_D - obj < 1e-4
    if near.any():
        ph[near] = _newton_polish(ph[near], F)
    final = np.abs(_units(ph) @ F.conj()).sum(axis=1)
    keep = ph[SQRT_D - final <= settings.opt_tolerance] % 1.0

    reps = _dedupe(keep, settings.dedupe_tolerance)
    vectors = [PhaseVector(tuple(r)) for r in reps]
    vectors.sort(key=lambda v: v.phases)
    return UnbiasedCatalog(params=params, settings=settings, vectors=vectors)


def _dedupe(phases: np.ndarray, tol: float) -> list[np.ndarray]:
    """Greedy clustering of phase tuples under the mod-1 max metric."""
    reps: list[np.ndarray] = []
    for row in phases:
        for r in reps:
            d = np.abs(row - r) % 1.0
            if np.max(np.minimum(d, 1.0 - d)) <= tol:
                break
        else:
            reps.append(row)
    return reps


def assemble_bases(
    catalog: UnbiasedCatalog,
    orth_tol: float = 1e-8,
    unbiased_tol: float = 1e-6,
) -> UnbiasedCatalog:
    """Enumerate the 6-cliques of the orthogonality graph and flag unbiased pairs.

    An edge joins two catalog vectors when |<u, v>| < orth_tol; every
    6-clique is an orthonormal basis.  extension_matrix[i, j] is True when
    bases i and j are mutually unbiased within unbiased_tol, i.e. when a
    quartet candidate exists.
    """
    n = len(catalog.vectors)
    V = np.array([v.vector() for v in catalog.vectors])
    gram = np.abs(V.conj() @ V.T)
    adj = (gram < orth_tol) & ~np.eye(n, dtype=bool)
    masks = [int.from_bytes(np.packbits(adj[i], bitorder="little").tobytes(), "little") for i in range(n)]

    cliques: list[tuple[int, ...]] = []

    def extend(members: list[int], cand: int, start: int):
        if len(members) == 6:
            cliques.append(tuple(members))
            return
        v = cand >> start
        i = start
        while v:
            shift = (v & -v).bit_length() - 1
            i += shift
            extend(members + [i], cand & masks[i], i + 1)
            v >>= shift + 1
            i += 1

    extend([], (1 << n) - 1, 0)
    cliques.sort()

    m = len(cliques)
    ext = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(i + 1, m):
            A = V[list(cliques[i])]
            B = V[list(cliques[j])]
            cross = np.abs(A.conj() @ B.T)
            if np.max(np.abs(cross - INV_SQRT_D)) < unbiased_tol:
                ext[i, j] = ext[j, i] = True
    catalog.bases = cliques
    catalog.extension_matrix = ext
    return catalog


def quartet_extension_scan(catalog: UnbiasedCatalog) -> bool:
    """True iff some pair of catalog bases is mutually unbiased."""
    if catalog.extension_matrix is None:
        raise ValueError("assemble_bases must run first")
    return bool(catalog.extension_matrix.any())
