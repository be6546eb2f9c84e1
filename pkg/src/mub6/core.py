"""Complex 6-vectors and 6x6 matrices with the unbiasedness / Hadamard predicates.

Conventions used throughout the package:

* the scalar product is linear in the first variable and conjugate-linear
  in the second;
* phases are stored in *turns* (fractions of 2*pi), so a phase vector
  (phi_1, ..., phi_5) represents (1/sqrt(6)) (1, e^{2i pi phi_1}, ..., e^{2i pi phi_5});
* predicates take an explicit tolerance.  1e-10 is appropriate for
  analytically constructed objects, 1e-6 for numerically searched ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DIM = 6
SQRT_D = np.sqrt(6.0)
INV_SQRT_D = 1.0 / SQRT_D

ANALYTIC_TOL = 1e-10
NUMERIC_TOL = 1e-6

OMEGA = np.exp(2j * np.pi / 3)


def inner_product(u, v) -> complex:
    """<u, v>, linear in u and conjugate-linear in v."""
    u = as_vector(u)
    v = as_vector(v)
    return complex(np.sum(u * np.conj(v)))


def circular_distance(p: float, q: float) -> float:
    """Distance between two phases in turns, taken mod 1."""
    d = (p - q) % 1.0
    return min(d, 1.0 - d)


@dataclass(frozen=True)
class PhaseVector:
    """A unit vector (1/sqrt(6))(1, e^{2i pi phi_1}, ..., e^{2i pi phi_5}).

    Fixing the first coordinate to 1/sqrt(6) quotients out unimodular
    multiples, so two phase vectors are equal iff their phases match
    component-wise mod 1.  Phases are normalized into [0, 1) on
    construction.
    """

    phases: tuple[float, float, float, float, float]

    def __post_init__(self):
        if len(self.phases) != 5:
            raise ValueError("expected exactly 5 phases")
        ph = tuple(float(p) % 1.0 for p in self.phases)
        if not all(np.isfinite(ph)):
            raise ValueError("phases must be finite")
        object.__setattr__(self, "phases", ph)

    def vector(self) -> np.ndarray:
        """The represented unit vector in C^6."""
        return np.concatenate(
            ([1.0 + 0.0j], np.exp(2j * np.pi * np.asarray(self.phases)))
        ) * INV_SQRT_D

    @classmethod
    def from_vector(cls, v, tol: float = 1e-8) -> "PhaseVector":
        """Dephase a flat unit vector (all entries of modulus 1/sqrt(6))."""
        v = as_vector(v)
        if np.max(np.abs(np.abs(v) - INV_SQRT_D)) > tol:
            raise ValueError("vector is not flat (entries of modulus 1/sqrt(6))")
        w = v / (v[0] / np.abs(v[0]))
        phases = np.angle(w[1:]) / (2 * np.pi)
        return cls(tuple(phases % 1.0))

    def distance(self, other: "PhaseVector") -> float:
        """Max component-wise circular distance in turns."""
        return max(
            circular_distance(p, q) for p, q in zip(self.phases, other.phases)
        )

    def close_to(self, other: "PhaseVector", tol: float) -> bool:
        return self.distance(other) <= tol


def as_vector(x) -> np.ndarray:
    """Coerce a PhaseVector or array-like to a complex ndarray."""
    if isinstance(x, PhaseVector):
        return x.vector()
    v = np.asarray(x, dtype=np.complex128)
    return v


def is_unbiased(u, v, tol: float) -> bool:
    """True iff ||<u,v>| - 1/sqrt(6)| <= tol.  Both inputs must be unit vectors."""
    u = as_vector(u)
    v = as_vector(v)
    for w in (u, v):
        if abs(np.linalg.norm(w) - 1.0) > max(tol, 1e-12):
            raise ValueError("is_unbiased requires unit-norm inputs")
    return abs(abs(inner_product(u, v)) - INV_SQRT_D) <= tol


def unbiasedness_residual(u, v) -> float:
    """||<u,v>| - 1/sqrt(6)| without the unit-norm guard."""
    return abs(abs(inner_product(u, v)) - INV_SQRT_D)


def is_complex_hadamard(M, tol: float) -> bool:
    """Unitary with all entries of modulus 1/sqrt(6), both within tol."""
    M = np.asarray(M, dtype=np.complex128)
    if M.shape != (DIM, DIM):
        raise ValueError("expected a 6x6 matrix")
    if np.max(np.abs(np.abs(M) - INV_SQRT_D)) > tol:
        return False
    return np.max(np.abs(M.conj().T @ M - np.eye(DIM))) <= tol


def is_orthonormal_basis(columns, tol: float) -> bool:
    """True iff the Gram matrix of the 6 columns is within tol of the identity."""
    C = _as_columns(columns)
    gram = C.conj().T @ C
    return np.max(np.abs(gram - np.eye(DIM))) <= tol


def _as_columns(columns) -> np.ndarray:
    if isinstance(columns, np.ndarray) and columns.shape == (DIM, DIM):
        return columns.astype(np.complex128, copy=False)
    cols = [as_vector(c) for c in columns]
    if len(cols) != DIM:
        raise ValueError("expected 6 column vectors")
    return np.column_stack(cols)


def mutually_unbiased_residual(A, B) -> float:
    """Max over column pairs of ||<a_i, b_j>| - 1/sqrt(6)|."""
    A = _as_columns(A)
    B = _as_columns(B)
    cross = np.abs(A.conj().T @ B)
    return float(np.max(np.abs(cross - INV_SQRT_D)))


@dataclass(frozen=True, eq=False)
class EquivalenceOp:
    """Left/right diagonal and permutation factors, with optional conjugation.

    Applying the op maps M to D_L P_L M' P_R D_R where M' is M or its
    entrywise conjugate.  Conjugation, when requested, is applied before
    the diagonal and permutation factors.  P_L permutes rows by
    (P_L M)[i, :] = M[left_perm[i], :], and P_R permutes columns by
    (M P_R)[:, j] = M[:, right_perm[j]].
    """

    left_diag: np.ndarray
    left_perm: tuple[int, ...]
    right_diag: np.ndarray
    right_perm: tuple[int, ...]
    conjugate: bool = False

    def __post_init__(self):
        ld = np.asarray(self.left_diag, dtype=np.complex128)
        rd = np.asarray(self.right_diag, dtype=np.complex128)
        object.__setattr__(self, "left_diag", ld)
        object.__setattr__(self, "right_diag", rd)
        for d in (ld, rd):
            if d.shape != (DIM,):
                raise ValueError("diagonal must have 6 entries")
            if np.max(np.abs(np.abs(d) - 1.0)) > 1e-9:
                raise ValueError("diagonal entries must be unimodular")
        for p in (self.left_perm, self.right_perm):
            if sorted(p) != list(range(DIM)):
                raise ValueError("permutation must be a bijection of 0..5")

    @classmethod
    def identity(cls) -> "EquivalenceOp":
        return cls(
            np.ones(DIM), tuple(range(DIM)), np.ones(DIM), tuple(range(DIM))
        )


def apply_equivalence(M, op: EquivalenceOp) -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    W = np.conj(M) if op.conjugate else M
    W = W[list(op.left_perm), :]
    W = W[:, list(op.right_perm)]
    return op.left_diag[:, None] * W * op.right_diag[None, :]


def dephasing_op(M) -> EquivalenceOp:
    """The diagonal equivalence making the first row and column positive real."""
    M = np.asarray(M, dtype=np.complex128)
    right = np.conj(M[0, :]) / np.abs(M[0, :])
    first_col = M[:, 0] * right[0]
    left = np.conj(first_col) / np.abs(first_col)
    return EquivalenceOp(left, tuple(range(DIM)), right, tuple(range(DIM)))


def dephase(M) -> np.ndarray:
    return apply_equivalence(M, dephasing_op(M))


def haagerup_invariant(M) -> np.ndarray:
    """All 6^4 quadruple products h_ij h_kl conj(h_il) conj(h_kj), canonically sorted.

    The ordering is by principal argument in [0, 2*pi) and then by modulus.
    Use cluster_multiset to merge equal values up to a tolerance.
    """
    M = np.asarray(M, dtype=np.complex128)
    vals = np.einsum("ij,kl,il,kj->ikjl", M, M, M.conj(), M.conj()).ravel()
    return canonical_sort(vals)


def canonical_sort(values: np.ndarray) -> np.ndarray:
    angles = np.angle(values) % (2 * np.pi)
    order = np.lexsort((np.abs(values), angles))
    return values[order]


def cluster_multiset(values: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    """Group a canonically sorted multiset into (value, multiplicity) pairs.

    Adjacent values within tol (in the complex plane) are merged; the
    first and last clusters are merged as well when the argument wraps
    around 0.
    """
    vals = canonical_sort(np.asarray(values, dtype=np.complex128))
    clusters: list[list[complex]] = []
    for z in vals:
        if clusters and abs(z - clusters[-1][0]) <= tol:
            clusters[-1].append(z)
        else:
            clusters.append([z])
    if len(clusters) > 1 and abs(clusters[0][0] - clusters[-1][0]) <= tol:
        clusters[0].extend(clusters.pop())
    return [(c[0], len(c)) for c in clusters]


def multisets_match(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """Equality of two canonically sorted multisets up to tol, with multiplicity."""
    ca = cluster_multiset(a, tol)
    cb = cluster_multiset(b, tol)
    if len(ca) != len(cb):
        return False
    return all(
        na == nb and abs(za - zb) <= 2 * tol
        for (za, na), (zb, nb) in zip(ca, cb)
    )
