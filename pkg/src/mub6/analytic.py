"""Closed-form MUB triplets (Id, F(0, b(t)), C(t)) and the circulant-block family.

The one-parameter family C(t) exists for
t in [arcsin(sqrt(5)/3)/2, pi/2 - arcsin(sqrt(5)/3)/2].  At t = pi/4 the
angle beta(t) vanishes and the defining formulas divide by sin(beta), so a
neighbourhood of that point is rejected as singular.  The second root of
the quadratic satisfied by cos(beta) sin(2t) would give another branch; only
the displayed root is implemented.

The circulant-block construction builds a 6x6 Hadamard T(x) from four 3x3
circulant blocks, factors its block-diagonalization into 2x2 unitaries
S(beta_0..beta_3), and assembles Hadamard matrices E1, E2 with T = E1* E2,
yielding the MUB triplet (Id, E1, E2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    OMEGA,
    SQRT_D,
    cluster_multiset,
    dephase,
    haagerup_invariant,
    is_complex_hadamard,
)
from .fourier import FourierParams, build_F


class DomainError(ValueError):
    """Parameter outside the admissible interval."""


class SingularityError(ValueError):
    """Parameter too close to the sin(beta) = 0 point."""


class FactorizationError(RuntimeError):
    """A 2x2 block expected to be unitary failed to factor."""


T_MIN = 0.5 * np.arcsin(np.sqrt(5.0) / 3.0)
T_MAX = np.pi / 2.0 - T_MIN
SIN_BETA_CUTOFF = 1e-6


def admissible_interval() -> tuple[float, float]:
    """The closed t-interval on which the triplet family is defined."""
    return (T_MIN, T_MAX)


@dataclass(frozen=True)
class TripletParams:
    """All derived quantities entering C(t).

    Angles t, psi, beta, phi, phi_tilde are in radians; b = beta / (2 pi)
    is the Fourier parameter in turns.  eta = e^{it}, nu = e^{i phi},
    xi = e^{i phi_tilde} and c3 are unimodular.
    """

    t: float
    psi: float
    beta: float
    b: float
    c3: complex
    eta: complex
    nu: complex
    xi: complex
    phi: float
    phi_tilde: float


def triplet_params(t: float) -> TripletParams:
    """Solve the reduced system at parameter t.

    Raises DomainError outside the admissible interval and
    SingularityError where |sin(beta)| < 1e-6 (around t = pi/4).
    """
    t = float(t)
    if not np.isfinite(t) or t < T_MIN - 1e-12 or t > T_MAX + 1e-12:
        raise DomainError(
            f"t={t} outside the admissible interval [{T_MIN}, {T_MAX}]"
        )
    c2t = np.cos(2 * t)
    s2t = np.sin(2 * t)
    psi = np.arccos(np.sqrt(2.0 + c2t) / 2.0)
    c3 = complex(-c2t / 2.0, np.sqrt(max(0.0, 1.0 - c2t**2 / 4.0)))
    disc = 9.0 * s2t**2 - 5.0
    if disc < 0.0:
        if disc < -1e-12:
            raise DomainError(f"t={t}: 9 sin^2(2t) - 5 = {disc} < 0")
        disc = 0.0
    cos_beta = (np.sqrt(3.0 + s2t**2) + 3.0 * np.sqrt(disc)) / (8.0 * s2t)
    beta = np.arccos(np.clip(cos_beta, -1.0, 1.0))
    sin_beta = np.sin(beta)
    if abs(sin_beta) < SIN_BETA_CUTOFF:
        raise SingularityError(
            f"t={t}: sin(beta) = {sin_beta} vanishes; the construction is singular"
        )
    denom = sin_beta * s2t
    cos_phi = (-np.cos(psi) ** 2 * np.cos(t) + np.cos(beta + psi) * np.sin(psi) * np.sin(t)) / denom
    sin_phi = (np.sin(psi) * np.cos(psi) * np.cos(t) - np.sin(beta + psi) * np.sin(psi) * np.sin(t)) / denom
    cos_phit = (-np.sin(t) * np.sin(psi) ** 2 + np.cos(psi) * np.cos(t) * np.sin(beta + psi)) / denom
    sin_phit = (np.cos(psi) * np.cos(beta + psi) * np.cos(t) - np.cos(psi) * np.sin(t) * np.sin(psi)) / denom
    for cs, sn in ((cos_phi, sin_phi), (cos_phit, sin_phit)):
        if abs(cs**2 + sn**2 - 1.0) > 1e-8:
            raise SingularityError(
                f"t={t}: recovered angle is not on the unit circle "
                f"(cos^2+sin^2-1 = {cs ** 2 + sn ** 2 - 1.0})"
            )
    phi = np.arctan2(sin_phi, cos_phi)
    phi_tilde = np.arctan2(sin_phit, cos_phit)
    return TripletParams(
        t=t,
        psi=float(psi),
        beta=float(beta),
        b=float(beta / (2 * np.pi)),
        c3=c3,
        eta=complex(np.exp(1j * t)),
        nu=complex(np.exp(1j * phi)),
        xi=complex(np.exp(1j * phi_tilde)),
        phi=float(phi),
        phi_tilde=float(phi_tilde),
    )


def _w_vectors(p: TripletParams) -> list[np.ndarray]:
    """The six unimodular-entry vectors whose conjugates column C(t)."""
    c3, eta, nu, xi = p.c3, p.eta, p.nu, p.xi
    w = OMEGA
    out = []
    for f in (1, w, w**2):
        out.append(
            np.array(
                [1, c3 * f, nu * np.conj(eta) * np.conj(f), c3, f, nu * eta * np.conj(f)],
                dtype=np.complex128,
            )
        )
    for f in (1, w, w**2):
        out.append(
            np.array(
                [1, -c3 * f, -1j * xi * np.conj(eta) * np.conj(f), -c3, f, 1j * xi * eta * np.conj(f)],
                dtype=np.complex128,
            )
        )
    return out


def build_C(t: float) -> np.ndarray:
    """The orthonormal basis C(t), unbiased to Id and to F(0, b(t))."""
    p = triplet_params(t)
    cols = [np.conj(w) / SQRT_D for w in _w_vectors(p)]
    return np.column_stack(cols)


def build_triplet(t: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(Id, F(0, b(t)), C(t)) as matrices; mutually unbiased for admissible t."""
    p = triplet_params(t)
    return (
        np.eye(6, dtype=np.complex128),
        build_F(FourierParams(0.0, p.b)),
        build_C(t),
    )


@dataclass(frozen=True)
class DerivationTrace:
    """Intermediate quantities and residuals behind C(t).

    The reduced scalar system in (c3, eta, nu) is evaluated for the primary
    solution and for the companion solution (-c3, i eta, xi); residuals are
    (r_a, r_b, r_c) per solution.  w holds the six raw vectors, z = -i y.
    """

    zeta: complex
    c4: complex
    c6: complex
    z: complex
    w: list[np.ndarray]
    second_solution: tuple[complex, complex, complex]
    residuals_primary: tuple[float, float, float]
    residuals_second: tuple[float, float, float]


def _system_residuals(c3: complex, eta: complex, nu: complex, y: complex):
    r_a = 2 * c3.real + (eta**2).real
    r_b = (1 + c3.real) * (1 + 2 * nu.real * eta.real) + 2 * c3.imag * nu.imag * eta.real
    ny = nu * y
    r_c = (1 - c3.real) * (1 + 2 * ny.imag * eta.imag) + 2 * c3.imag * ny.real * eta.imag
    return (float(r_a), float(r_b), float(r_c))


def derivation_trace(t: float) -> DerivationTrace:
    """Evaluate the scalar system behind C(t) for both solution branches."""
    p = triplet_params(t)
    y = np.exp(1j * p.beta)
    c6 = OMEGA
    second = (-p.c3, 1j * p.eta, p.xi)
    return DerivationTrace(
        zeta=complex(c6 * p.nu),
        c4=complex(c6**2),
        c6=complex(c6),
        z=complex(-1j * y),
        w=_w_vectors(p),
        second_solution=second,
        residuals_primary=_system_residuals(p.c3, p.eta, p.nu, y),
        residuals_second=_system_residuals(*second, y),
    )


def angle_identity_residual(t: float) -> float:
    """Residual of the consistency identity tying beta to psi and t.

    cos^2(psi) cos^2(t) + sin^2(psi) sin^2(t)
        - 2 cos(t) sin(t) cos(psi) sin(psi) cos(beta) = sin^2(beta) sin^2(2t)
    must hold for the recovered angles to lie on the unit circle.
    """
    p = triplet_params(t)
    lhs = (
        np.cos(p.psi) ** 2 * np.cos(t) ** 2
        + np.sin(p.psi) ** 2 * np.sin(t) ** 2
        - 2 * np.cos(t) * np.sin(t) * np.cos(p.psi) * np.sin(p.psi) * np.cos(p.beta)
    )
    rhs = np.sin(p.beta) ** 2 * np.sin(2 * t) ** 2
    return float(abs(lhs - rhs))


# --- circulant-block (clock-phase) construction ------------------------------

_F3 = np.exp(2j * np.pi / 3 * np.outer(np.arange(3), np.arange(3))) / np.sqrt(3.0)


@dataclass(frozen=True)
class ZaunerBlocks:
    """T(x) with its block factorization T = E1* E2."""

    x: float
    betas: np.ndarray  # shape (3, 4): beta_0..beta_3 per block index
    U: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    E1: np.ndarray
    E2: np.ndarray
    T: np.ndarray


def build_T(x: float) -> np.ndarray:
    """The one-parameter circulant-block Hadamard family T(x)."""
    e, f = np.exp(-1j * x), np.exp(1j * x)
    rows = [
        [1, -e, f, -1, 1j * e, 1j * f],
        [f, 1, -e, 1j * f, -1, 1j * e],
        [-e, f, 1, 1j * e, 1j * f, -1],
        [1, 1j * e, 1j * f, 1, e, -f],
        [1j * f, 1, 1j * e, -f, 1, e],
        [1j * e, 1j * f, 1, e, -f, 1],
    ]
    return np.array(rows, dtype=np.complex128) / SQRT_D


def _factor_unitary_2x2(S: np.ndarray) -> np.ndarray:
    """Angles (beta_0..beta_3) with S = S(beta_0, beta_1, beta_2, beta_3).

    Every 2x2 unitary can be written as
        (1/2) [[u + v,            e^{i b3} (u - v)],
               [e^{i b2} (u - v), e^{i b2} e^{i b3} (u + v)]]
    with u = e^{i b0}, v = e^{i b1}.
    """
    if np.max(np.abs(S.conj().T @ S - np.eye(2))) > 1e-10:
        raise FactorizationError("block is not unitary")
    a, b = S[0, 0], S[0, 1]
    c = S[1, 0]
    if abs(b) < 1e-12:
        b0 = b1 = np.angle(a)
        b3 = 0.0
        b2 = np.angle(S[1, 1] / a)
    else:
        b3 = np.pi / 2 - np.angle(a * np.conj(b)) if abs(a) > 0 else 0.0
        q = b * np.exp(-1j * b3)
        u = a + q
        v = a - q
        if abs(abs(u) - 1.0) > 1e-9 or abs(abs(v) - 1.0) > 1e-9:
            raise FactorizationError("endpoint phases are not unimodular")
        b0, b1 = np.angle(u), np.angle(v)
        b2 = np.angle(c / q)
    return np.array([b0, b1, b2, b3], dtype=float)


def zauner_construction(x: float) -> ZaunerBlocks:
    """Factor T(x) into the MUB triplet (Id, E1, E2) with T = E1* E2."""
    T = build_T(float(x))
    blocks = [[T[:3, :3], T[:3, 3:]], [T[3:, :3], T[3:, 3:]]]
    alphas = np.empty((2, 2, 3), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            D = _F3 @ blocks[i][j] @ _F3.conj().T
            off = np.max(np.abs(D - np.diag(np.diag(D))))
            if off > 1e-12:
                raise FactorizationError(f"block ({i},{j}) is not circulant")
            alphas[i, j] = np.diag(D)
    betas = np.empty((3, 4), dtype=float)
    for k in range(3):
        S = np.array(
            [[alphas[0, 0, k], alphas[0, 1, k]], [alphas[1, 0, k], alphas[1, 1, k]]]
        )
        betas[k] = _factor_unitary_2x2(S)
    U = tuple(np.diag(np.exp(1j * betas[:, ell])) for ell in range(4))
    U0, U1, U2, U3 = U
    E1 = np.block(
        [[_F3, U2.conj().T @ _F3], [_F3, -(U2.conj().T @ _F3)]]
    ) / np.sqrt(2.0)
    E2 = np.block(
        [[U0 @ _F3, U0 @ U3 @ _F3], [U1 @ _F3, -(U1 @ U3 @ _F3)]]
    ) / np.sqrt(2.0)
    err = np.max(np.abs(T - E1.conj().T @ E2))
    if err > 1e-11:
        raise FactorizationError(f"T != E1* E2 (max deviation {err})")
    return ZaunerBlocks(x=float(x), betas=betas, U=U, E1=E1, E2=E2, T=T)


@dataclass(frozen=True)
class InequivalenceReport:
    """Sizes of the quadruple-product invariant sets of two transition matrices."""

    t: float
    x: float
    fc_distinct: int
    fc_profile: tuple[tuple[complex, int], ...]
    blocks_distinct: int
    blocks_profile: tuple[tuple[complex, int], ...]
    total: int
    fc_larger: bool


def inequivalence_report(t: float, x: float, tol: float = 1e-10) -> InequivalenceReport:
    """Compare the invariant sets of F(0,b(t))* C(t) and of T(x).

    The quadruple-product invariant is preserved by equivalence, so a
    strictly larger distinct-value set for the transition matrix
    F(0,b(t))* C(t) shows the two triplet families are inequivalent.
    """
    p = triplet_params(t)
    F = build_F(FourierParams(0.0, p.b))
    G = F.conj().T @ build_C(t)
    if not is_complex_hadamard(G, 1e-9):
        raise FactorizationError("transition matrix is not Hadamard")
    T = dephase(build_T(float(x)))
    fc = cluster_multiset(haagerup_invariant(G), tol)
    tv = cluster_multiset(haagerup_invariant(T), tol)
    return InequivalenceReport(
        t=float(t),
        x=float(x),
        fc_distinct=len(fc),
        fc_profile=tuple(fc),
        blocks_distinct=len(tv),
        blocks_profile=tuple(tv),
        total=6**4,
        fc_larger=len(fc) > len(tv),
    )
