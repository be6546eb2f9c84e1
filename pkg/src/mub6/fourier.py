"""The two-parameter Fourier family F(a, b) of 6x6 complex Hadamard matrices.

F(a, b) is parameterized by two phases a, b in turns, with x = e^{2i pi a},
y = e^{2i pi b} and omega = e^{2i pi /3}:

    sqrt(6) F(a,b) =
        [ 1    1         1     1    1     1      ]
        [ 1   -w^2 x     w    -x    w^2  -w x    ]
        [ 1    w y       w^2   y    w     w^2 y  ]
        [ 1   -1         1    -1    1    -1      ]
        [ 1    w^2 x     w     x    w^2   w x    ]
        [ 1   -w y       w^2  -y    w    -w^2 y  ]

F(0, 0) is the standard 6x6 Fourier matrix.  Up to equivalence the whole
family is covered by the closed triangle with vertices (0, 0), (1/6, 0)
and (1/6, 1/12).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DIM, OMEGA, SQRT_D

TRIANGLE_VERTICES = ((0.0, 0.0), (1.0 / 6.0, 0.0), (1.0 / 6.0, 1.0 / 12.0))


@dataclass(frozen=True)
class FourierParams:
    """Parameters (a, b) of F(a, b), both in turns."""

    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("parameters must be finite")

    @property
    def x(self) -> complex:
        return np.exp(2j * np.pi * self.a)

    @property
    def y(self) -> complex:
        return np.exp(2j * np.pi * self.b)


def build_F(params: FourierParams) -> np.ndarray:
    """The matrix F(a, b); complex Hadamard for every (a, b)."""
    x, y = params.x, params.y
    w = OMEGA
    w2 = OMEGA**2
    rows = [
        [1, 1, 1, 1, 1, 1],
        [1, -w2 * x, w, -x, w2, -w * x],
        [1, w * y, w2, y, w, w2 * y],
        [1, -1, 1, -1, 1, -1],
        [1, w2 * x, w, x, w2, w * x],
        [1, -w * y, w2, -y, w, -w2 * y],
    ]
    return np.array(rows, dtype=np.complex128) / SQRT_D


def in_fundamental_domain(params: FourierParams, tol: float = 0.0) -> bool:
    """Membership in the closed triangle (0,0), (1/6,0), (1/6,1/12)."""
    a, b = params.a, params.b
    return (
        a >= -tol
        and a <= 1.0 / 6.0 + tol
        and b >= -tol
        and b <= a / 2.0 + tol
    )


# Entry phases of the columns of sqrt(6) F(a,b), rows 1..5, in turns.
# Odd columns carry the parameters: rows 1 and 4 an a-offset, rows 2 and 5
# a b-offset, so those four entries are only known up to an interval of
# width 1/N when (a, b) ranges over an N-grid cell.
_COL_BASE = np.array(
    [
        [0, 0, 0, 0, 0],
        [1 / 6, 1 / 3, 1 / 2, 2 / 3, 5 / 6],
        [1 / 3, 2 / 3, 0, 1 / 3, 2 / 3],
        [1 / 2, 0, 1 / 2, 0, 1 / 2],
        [2 / 3, 1 / 3, 0, 2 / 3, 1 / 3],
        [5 / 6, 2 / 3, 1 / 2, 1 / 3, 1 / 6],
    ]
)
_COL_A_MASK = np.array(
    [[0, 0, 0, 0, 0], [1, 0, 0, 1, 0], [0] * 5, [1, 0, 0, 1, 0], [0] * 5, [1, 0, 0, 1, 0]]
)
_COL_B_MASK = np.array(
    [[0, 0, 0, 0, 0], [0, 1, 0, 0, 1], [0] * 5, [0, 1, 0, 0, 1], [0] * 5, [0, 1, 0, 0, 1]]
)


def column_phase_table(params: FourierParams, width: float = 0.0):
    """Phases (turns) and interval widths of the 6 column of F(a, b).

    Returns (phases, widths), both of shape (6, 5): row j holds entries
    1..5 of column j (the entry 0 is always 1).  `width` is the common
    interval length attached to every parameter-carrying entry; columns
    0, 2, 4 are parameter-free and get zero widths.
    """
    phases = (
        _COL_BASE + _COL_A_MASK * params.a + _COL_B_MASK * params.b
    ) % 1.0
    widths = (_COL_A_MASK | _COL_B_MASK).astype(float) * width
    return phases, widths


def lemma1_equivalence_check(
    alpha: complex, beta: complex, gamma: complex, tol: float = 1e-9
) -> bool:
    """Agreement of two equivalent characterizations of a modulus system.

    The three conditions |alpha + beta w^k + gamma w^{2k}|^2 = 6 (k = 0, 1, 2,
    w a primitive cube root of unity) hold exactly when
    |alpha|^2 + |beta|^2 + |gamma|^2 = 6 and
    alpha conj(beta) + beta conj(gamma) + gamma conj(alpha) = 0.
    Returns True iff the two predicates agree at the given tolerance.
    """
    w = OMEGA
    lhs = all(
        abs(abs(alpha + beta * w**k + gamma * w ** (2 * k)) ** 2 - 6.0) <= tol
        for k in range(3)
    )
    mods = abs(alpha) ** 2 + abs(beta) ** 2 + abs(gamma) ** 2
    cyc = alpha * np.conj(beta) + beta * np.conj(gamma) + gamma * np.conj(alpha)
    rhs = abs(mods - 6.0) <= tol and abs(cyc) <= tol
    return lhs == rhs


@dataclass(frozen=True)
class ReducedSystemResidual:
    """Residuals of the three reduced unbiasedness conditions.

    For unimodular c_1..c_5 the vector (1/sqrt(6))(1, conj(c_1), ..., conj(c_5))
    is unbiased to both the standard basis and F(a, b) iff r1, r2, r3 all
    vanish.  mod_residuals reports | |c_j| - 1 |.
    """

    r1: float
    r2: complex
    r3: complex
    mod_residuals: tuple[float, float, float, float, float]

    def max_residual(self) -> float:
        return max(abs(self.r1), abs(self.r2), abs(self.r3), *self.mod_residuals)


def reduced_system_residual(c, params: FourierParams) -> ReducedSystemResidual:
    """Evaluate the reduced system for c = (c_1, ..., c_5)."""
    c1, c2, c3, c4, c5 = (complex(z) for z in c)
    x, y = params.x, params.y
    r1 = (c3 + c1 * np.conj(c4) + c5 * np.conj(c2)).real
    p, q, r = 1 + c3, c1 + c4, c2 + c5
    r2 = p * np.conj(q) + q * np.conj(r) + r * np.conj(p)
    p, q, r = 1 - c3, x * (c4 - c1), y * (c2 - c5)
    r3 = p * np.conj(q) + q * np.conj(r) + r * np.conj(p)
    mods = tuple(abs(abs(z) - 1.0) for z in (c1, c2, c3, c4, c5))
    return ReducedSystemResidual(float(r1), complex(r2), complex(r3), mods)


def direct_modulus_residuals(c, params: FourierParams) -> np.ndarray:
    """The six direct conditions ||<u, f_j>| - 1/sqrt(6)| for the same vector.

    Independent of the reduced system: builds u = (1/sqrt(6))(1, conj(c_1), ...)
    and tests it against every column of F(a, b) directly.
    """
    u = np.concatenate(([1.0 + 0j], np.conj(np.asarray(c, dtype=np.complex128))))
    u = u / np.sqrt(DIM)
    F = build_F(params)
    vals = np.abs(F.conj().T @ u)
    return np.abs(vals - 1.0 / np.sqrt(DIM))
