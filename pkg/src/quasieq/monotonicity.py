"""Paramonotonicity certificate for affine-fractional instances.

The bifunction with data (A, b, A1, b1, c, d) is paramonotone exactly
when, for A_hat = (d A1' - c b1') A, the symmetric part
S = (A_hat + A_hat')/2 is positive semidefinite and
rank(S) <= rank(A_hat).  Both conditions are decided numerically from
the Jacobi spectrum and singular values, with a tolerance relative to
||A_hat||_F.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    frobenius_norm,
    numeric_rank,
    singular_values,
    symmetric_eigenvalues,
)

DEFAULT_TOL = 1e-8


@dataclass
class ParamonotonicityReport:
    a_hat: np.ndarray
    a_hat_sym: np.ndarray
    min_eigenvalue: float
    rank_sym: int
    rank_a_hat: int
    verdict: bool
    tol: float  # absolute PSD slack actually applied


def compute_a_hat(inst) -> np.ndarray:
    """(d A1' - c b1') A for an affine-fractional instance."""
    return (inst.d * inst.A1.T - np.outer(inst.c, inst.b1)) @ inst.A


def paramonotonicity_report(a_hat: np.ndarray,
                            tol: float = DEFAULT_TOL) -> ParamonotonicityReport:
    """Certificate for a precomputed A_hat matrix."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    a_hat = np.asarray(a_hat, dtype=float)
    sym = 0.5 * (a_hat + a_hat.T)
    slack = tol * max(1.0, frobenius_norm(a_hat))
    min_eig = float(symmetric_eigenvalues(sym)[0])
    rank_sym = numeric_rank(singular_values(sym), tol)
    rank_a_hat = numeric_rank(singular_values(a_hat), tol)
    verdict = (min_eig >= -slack) and (rank_sym <= rank_a_hat)
    return ParamonotonicityReport(
        a_hat=a_hat,
        a_hat_sym=sym,
        min_eigenvalue=min_eig,
        rank_sym=rank_sym,
        rank_a_hat=rank_a_hat,
        verdict=verdict,
        tol=slack,
    )


def check_paramonotone(inst, tol: float = DEFAULT_TOL) -> ParamonotonicityReport:
    """Certificate for an affine-fractional instance."""
    return paramonotonicity_report(compute_a_hat(inst), tol)
