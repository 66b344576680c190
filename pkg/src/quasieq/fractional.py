"""Exact minimization of affine-fractional objectives over a box.

The workhorse is Dinkelbach iteration: min (p'y + q)/(c'y + d) is found
by repeatedly minimizing the parametric affine function
(p - alpha c)'y + (q - alpha d) over the box, which has a closed-form
vertex solution, and updating alpha to the ratio at the minimizer.  A
grid brute-force oracle is included for validation in low dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionError, DomainError
from .linalg import as_vector
from .sets import BoxSet

DINKELBACH_TOL = 1e-10
DINKELBACH_MAX_ITER = 100


@dataclass(frozen=True)
class FractionalObjective:
    """y |-> (p'y + q) / (c'y + d); the denominator must stay positive
    over the box it is minimized on."""

    p: np.ndarray
    q: float
    c: np.ndarray
    d: float

    def __post_init__(self):
        p = as_vector(self.p, "p")
        c = as_vector(self.c, "c")
        if p.shape != c.shape:
            raise DimensionError("p and c must have the same dimension")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "q", float(self.q))
        object.__setattr__(self, "d", float(self.d))

    def numerator(self, y: np.ndarray) -> float:
        return float(self.p @ y) + self.q

    def denominator(self, y: np.ndarray) -> float:
        return float(self.c @ y) + self.d

    def __call__(self, y) -> float:
        y = as_vector(y, "y")
        if y.size != self.p.size:
            raise DimensionError(f"y has dimension {y.size}, objective has {self.p.size}")
        den = self.denominator(y)
        if den <= 0.0:
            raise DomainError(f"denominator {den:g} is not positive at y={y}")
        return self.numerator(y) / den


@dataclass(frozen=True)
class DinkelbachResult:
    y: np.ndarray
    value: float
    iterations: int
    alphas: tuple[float, ...]


def minimize_linear_over_box(w, box: BoxSet) -> tuple[np.ndarray, float]:
    """argmin of w'y over the box: lo where w > 0, hi where w < 0,
    ties broken to lo."""
    w = as_vector(w, "w")
    if w.size != box.dim:
        raise DimensionError(f"w has dimension {w.size}, box has {box.dim}")
    y = np.where(w < 0.0, box.hi, box.lo)
    return y, float(w @ y)


def dinkelbach_minimize(
    obj: FractionalObjective,
    box: BoxSet,
    tol: float = DINKELBACH_TOL,
    max_iter: int = DINKELBACH_MAX_ITER,
) -> DinkelbachResult:
    """Minimize an affine-fractional objective over a box.

    Starting from alpha = obj(box center), each round minimizes
    F(alpha) = min_y (p - alpha c)'y + (q - alpha d) in closed form and
    either stops (|F| below the scaled tolerance) or resets alpha to the
    objective value at the minimizer.  The alpha sequence is
    nonincreasing; this is asserted each round.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    alpha = obj(box.center)
    alphas = [alpha]
    y = box.center
    for iteration in range(1, max_iter + 1):
        y, lin = minimize_linear_over_box(obj.p - alpha * obj.c, box)
        f_alpha = lin + obj.q - alpha * obj.d
        den = obj.denominator(y)
        if den <= 0.0:
            raise DomainError(f"denominator {den:g} is not positive at y={y}")
        if abs(f_alpha) <= tol * max(1.0, abs(alpha) * den):
            return DinkelbachResult(y, obj(y), iteration, tuple(alphas))
        new_alpha = obj.numerator(y) / den
        assert new_alpha <= alpha + 1e-12 * max(1.0, abs(alpha)), \
            "Dinkelbach ratio increased"
        alpha = new_alpha
        alphas.append(alpha)
    raise ConvergenceError(
        f"Dinkelbach did not converge in {max_iter} iterations",
        last_point=y,
        last_value=alpha,
    )


def grid_bruteforce_minimize(
    obj: FractionalObjective, box: BoxSet, points_per_axis: int
) -> tuple[np.ndarray, float]:
    """Exhaustive minimization over a uniform grid including both box
    endpoints.  Only for dimension <= 3."""
    if box.dim > 3:
        raise DimensionError("grid brute force supports dimension <= 3 only")
    if points_per_axis < 2:
        raise ValueError("points_per_axis must be at least 2")
    axes = [
        np.linspace(box.lo[i], box.hi[i], points_per_axis)
        for i in range(box.dim)
    ]
    grids = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    numer = pts @ obj.p + obj.q
    denom = pts @ obj.c + obj.d
    if np.any(denom <= 0.0):
        raise DomainError("denominator is not positive on the grid")
    vals = numer / denom
    best = int(np.argmin(vals))
    return pts[best].copy(), float(vals[best])


def response_objective(inst, x) -> FractionalObjective:
    """Fractional objective y |-> f_x(y) + const for an affine-fractional
    instance at the point x (p = A1'(Ax + b), q = b1'(Ax + b))."""
    x = as_vector(x, "x")
    u = inst.A @ x + inst.b
    return FractionalObjective(p=inst.A1.T @ u, q=float(inst.b1 @ u),
                               c=inst.c, d=inst.d)


def best_response_residual(
    inst,
    x,
    tol: float = DINKELBACH_TOL,
    max_iter: int = DINKELBACH_MAX_ITER,
) -> tuple[np.ndarray, float]:
    """Best response y* = argmin_y f(x, y) over the instance box and the
    residual -min_y f(x, y).

    The residual is nonnegative up to solver tolerance (y = x is always
    feasible) and equals zero exactly when x solves the equilibrium
    problem.
    """
    obj = response_objective(inst, x)
    result = dinkelbach_minimize(obj, inst.box, tol=tol, max_iter=max_iter)
    return result.y, obj(x) - result.value
