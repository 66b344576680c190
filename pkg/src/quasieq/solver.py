"""Projected normal-subgradient method for quasiconvex equilibrium
problems, in two variants:

* ng1 iterates x_{k+1} = P_C(x_k - alpha_k g_k) with a unit diagonal
  GP-subgradient g_k and stops on a zero subgradient, an exact projection
  fixed point, or a step shorter than tol_step;
* ng2 additionally solves the best-response subproblem min_y f(x_k, y)
  every iteration and stops once the residual -min_y f(x_k, y) drops
  below tol_residual, which certifies an approximate solution.

Both keep a per-iteration trace that can be audited after the fact: the
step-length bound ||x_{k+1} - x_k|| <= alpha_k and a Fejer-type
inequality relating consecutive distances to any feasible point.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import ConfigurationError, DimensionError
from .linalg import as_vector

VARIANTS = ("ng1", "ng2")


@dataclass(frozen=True)
class StepSchedule:
    """Step sizes alpha_k = scale / (k + 1): divergent sum, summable
    squares."""

    scale: float
    kind: str = "scaled-harmonic"

    def __post_init__(self):
        if self.kind != "scaled-harmonic":
            raise ConfigurationError(f"unknown schedule kind {self.kind!r}")
        if not self.scale > 0.0:
            raise ConfigurationError("schedule scale must be positive")
        object.__setattr__(self, "scale", float(self.scale))


def step_alpha(schedule: StepSchedule, k: int) -> float:
    if k < 0:
        raise ValueError("iteration index must be nonnegative")
    return schedule.scale / (k + 1)


@dataclass(frozen=True)
class SolverConfig:
    variant: str = "ng2"
    schedule: StepSchedule = field(default_factory=lambda: StepSchedule(100.0))
    max_iter: int = 2000
    tol_step: float = 1e-4
    tol_residual: float = 1e-3
    tol_success: float = 1e-1
    tol_zero_grad: float = 1e-12
    # trace retention: None = full, 0 = none, n = last n records
    trace_keep: Optional[int] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ConfigurationError(f"variant must be one of {VARIANTS}")
        if self.max_iter < 1:
            raise ConfigurationError("max_iter must be at least 1")
        for name in ("tol_step", "tol_residual", "tol_success", "tol_zero_grad"):
            if not getattr(self, name) > 0.0:
                raise ConfigurationError(f"{name} must be positive")
        if self.trace_keep is not None and self.trace_keep < 0:
            raise ConfigurationError("trace_keep must be None or >= 0")


@dataclass
class IterationRecord:
    k: int
    x: np.ndarray
    g_raw_norm: float
    g_unit: np.ndarray
    alpha: float
    step_norm: float
    residual: Optional[float] = None


class SolveStatus(Enum):
    ZERO_GRADIENT = "solved-by-zero-gradient"
    FIXED_POINT = "solved-by-fixed-point"
    STEP_BELOW_TOL = "step-below-tol"
    RESIDUAL_BELOW_TOL = "residual-below-tol"
    MAX_ITER_REACHED = "max-iter-reached"


#: statuses that certify the final iterate solves the problem exactly
CERTIFIED_STATUSES = (SolveStatus.ZERO_GRADIENT, SolveStatus.FIXED_POINT)


@dataclass
class SolveReport:
    status: SolveStatus
    x_final: np.ndarray
    iterations: int
    trace: list[IterationRecord]
    final_residual: Optional[float]
    best_residual: Optional[float]
    elapsed_seconds: float

    def success(self, tol_success: float = 1e-1) -> bool:
        """Residual at the best iterate below the success threshold."""
        return self.best_residual is not None and self.best_residual < tol_success


def normal_subgradient_solve(oracle, feasible_set, config: SolverConfig,
                             x0=None) -> SolveReport:
    """Run the normal-subgradient method from x0 (default: set center).

    The start point is projected onto the feasible set first.  Every
    completed projection step appends an IterationRecord; under ng2 the
    record also carries the residual -min_y f(x_k, y) evaluated at x_k
    before the step.  final_residual is the residual at x_final whenever
    a best-response oracle is available (for ng1 this costs one extra
    call at termination).
    """
    if oracle.dim != feasible_set.dim:
        raise DimensionError(
            f"oracle dimension {oracle.dim} != set dimension {feasible_set.dim}"
        )
    best_response = getattr(oracle, "best_response", None)
    ng2 = config.variant == "ng2"
    if ng2 and best_response is None:
        raise ConfigurationError("ng2 requires an oracle with a best response")

    if x0 is None:
        x0 = feasible_set.center
    x = feasible_set.project(as_vector(x0, "x0"))

    if config.trace_keep is None:
        trace: "list[IterationRecord] | deque[IterationRecord]" = []
    else:
        trace = deque(maxlen=config.trace_keep)
    best_residual: Optional[float] = None
    final_residual: Optional[float] = None
    iterations = 0

    start = time.perf_counter()
    k = 0
    while True:
        if k >= config.max_iter:
            status = SolveStatus.MAX_ITER_REACHED
            break
        iterations = k + 1

        residual: Optional[float] = None
        if ng2:
            _, min_value = best_response(x)
            residual = -min_value + 0.0  # avoid -0.0
            if best_residual is None or residual < best_residual:
                best_residual = residual
            if residual < config.tol_residual:
                status = SolveStatus.RESIDUAL_BELOW_TOL
                final_residual = residual
                break

        g = oracle.diagonal_subgradient(x)
        g_raw_norm = float(np.linalg.norm(g))
        if g_raw_norm <= config.tol_zero_grad:
            status = SolveStatus.ZERO_GRADIENT
            final_residual = residual
            break

        g_unit = g / g_raw_norm
        alpha = step_alpha(config.schedule, k)
        x_next = feasible_set.project(x - alpha * g_unit)
        step_norm = float(np.linalg.norm(x_next - x))
        if config.trace_keep != 0:
            trace.append(IterationRecord(
                k=k, x=x.copy(), g_raw_norm=g_raw_norm, g_unit=g_unit,
                alpha=alpha, step_norm=step_norm, residual=residual,
            ))

        if np.array_equal(x_next, x):
            status = SolveStatus.FIXED_POINT
            final_residual = residual
            break
        x = x_next
        if config.variant == "ng1" and step_norm < config.tol_step:
            status = SolveStatus.STEP_BELOW_TOL
            break
        k += 1
    elapsed = time.perf_counter() - start

    if final_residual is None and best_response is not None:
        _, min_value = best_response(x)
        final_residual = -min_value + 0.0
    if final_residual is not None:
        if best_residual is None or final_residual < best_residual:
            best_residual = final_residual

    return SolveReport(
        status=status,
        x_final=x,
        iterations=iterations,
        trace=list(trace),
        final_residual=final_residual,
        best_residual=best_residual,
        elapsed_seconds=elapsed,
    )


def step_length_audit(trace, slack: float = 1e-12) -> bool:
    """Check ||x_{k+1} - x_k|| <= alpha_k on every record."""
    if not trace:
        raise ValueError("trace is empty")
    return all(rec.step_norm <= rec.alpha + slack for rec in trace)


def fejer_audit(trace, z, x_final=None, slack: float = 1e-10) -> bool:
    """Check the Fejer-type inequality

        ||x_{k+1} - z||^2 <= ||x_k - z||^2
                             + 2 alpha_k <g_k, z - x_k> + 2 alpha_k^2

    over consecutive trace records (g_k is the stored unit subgradient).
    When x_final is given, the last record's step into x_final is audited
    too.  A trace with fewer than two records and no x_final is vacuously
    true.
    """
    z = as_vector(z, "z")
    pairs = [(trace[i], trace[i + 1].x) for i in range(len(trace) - 1)]
    if x_final is not None and trace:
        pairs.append((trace[-1], as_vector(x_final, "x_final")))
    for rec, x_next in pairs:
        if rec.x.size != z.size:
            raise DimensionError("z dimension does not match trace")
        lhs = float(np.sum((x_next - z) ** 2))
        rhs = (
            float(np.sum((rec.x - z) ** 2))
            + 2.0 * rec.alpha * float(rec.g_unit @ (z - rec.x))
            + 2.0 * rec.alpha**2
        )
        if lhs > rhs + slack:
            return False
    return True
