"""quasieq: projected subgradient solver for equilibrium problems whose
bifunction is quasiconvex in its second argument, with an
affine-fractional generalized-variational-inequality instance family,
exact Dinkelbach best responses, a paramonotonicity checker, a
reproducible instance generator and a benchmark CLI.
"""

from .bench import BenchmarkReport, BenchmarkRow, format_benchmark_table, run_benchmark
from .errors import (
    ConfigurationError,
    ConvergenceError,
    DimensionError,
    DomainError,
    GenerationError,
    InstanceFormatError,
)
from .fractional import (
    DinkelbachResult,
    FractionalObjective,
    best_response_residual,
    dinkelbach_minimize,
    grid_bruteforce_minimize,
    minimize_linear_over_box,
    response_objective,
)
from .generator import GeneratorConfig, generate_instances
from .linalg import numeric_rank, singular_values, symmetric_eigenvalues
from .monotonicity import (
    ParamonotonicityReport,
    check_paramonotone,
    compute_a_hat,
    paramonotonicity_report,
)
from .oracles import (
    AffineFractionalInstance,
    AffineFractionalOracle,
    AffineVIInstance,
    AffineVIOracle,
    EquilibriumOracle,
    fractional_diagonal_subgradient,
    fractional_value,
    vi_diagonal_subgradient,
    vi_value,
)
from .rng import rng_stream
from .serialize import (
    parse_instance_file,
    read_trace_csv,
    write_benchmark_csv,
    write_instance_file,
    write_trace_csv,
)
from .sets import BallSet, BoxSet
from .solver import (
    IterationRecord,
    SolveReport,
    SolveStatus,
    SolverConfig,
    StepSchedule,
    fejer_audit,
    normal_subgradient_solve,
    step_alpha,
    step_length_audit,
)

__version__ = "0.1.0"

__all__ = [
    "AffineFractionalInstance",
    "AffineFractionalOracle",
    "AffineVIInstance",
    "AffineVIOracle",
    "BallSet",
    "BenchmarkReport",
    "BenchmarkRow",
    "BoxSet",
    "ConfigurationError",
    "ConvergenceError",
    "DimensionError",
    "DinkelbachResult",
    "DomainError",
    "EquilibriumOracle",
    "FractionalObjective",
    "GenerationError",
    "GeneratorConfig",
    "InstanceFormatError",
    "IterationRecord",
    "ParamonotonicityReport",
    "SolveReport",
    "SolveStatus",
    "SolverConfig",
    "StepSchedule",
    "best_response_residual",
    "check_paramonotone",
    "compute_a_hat",
    "dinkelbach_minimize",
    "fejer_audit",
    "format_benchmark_table",
    "fractional_diagonal_subgradient",
    "fractional_value",
    "generate_instances",
    "grid_bruteforce_minimize",
    "minimize_linear_over_box",
    "normal_subgradient_solve",
    "numeric_rank",
    "paramonotonicity_report",
    "parse_instance_file",
    "read_trace_csv",
    "response_objective",
    "rng_stream",
    "run_benchmark",
    "singular_values",
    "step_alpha",
    "step_length_audit",
    "symmetric_eigenvalues",
    "vi_diagonal_subgradient",
    "vi_value",
    "write_benchmark_csv",
    "write_instance_file",
    "write_trace_csv",
]
