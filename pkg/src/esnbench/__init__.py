"""Echo state network benchmarks with transfer functions interpolated
between linear and tanh via truncated odd power series."""

from .errors import (
    ConfigError,
    DegenerateVarianceError,
    DimensionMismatchError,
    EsnBenchError,
    IntegrationError,
    InvalidRangeError,
    RegenerationExhaustedError,
    SpectralEstimateError,
    StateOverflowError,
)
from .harness import (
    DEFAULT_TRANSFER_GRID,
    DEFAULT_V_GRID,
    ExperimentConfig,
    ExperimentResult,
    load_config,
    read_csv,
    run_point,
    run_sensitivity,
    run_sweep,
    write_csv,
)
from .kernels import BACKEND
from .metrics import CapacityProfile, capacity, nmse, total_capacity
from .readout import ReadoutWeights, predict, pseudoinverse, train
from .reservoir import (
    Reservoir,
    StateTrajectory,
    build_dense_gaussian,
    build_gaussian_orthogonal,
    build_input_weights,
    build_reservoir,
    build_simple_cycle,
    drive,
    spectral_radius_estimate,
)
from .rng import RandomSource, derive_stream, new_source
from .tasks import (
    TaskInstance,
    gen_legendre,
    gen_mackey_glass,
    gen_memory,
    gen_narma10,
    integrate_mackey_glass,
    legendre_target,
)
from .transfer import (
    TANH,
    TransferSpec,
    evaluate,
    parse_transfer,
    rmse_to_tanh,
    taylor,
    taylor_coefficients,
)

__version__ = "0.1.0"
