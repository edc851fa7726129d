"""Zone determinant expansion and sparse-inverse log-determinant approximations."""

from ._core import (
    SparseMatrix,
    ZonedetError,
    __version__,
    bound_constant,
    dense_logdet,
    generators,
    hadamard_logdet,
    log_error_bound,
    pinching_bound_real,
    read_matrix_market,
    read_matrix_market_file,
    spai_logdet,
    write_matrix_market,
    zone_expansion,
)

__all__ = [
    "SparseMatrix",
    "ZonedetError",
    "__version__",
    "bound_constant",
    "dense_logdet",
    "generators",
    "hadamard_logdet",
    "log_error_bound",
    "pinching_bound_real",
    "read_matrix_market",
    "read_matrix_market_file",
    "spai_logdet",
    "write_matrix_market",
    "zone_expansion",
]
