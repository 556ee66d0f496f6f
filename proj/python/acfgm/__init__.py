"""AC-FGM: auto-conditioned fast gradient method, baselines and benchmark runner."""

from ._core import (
    AcFgm,
    ConfigError,
    DataError,
    Dataset,
    Diverged,
    Error,
    InvalidInput,
    Method,
    Problem,
    baseline,
    config_hash,
    lasso,
    least_squares,
    least_squares_lipschitz,
    logistic,
    normal_quantile,
    random_classification_instance,
    random_qp_instance,
    random_regression_instance,
    read_libsvm,
    resolve_penalty,
    run_config,
    sqrt_lasso,
    write_libsvm,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
