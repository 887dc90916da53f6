import os
import logging
from typing import Optional, Union

from dotenv import load_dotenv

from qenum.errors import ConfigurationError

"""
Configuration Management for the Quantum Enumerator Toolkit

This module loads the brute-force guards, numerical tolerances and directory settings from
environment variables, with defaults that keep every computation at desk scale.

Configuration Sources (in order of precedence):
1. Environment variables (a local .env file is honoured)
2. Default values defined in this module

Environment Variables:
    QENUM_MAX_N: largest n accepted by the projector-based enumeration (default 6)
    QENUM_MAX_STREAM_N: largest n for streaming all 4^n Pauli errors (default 10)
    QENUM_MAX_GENERATORS: largest number of F2 generators enumerated (default 30)
    QENUM_WORKERS: thread workers for the partitioned error stream (default 1)
    QENUM_ORTHONORMAL_TOL: orthonormality band for projector bases
    QENUM_TRACE_IMAG_TOL: allowed imaginary residue of Tr(eP)
    QENUM_ROUNDING_TOL: allowed distance of trace accumulators from integers
    QENUM_CONDITION_TOL: sign band for float-valued certificates
    QENUM_QUAD_TOL: absolute tolerance of the adaptive quadrature
    QENUM_GRID_STEP: grid step of the asymptotic optimizer
    QENUM_REFINE_TOL: tolerance of the optimizer refinement
    QENUM_CODES_DIR: directory of named code files, relative to the package
    QENUM_LOG_LEVEL: log level used by the CLI and the tool server
"""

logger = logging.getLogger(__name__)

load_dotenv()

Number = Union[int, float]


def _get_env_str(key: str, default: str, choices: Optional[tuple] = None) -> str:
    value = os.getenv(key, default)
    if choices is not None and value not in choices:
        raise ConfigurationError(f"{key}='{value}' is not one of {choices}")
    return value


def _get_env_number(
    key: str, default: Number, kind: type, min_val: Optional[Number] = None, max_val: Optional[Number] = None
) -> Number:
    """An int or float environment variable, kept inside [min_val, max_val]."""
    raw = os.getenv(key)
    if raw is None:
        return default
    try:
        value = kind(raw)
    except ValueError:
        raise ConfigurationError(f"{key}='{raw}' is not a valid {kind.__name__}")
    if (min_val is not None and value < min_val) or (max_val is not None and value > max_val):
        raise ConfigurationError(f"{key}={value} lies outside [{min_val}, {max_val}]")
    return value


def _get_env_int(key: str, default: int, min_val: Optional[int] = None, max_val: Optional[int] = None) -> int:
    return _get_env_number(key, default, int, min_val, max_val)


def _get_env_float(key: str, default: float, min_val: Optional[float] = None, max_val: Optional[float] = None) -> float:
    return _get_env_number(key, default, float, min_val, max_val)


try:
    # --- Brute-force guards ---
    MAX_PROJECTOR_N = _get_env_int("QENUM_MAX_N", 6, min_val=1, max_val=12)
    MAX_STREAM_N = _get_env_int("QENUM_MAX_STREAM_N", 10, min_val=1, max_val=14)
    MAX_GENERATORS = _get_env_int("QENUM_MAX_GENERATORS", 30, min_val=0, max_val=40)
    WORKERS = _get_env_int("QENUM_WORKERS", 1, min_val=1, max_val=64)

    # --- Numerical tolerances ---
    ORTHONORMAL_TOL = _get_env_float("QENUM_ORTHONORMAL_TOL", 1e-10, min_val=0.0)
    TRACE_IMAG_TOL = _get_env_float("QENUM_TRACE_IMAG_TOL", 1e-9, min_val=0.0)
    ROUNDING_TOL = _get_env_float("QENUM_ROUNDING_TOL", 1e-6, min_val=0.0, max_val=0.5)
    CONDITION_TOL = _get_env_float("QENUM_CONDITION_TOL", 1e-9, min_val=0.0)
    QUAD_TOL = _get_env_float("QENUM_QUAD_TOL", 1e-8, min_val=1e-15)
    GRID_STEP = _get_env_float("QENUM_GRID_STEP", 1e-4, min_val=1e-6, max_val=0.1)
    REFINE_TOL = _get_env_float("QENUM_REFINE_TOL", 1e-7, min_val=1e-12)

    # --- Directories ---
    CODES_DIR = _get_env_str("QENUM_CODES_DIR", "codes")

    # --- Logging ---
    LOG_LEVEL = _get_env_str("QENUM_LOG_LEVEL", "INFO", choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"))

    logger.debug("Configuration loaded successfully")

except ConfigurationError as e:
    logger.error(f"Configuration error: {e}")
    raise
except Exception as e:
    logger.error(f"Unexpected error loading configuration: {e}")
    raise ConfigurationError(f"Failed to load configuration: {e}")
