"""Whittaker dimensions for tame covers of GL_r via Hecke modules."""

from ._ggm import (
    SWEEP_CSV_HEADER,
    VERIFY_SUITES,
    BoundExceeded,
    InternalError,
    InvalidArgument,
    derive_params,
    dims,
    hilbert,
    orbits,
    sweep_csv,
    verify,
)

__all__ = [
    "SWEEP_CSV_HEADER",
    "VERIFY_SUITES",
    "BoundExceeded",
    "InternalError",
    "InvalidArgument",
    "derive_params",
    "dims",
    "hilbert",
    "orbits",
    "sweep_csv",
    "verify",
]
