"""Generalized parity and block diagonalization of the truncated k-photon Rabi model."""

from ._core import (
    ConvergenceError,
    DimensionError,
    DomainError,
    ModelParams,
    VerificationError,
    annihilation,
    block_diagonalize,
    build_full,
    build_hpm,
    creation,
    decompose,
    eigh,
    eigvalsh,
    evolve,
    generalized_parity,
    generalized_parity_sign,
    number,
    parse_complex,
    partial_parity,
    sector_spectrum,
    special_parity_P,
    special_parity_T,
    vacuum_state,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
