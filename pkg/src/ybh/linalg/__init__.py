"""Matrices over k, tensor calculus, ranks and Smith normal form."""

from .matrix import (
    RingMatrix,
    TensorIndex,
    column_sums,
    compose,
    compose_all,
    identity_tensor,
    kron,
    kron_all,
    mat_equal_upto_column_order,
    tensor_index,
)
from .snf import SnfResult, determinant, invariant_factors, kernel_rank, rank, snf
from .textio import dump, dumps, load, loads

__all__ = [
    "RingMatrix",
    "TensorIndex",
    "SnfResult",
    "column_sums",
    "compose",
    "compose_all",
    "determinant",
    "dump",
    "dumps",
    "identity_tensor",
    "invariant_factors",
    "kernel_rank",
    "kron",
    "kron_all",
    "load",
    "loads",
    "mat_equal_upto_column_order",
    "rank",
    "snf",
    "tensor_index",
]
