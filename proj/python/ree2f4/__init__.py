"""Modular decomposition matrices and decomposition-number bounds for the
Ree groups 2F4(q^2), q^2 = 2^(2n+1), at odd primes."""

from ree2f4._core import (
    Context,
    classify,
    group_order,
    group_order_poly,
    hecke_decomposition,
)

__all__ = [
    "Context",
    "classify",
    "group_order",
    "group_order_poly",
    "hecke_decomposition",
]
