"""Orthonormal discrete wavelet transform"""

from .padding import next_power_of_two, pad_rows, pad_signal, truncate_rows
from .transform import (
    coefficient_layout,
    dwt_forward,
    dwt_inverse,
    dwt_matrix,
    transform_rows,
)

__all__ = [
    "coefficient_layout",
    "dwt_forward",
    "dwt_inverse",
    "dwt_matrix",
    "next_power_of_two",
    "pad_rows",
    "pad_signal",
    "transform_rows",
    "truncate_rows",
]
