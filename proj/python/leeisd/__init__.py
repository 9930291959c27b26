"""Lee-metric decoding toolkit for quaternary linear codes.

Exact cost estimation, collision decoding, and desk-scale code-based
encryption over Z4, backed by the C++ core.
"""

from ._core import (
    Instance,
    McEliece,
    Niederreiter,
    __version__,
    count_lee,
    decode_instance,
    enumerate_lee,
    estimate_f2,
    estimate_z4,
    gray_inverse,
    gray_map,
    gv_max_dim,
    key_size_binary,
    key_size_quaternary,
    lee_weight,
    optimize_f2,
    optimize_z4,
    rate,
    singleton_bound,
    sum_binom,
    sum_count_lee,
    table,
    unrank_lee,
)

__all__ = [
    "Instance",
    "McEliece",
    "Niederreiter",
    "__version__",
    "count_lee",
    "decode_instance",
    "enumerate_lee",
    "estimate_f2",
    "estimate_z4",
    "gray_inverse",
    "gray_map",
    "gv_max_dim",
    "key_size_binary",
    "key_size_quaternary",
    "lee_weight",
    "optimize_f2",
    "optimize_z4",
    "rate",
    "singleton_bound",
    "sum_binom",
    "sum_count_lee",
    "table",
    "unrank_lee",
]
