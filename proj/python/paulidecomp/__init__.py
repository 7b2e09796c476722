"""Pauli-string decomposition of dense complex matrices.

The heavy lifting lives in the compiled extension; this package just
re-exports its public surface.
"""

from ._paulidecomp import (
    FormatError,
    __version__,
    coefficient,
    decompose,
    flipped_bit_index,
    gray_code,
    index_to_label,
    label_to_index,
    oracle_coefficient,
    recompose,
    xy_mask,
)

__all__ = [
    "FormatError",
    "__version__",
    "coefficient",
    "decompose",
    "flipped_bit_index",
    "gray_code",
    "index_to_label",
    "label_to_index",
    "oracle_coefficient",
    "recompose",
    "xy_mask",
]
