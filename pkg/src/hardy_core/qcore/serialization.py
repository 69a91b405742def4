"""JSON-friendly form of complex arrays: nested [re, im] pairs."""

from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt


def complex_pairs(values: npt.ArrayLike) -> Any:  # noqa: ANN401
    """Replace every complex entry by [re, im], preserving nesting."""
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim == 0:
        z = complex(arr)
        return [z.real + 0.0, z.imag + 0.0]
    return [complex_pairs(row) for row in arr]
