"""Backend selection for the backtracking counter.

The compiled ``_ckernel`` is used when it was built and the target fits in a
machine word; otherwise, or when ``HOMLAB_PURE_PYTHON=1`` is set, the
pure-Python twin runs.  A 64-bit overflow in the compiled path falls back to
Python integers, so results are exact either way.
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

if os.environ.get("HOMLAB_PURE_PYTHON", "") not in ("", "0"):
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"


def count_backtrack(nbr, doms, later, tail, backend: str | None = None) -> int:
    if backend == "python" or _ckernel is None or len(nbr) > 64:
        if backend == "cython" and _ckernel is None:
            raise RuntimeError("compiled kernel not available")
        return _pykernel.count_backtrack(nbr, doms, later, tail)
    try:
        return _ckernel.count_backtrack(nbr, doms, later, tail)
    except OverflowError:
        return _pykernel.count_backtrack(nbr, doms, later, tail)
