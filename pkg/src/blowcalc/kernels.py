"""Backend selection for the hot loops.

The compiled extension is used when it was built and ``BLOWCALC_PURE_PYTHON``
is not set; otherwise the pure-Python implementations are used.  Both expose
the same four functions.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"

if not os.environ.get("BLOWCALC_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

det_pair = _impl.det_pair
det_index = _impl.det_index
bareiss_det = _impl.bareiss_det
seq_neighbors = _impl.seq_neighbors

__all__ = ["BACKEND", "det_pair", "det_index", "bareiss_det", "seq_neighbors"]
