"""Kernel backend selection.

The compiled extension (flagcohom._corekernels) is used when it imported
successfully; otherwise the pure-Python kernels take over.  Set
FLAGCOHOM_BACKEND=py to force the fallback, or FLAGCOHOM_BACKEND=c to
require the extension (ImportError if it is not built).  Both backends
produce bit-identical output.
"""

from __future__ import annotations

import os

from . import _kernels_py

_choice = os.environ.get("FLAGCOHOM_BACKEND", "auto").strip().lower() or "auto"

if _choice in ("py", "python", "pure"):
    _impl = _kernels_py
    BACKEND = "py"
elif _choice in ("auto", "c", "compiled"):
    try:
        from . import _corekernels as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        if _choice != "auto":
            raise
        _impl = _kernels_py
        BACKEND = "py"
else:
    raise ValueError(f"unknown FLAGCOHOM_BACKEND value {_choice!r}")

coset_bfs = _impl.coset_bfs
grade_cohomology = _impl.grade_cohomology
