"""Select the recurrence kernel at import time.

The compiled extension is preferred when present; the pure-Python twin is a
drop-in replacement so source checkouts work without a compiler.  Setting
``SECTORIAL_MEANS_PURE=1`` forces the Python kernel (used by the benchmark
and the parity tests).
"""

import os

from . import _kernels_py

if os.environ.get("SECTORIAL_MEANS_PURE", "") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

parlett_fill = _impl.parlett_fill


def backend_name():
    """Name of the active kernel backend: ``"compiled"`` or ``"python"``."""
    return BACKEND
