"""Backend selection for the hot kernels.

The compiled extension is used when importable; set ``ESNBENCH_PURE=1`` to
force the pure NumPy/Python fallback (useful for benchmarking and for
environments without a compiler).  ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("ESNBENCH_PURE") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

drive_kernel = _impl.drive_kernel
mg_kernel = _impl.mg_kernel
