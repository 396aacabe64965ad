"""Kernel selection: compiled extension when importable, else pure Python.

Set ``SURFSKEW_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py
if os.environ.get("SURFSKEW_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py

count_orbits = _impl.count_orbits
face_count = _impl.face_count
bb_max_faces = _impl.bb_max_faces
