"""Backend selection for the enumeration kernels.

The compiled module is used when it imports; set ``SANDWICH_RM_PURE=1`` to
force the numpy fallback.
"""

from __future__ import annotations

import os

from . import _fallback

fallback = _fallback
compiled = None

if not os.environ.get("SANDWICH_RM_PURE"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        compiled = None

_impl = compiled if compiled is not None else fallback
BACKEND = "compiled" if compiled is not None else "numpy"

enumerate_level = _impl.enumerate_level
collect_level = _impl.collect_level
