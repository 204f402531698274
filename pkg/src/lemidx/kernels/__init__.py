"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
fallback takes over transparently.  Set ``LEMIDX_PURE_PYTHON=1`` to force
the fallback (benchmarks use this to compare the two).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("LEMIDX_PURE_PYTHON", "0") not in ("0", ""):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

move_scan = _impl.move_scan
walk_moves = _impl.walk_moves
batch_move = _impl.batch_move


def available_backends() -> dict:
    """Name -> kernel module, for benchmarks and cross-checking tests."""
    out = {"pure": _pure}
    try:
        from . import _speedups  # type: ignore[attr-defined]

        out["compiled"] = _speedups
    except ImportError:
        pass
    return out
