"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
fallback is used otherwise.  ``SASROOTS_BACKEND=python`` or
``SASROOTS_BACKEND=cython`` in the environment forces a choice (forcing
cython raises if the extension is missing).
"""

import os

_FORCED = os.environ.get("SASROOTS_BACKEND", "").strip().lower()


def _load():
    if _FORCED == "python":
        from ._core import fallback
        return fallback
    try:
        from ._core import _speedups
        return _speedups
    except ImportError:
        if _FORCED == "cython":
            raise
        from ._core import fallback
        return fallback


kernels = _load()
BACKEND_NAME = kernels.NAME


def available_backends():
    """Importable kernel modules keyed by name (for tests and benchmarks)."""
    from ._core import fallback
    out = {"python": fallback}
    try:
        from ._core import _speedups
        out["cython"] = _speedups
    except ImportError:
        pass
    return out
