"""Kernel selection: compiled extension when available, else pure Python.

Set BALANCED_FORGE_PURE=1 to force the interpreted kernels even when the
extension is built (used by the benchmark and the twin-agreement tests).
"""
import os

from . import _mbc_pure

if os.environ.get("BALANCED_FORGE_PURE") == "1":
    _impl = _mbc_pure
    KERNEL = "pure"
else:
    try:
        from . import _speedups as _impl

        KERNEL = "compiled"
    except ImportError:
        _impl = _mbc_pure
        KERNEL = "pure"

direct_search = _impl.direct_search
cover_search = _impl.cover_search
