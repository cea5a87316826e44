"""Backend selection for the enumeration hot loops.

The compiled extension is used when it is importable; the numpy fallback
otherwise.  Set BREADTHLAB_PURE_PYTHON=1 to force the fallback (the
benchmark and the backend-agreement tests use this).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("BREADTHLAB_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
bfs_closure = _impl.bfs_closure
element_orders = _impl.element_orders
perm_order_single = _pykernels.perm_order_single


def get_backend(name: str):
    """Explicit backend lookup, independent of the import-time choice."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")
