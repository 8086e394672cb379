"""Enumeration-kernel backend selection, decided once at import time.

The compiled Cython kernels are preferred when built; otherwise the
pure-Python fallback takes over with identical contracts.  Set
IRRLAB_BACKEND=python or IRRLAB_BACKEND=cython to force a choice (forcing
cython raises if the extension is missing).  Scan tables are cached per
order and returned read-only, since every verification suite reuses them.
"""

from __future__ import annotations

import os
from functools import lru_cache

from . import _scan_py

TREE_TABLE_CAP = _scan_py.TREE_TABLE_CAP
TREE_EXTREMAL_CAP = _scan_py.TREE_EXTREMAL_CAP
GRAPH_TABLE_CAP = _scan_py.GRAPH_TABLE_CAP

_forced = os.environ.get("IRRLAB_BACKEND", "")
if _forced not in ("", "python", "cython"):
    raise RuntimeError(f"IRRLAB_BACKEND must be 'python' or 'cython', got {_forced!r}")

_impl = None
if _forced != "python":
    try:
        from . import _scan_cy as _impl
    except ImportError:
        if _forced == "cython":
            raise RuntimeError("IRRLAB_BACKEND=cython but the compiled kernels are not built")
        _impl = None
if _impl is None:
    _impl = _scan_py

BACKEND_NAME = "python" if _impl is _scan_py else "cython"


def available_backends() -> dict:
    """Importable kernel modules by name (used by tests and the benchmark)."""
    out = {"python": _scan_py}
    try:
        from . import _scan_cy

        out["cython"] = _scan_cy
    except ImportError:
        pass
    return out


def _freeze(table):
    for value in table.values():
        if hasattr(value, "flags"):
            value.flags.writeable = False
    return table


@lru_cache(maxsize=None)
def tree_table(n: int) -> dict:
    """Cached per-tree index table (see the kernel docstring)."""
    return _freeze(_impl.tree_table(n))


@lru_cache(maxsize=None)
def tree_extremal(n: int) -> dict:
    """Cached streaming extremal scan over labeled trees."""
    return dict(_impl.tree_extremal(n))


@lru_cache(maxsize=None)
def graph_table(n: int) -> dict:
    """Cached per-graph index table (see the kernel docstring)."""
    return _freeze(_impl.graph_table(n))
