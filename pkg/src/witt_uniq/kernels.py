"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels``.  Setting ``WITT_UNIQ_PURE=1`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

MODE_FIRST = _pykernels.MODE_FIRST
MODE_ENUMERATE = _pykernels.MODE_ENUMERATE
MODE_COUNT = _pykernels.MODE_COUNT
HEUR_MIN_SIZE = _pykernels.HEUR_MIN_SIZE
HEUR_LEFTMOST = _pykernels.HEUR_LEFTMOST


def _load():
    if os.environ.get("WITT_UNIQ_PURE", "") not in ("", "0"):
        return _pykernels, "python"
    try:
        from . import _ckernels
    except ImportError:
        return _pykernels, "python"
    return _ckernels, "cython"


_impl, BACKEND = _load()

dlx_search = _impl.dlx_search
k_cliques = _impl.k_cliques
Refiner = _impl.Refiner
relabel = _impl.relabel
