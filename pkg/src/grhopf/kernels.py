"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Setting ``GRHOPF_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("GRHOPF_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

rref_mod_p = _impl.rref_mod_p
sparse_mul_mod_p = _impl.sparse_mul_mod_p

__all__ = ["BACKEND", "rref_mod_p", "sparse_mul_mod_p"]
