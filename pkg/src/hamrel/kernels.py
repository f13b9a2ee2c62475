"""Kernel selection: compiled extension if importable, else pure Python.

Set ``HAMREL_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _purekernels as pure

BACKEND = "pure"
count_pathsets = pure.count_pathsets
refine_simple = pure.refine_simple

if os.environ.get("HAMREL_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled
    except ImportError:  # extension not built
        compiled = None
    if compiled is not None:
        BACKEND = "compiled"
        count_pathsets = compiled.count_pathsets
        refine_simple = compiled.refine_simple
else:
    compiled = None

__all__ = ["BACKEND", "count_pathsets", "refine_simple", "pure", "compiled"]
