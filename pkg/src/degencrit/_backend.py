"""Kernel backend chosen at import: compiled core when built, pure Python otherwise.

Set ``DEGENCRIT_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("DEGENCRIT_PURE_PYTHON"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.BACKEND
KernelGraph = kernels.KernelGraph
canonical_labelling = kernels.canonical_labelling
