"""Hot kernels, bound at import to the compiled core when it is built.

``BACKEND`` is ``"cython"`` or ``"python"``.  Both implementations are always
importable by name (``python_kernels``; ``compiled_kernels`` may be None) so
tests and the benchmark can compare them directly.
"""
from __future__ import annotations

from . import _pykernels as python_kernels

try:
    from . import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

_impl = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "cython" if compiled_kernels is not None else "python"

fiber_classes = _impl.fiber_classes
fiber_class_counts = _impl.fiber_class_counts
rank_mod_p = _impl.rank_mod_p

__all__ = [
    "BACKEND",
    "compiled_kernels",
    "python_kernels",
    "fiber_classes",
    "fiber_class_counts",
    "rank_mod_p",
]
