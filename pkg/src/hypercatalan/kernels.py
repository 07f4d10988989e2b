"""Backend selection for the series convolution kernel.

The compiled extension is used when it was built; set ``HC_PURE_PYTHON=1``
to force the pure-Python fallback.
"""
import os
from array import array

from . import _kernels_py

BACKEND = "python"
_compiled = None

if os.environ.get("HC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _compiled = None


def available_backends():
    return ["python", "cython"] if _compiled is not None else ["python"]


def convolve(ak, aw, ac, bk, bw, bc, limits, size, backend=None):
    """Accumulate all admissible pairwise products; returns ``{packed key: coefficient}``."""
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        return _compiled.convolve(
            array("q", ak), array("q", aw), list(ac),
            array("q", bk), array("q", bw), list(bc),
            limits, size,
        )
    return _kernels_py.convolve(ak, aw, ac, bk, bw, bc, limits, size)
