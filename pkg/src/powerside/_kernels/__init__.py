"""Backend selection for the hot numeric kernels.

Two interchangeable implementations exist: numba-compiled loops (default
when numba imports) and pure numpy. Set POWERSIDE_BACKEND=numpy or
POWERSIDE_BACKEND=numba to force one. Both are deterministic run to run;
they agree with each other up to float rounding, not bit-exactly.
"""

import os

__all__ = [
    "BACKEND",
    "conv2d_forward",
    "conv2d_backward",
    "maxpool2_forward",
    "maxpool2_backward",
    "resample_core",
    "get_backend",
]


def _load(name):
    if name == "numba":
        # avoid the TBB probe; omp is present wherever numba is
        os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")
        from . import _numba_impl as impl
    elif name == "numpy":
        from . import _numpy_impl as impl
    else:
        raise ValueError(
            f"POWERSIDE_BACKEND must be 'numba' or 'numpy', got {name!r}"
        )
    return impl


_requested = os.environ.get("POWERSIDE_BACKEND", "").strip().lower()
if _requested:
    _impl = _load(_requested)
    BACKEND = _requested
else:
    try:
        _impl = _load("numba")
        BACKEND = "numba"
    except ImportError:
        _impl = _load("numpy")
        BACKEND = "numpy"

conv2d_forward = _impl.conv2d_forward
conv2d_backward = _impl.conv2d_backward
maxpool2_forward = _impl.maxpool2_forward
maxpool2_backward = _impl.maxpool2_backward
resample_core = _impl.resample_core


def get_backend(name):
    """Return the kernel module for an explicit backend name (benchmarks)."""
    return _load(name)
