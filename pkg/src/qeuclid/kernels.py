"""Backend selection for the arithmetic kernels.

Tries the compiled Cython extension first and falls back to the pure
Python twin.  Set the environment variable ``QEUCLID_PURE=1`` to force
the fallback, or call :func:`set_backend` at runtime (used by the
benchmark to compare both).
"""

import os

from . import _pykernels

_FUNCS = ("vec_normalize", "vec_add", "vec_sub", "vec_mul")

_impl = _pykernels
if not os.environ.get("QEUCLID_PURE"):
    try:
        from . import _cykernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels


def available_backends():
    names = ["pure"]
    try:
        from . import _cykernels  # noqa: F401
        names.append("compiled")
    except ImportError:
        pass
    return names


def backend_name():
    return _impl.BACKEND


def set_backend(name):
    """Switch kernels at runtime ('pure' or 'compiled')."""
    global _impl
    if name == "pure":
        _impl = _pykernels
    elif name == "compiled":
        from . import _cykernels
        _impl = _cykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    for fn in _FUNCS:
        globals()[fn] = getattr(_impl, fn)
    return _impl.BACKEND


# bind the selected implementation
for _fn in _FUNCS:
    globals()[_fn] = getattr(_impl, _fn)
del _fn
