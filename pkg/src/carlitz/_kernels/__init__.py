"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the plain Python
versions are used.  Set ``CARLITZ_PURE=1`` to force the fallback, or call
:func:`use_backend` at runtime (tests and the benchmark do this).
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _pure

try:
    from . import _native
except ImportError:  # extension not built
    _native = None

_impl = _pure if (_native is None or os.environ.get("CARLITZ_PURE")) else _native


def backend() -> str:
    return "native" if _impl is _native else "pure"


def native_available() -> bool:
    return _native is not None


def set_backend(name: str) -> None:
    global _impl
    if name == "native":
        if _native is None:
            raise RuntimeError("compiled kernels are not built")
        _impl = _native
    elif name == "pure":
        _impl = _pure
    else:
        raise ValueError(f"unknown backend {name!r}")


@contextmanager
def use_backend(name: str):
    prev = backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


def rref_modp(rows, ncols, p):
    return _impl.rref_modp(rows, ncols, p)


def rref_table(rows, ncols, add, mul, neg, inv):
    return _impl.rref_table(rows, ncols, add, mul, neg, inv)


def conv_modp(a, b, p):
    return _impl.conv_modp(a, b, p)
