"""
Selects the product kernel at import time.

The compiled extension ``heckecount._kernel`` is used when it imports; set
``HECKECOUNT_PURE_PYTHON=1`` to force the pure-Python kernel. Both expose
``row_products(word, succ, rises, ndeg)`` with identical output.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _kernel_py

__all__ = ["ACTIVE", "available", "get_kernel", "row_products"]

try:
    from . import _kernel as _compiled  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _compiled = None

_KERNELS: dict[str, ModuleType] = {"python": _kernel_py}
if _compiled is not None:
    _KERNELS["compiled"] = _compiled

if os.environ.get("HECKECOUNT_PURE_PYTHON", "") not in ("", "0") or _compiled is None:
    ACTIVE = "python"
else:
    ACTIVE = "compiled"


def available() -> list[str]:
    return sorted(_KERNELS)


def get_kernel(name: str | None = None) -> ModuleType:
    """Return the kernel module named ``name`` ("compiled"/"python"), or the active one."""
    name = ACTIVE if name in (None, "auto") else name
    try:
        return _KERNELS[name]
    except KeyError:
        raise ValueError(f"kernel {name!r} is not available (have {available()})") from None


def row_products(word, succ, rises, ndeg):
    return _KERNELS[ACTIVE].row_products(word, succ, rises, ndeg)
