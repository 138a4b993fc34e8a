"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``RISKGRAPH_PURE_PYTHON=1`` to force the
fallback. Callers must look kernels up through this module at call time
(``kernels.max_flow(...)``) so :func:`set_backend` takes effect.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

BACKEND = ""
max_flow = farthest_first = greedy_block_count = None


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def set_backend(name: str) -> None:
    global BACKEND, max_flow, farthest_first, greedy_block_count
    try:
        mod = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}") from None
    BACKEND = name
    max_flow = mod.max_flow
    farthest_first = mod.farthest_first
    greedy_block_count = mod.greedy_block_count


set_backend("cython" if _ckernels is not None and not os.environ.get("RISKGRAPH_PURE_PYTHON") else "python")
