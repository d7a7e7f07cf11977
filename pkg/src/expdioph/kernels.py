"""Backend selection for the hot loops.

The compiled ``_core`` extension is used when it was built; otherwise the
interpreted ``_fallback`` module takes over. Both expose ``eq1_solutions``
and ``system_sieve`` with identical results. Setting ``EXPDIOPH_BACKEND`` to
``python`` forces the fallback (results never depend on the choice).
"""
import os
from types import ModuleType
from typing import Dict, Optional

from . import _fallback

_BACKENDS: Dict[str, ModuleType] = {"python": _fallback}
try:
    from . import _core
except ImportError:  # extension not built
    _core = None
else:
    _BACKENDS["compiled"] = _core

U64_LIMIT = 1 << 63
SIEVE_A_LIMIT = 1 << 31


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name: Optional[str] = None) -> ModuleType:
    if name is None:
        return _BACKENDS[BACKEND]
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {available_backends()}") from None


def _default() -> str:
    forced = os.environ.get("EXPDIOPH_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise ImportError(f"EXPDIOPH_BACKEND={forced!r} is not available")
        return forced
    return "compiled" if "compiled" in _BACKENDS else "python"


BACKEND = _default()
