"""numba switch.

Set ``SEMIPHOTON_DISABLE_NUMBA=1`` to force the pure-numpy kernels. The flag
is read once at import; ``kernels.use_numba`` can override it per call.
"""

import os

_FALSY = {"", "0", "false", "no", "off"}

DISABLED_BY_ENV = os.environ.get("SEMIPHOTON_DISABLE_NUMBA", "").strip().lower() not in _FALSY

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

NUMBA_ENABLED = HAVE_NUMBA and not DISABLED_BY_ENV


def njit(fn):
    """``numba.njit(cache=True)`` when numba is usable, identity otherwise."""
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True)(fn)
