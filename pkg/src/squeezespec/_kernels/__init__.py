"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The backend is fixed at import time from the ``SQUEEZESPEC_BACKEND``
environment variable (``numba`` or ``numpy``; default ``numba`` when it
can be imported). Both implementations stay reachable via
:func:`get_backend` so they can be compared against each other.
"""
import os
import warnings
from types import SimpleNamespace

from . import vectorized

KERNELS = (
    "loggamma",
    "pollaczek_table",
    "hermite_functions",
    "laguerre_table",
    "hyp1f1_series",
    "bessel_i_series",
)

_numpy = SimpleNamespace(name="numpy", **{k: getattr(vectorized, k) for k in KERNELS})


def _build_numba():
    try:
        import numba
    except ImportError:
        return None
    from . import loops

    jitted = {k: numba.njit(cache=True)(getattr(loops, k)) for k in KERNELS}
    return SimpleNamespace(name="numba", **jitted)


_numba = _build_numba()


def available_backends():
    return ("numba", "numpy") if _numba is not None else ("numpy",)


def get_backend(name):
    if name == "numpy":
        return _numpy
    if name == "numba":
        if _numba is None:
            raise ImportError("numba is not installed")
        return _numba
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    requested = os.environ.get("SQUEEZESPEC_BACKEND", "").strip().lower()
    if requested == "numpy":
        return _numpy
    if requested not in ("", "numba"):
        raise ValueError(f"SQUEEZESPEC_BACKEND must be 'numba' or 'numpy', got {requested!r}")
    if _numba is None:
        if requested == "numba":
            warnings.warn("numba requested but not importable; using numpy kernels")
        return _numpy
    return _numba


active = _select()
BACKEND = active.name

loggamma = active.loggamma
pollaczek_table = active.pollaczek_table
hermite_functions = active.hermite_functions
laguerre_table = active.laguerre_table
hyp1f1_series = active.hyp1f1_series
bessel_i_series = active.bessel_i_series


def activate(name):
    """Rebind the module-level kernels to backend ``name`` and return the previous name.

    Callers look kernels up as ``_kernels.<name>`` at call time, so this
    switches every public routine at once (used by tests and benchmarks).
    """
    global active, BACKEND
    previous = BACKEND
    active = get_backend(name)
    BACKEND = active.name
    g = globals()
    for k in KERNELS:
        g[k] = getattr(active, k)
    return previous
