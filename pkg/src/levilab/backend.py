"""Backend selection for the batch kernels.

LEVILAB_BACKEND=numpy forces the pure-numpy path, LEVILAB_BACKEND=numba
forces the jitted path (raising if numba is unavailable); the default "auto"
uses numba when it imports.  LEVILAB_THREADS caps numba's thread count.
"""

from __future__ import annotations

import os

_cached = None


def backend_name() -> str:
    choice = os.environ.get("LEVILAB_BACKEND", "auto").lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"LEVILAB_BACKEND must be auto|numba|numpy, got {choice!r}")
    return choice


def _load():
    global _cached
    choice = backend_name()
    if _cached is not None and _cached[0] == choice:
        return _cached[1]
    if choice == "numpy":
        from . import _kernels_numpy as mod
    elif choice == "numba":
        from . import _kernels_numba as mod

        _apply_thread_cap()
    else:
        try:
            from . import _kernels_numba as mod

            _apply_thread_cap()
        except ImportError:
            from . import _kernels_numpy as mod
    _cached = (choice, mod)
    return mod


def _apply_thread_cap():
    cap = os.environ.get("LEVILAB_THREADS")
    if cap:
        import numba

        numba.set_num_threads(max(1, min(int(cap), numba.config.NUMBA_NUM_THREADS)))


def active_backend() -> str:
    mod = _load()
    return "numba" if "numba" in mod.__name__ else "numpy"


def eval_program(*args):
    return _load().eval_program(*args)
