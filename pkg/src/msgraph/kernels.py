"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python module is used.  Setting ``MSGRAPH_PURE_PYTHON=1`` forces the
fallback.
"""

import os

from . import _purekernels as python_backend

try:
    from . import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

if compiled_backend is not None and os.environ.get("MSGRAPH_PURE_PYTHON", "") in ("", "0"):
    _active = compiled_backend
else:
    _active = python_backend

BACKEND: str = _active.BACKEND
hamiltonian_tally = _active.hamiltonian_tally
triangle_sweep = _active.triangle_sweep
potential_violation = _active.potential_violation

__all__ = [
    "BACKEND",
    "compiled_backend",
    "hamiltonian_tally",
    "potential_violation",
    "python_backend",
    "triangle_sweep",
]
