"""Hot kernel for tropical move transforms.

Selects the compiled Cython backend when it is importable and falls
back to the pure-Python twin otherwise.  Set MVC_PURE_PYTHON=1 to force
the fallback (used by the backend-comparison benchmark).
"""

import os
from array import array

if os.environ.get("MVC_PURE_PYTHON"):
    from . import _moves_py as _backend
else:
    try:
        from . import _moves_c as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _moves_py as _backend

BACKEND = _backend.__name__.rsplit(".", 1)[-1].lstrip("_")
apply_moves_flat = _backend.apply_moves_flat


def encode_path(moves):
    """Flatten (kind, offset) pairs into the kernel's array format."""
    flat = array("l")
    for kind, offset in moves:
        flat.append(kind)
        flat.append(offset)
    return flat


def apply_moves(n, flat):
    """Apply an encoded move path to a tuple of entries, returning a tuple."""
    v = array("l", n)
    if len(flat):
        apply_moves_flat(v, flat)
    return tuple(v)
