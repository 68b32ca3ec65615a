"""Kernel backend selection.

The verification campaigns spend their time in per-space table
construction; those kernels exist twice, as numba JIT loops and as pure
numpy.  ``PRETOPO_KERNELS=numba|numpy`` picks the backend at import
time; the default is numba when importable, else numpy.  Both backends
are bit-exact, so results never depend on the choice.
"""

import os

_requested = os.environ.get("PRETOPO_KERNELS", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise ImportError(
        f"PRETOPO_KERNELS={_requested!r} not understood; use 'numba' or 'numpy'"
    )

if _requested in ("", "numba"):
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_impl as _impl

        BACKEND = "numpy"
else:
    from . import numpy_impl as _impl

    BACKEND = "numpy"

reverse_rows = _impl.reverse_rows
transitive_closure = _impl.transitive_closure
or_table = _impl.or_table
conn_table = _impl.conn_table
is_weakly_connected = _impl.is_weakly_connected
tsub_table = _impl.tsub_table
pathchar_table = _impl.pathchar_table
r_commute_table = _impl.r_commute_table
defect_steps = _impl.defect_steps
product_rows = _impl.product_rows

__all__ = [
    "BACKEND",
    "conn_table",
    "defect_steps",
    "is_weakly_connected",
    "or_table",
    "pathchar_table",
    "product_rows",
    "r_commute_table",
    "reverse_rows",
    "transitive_closure",
    "tsub_table",
]
