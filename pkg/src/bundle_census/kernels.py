"""Kernel backend selection.

Prefers the compiled extension when it is importable, otherwise falls back
to the pure-Python reference kernels.  BUNDLE_CENSUS_BACKEND=c or =python
forces a backend (``c`` raises if the extension was never built).  Both
backends compute identical exact values; the choice only affects speed.
"""

from __future__ import annotations

import os

_requested = os.environ.get("BUNDLE_CENSUS_BACKEND", "")
if _requested not in ("", "c", "python"):
    raise ValueError(
        f"BUNDLE_CENSUS_BACKEND must be 'c' or 'python', got {_requested!r}"
    )

if _requested == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        if _requested == "c":
            raise
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

stirling_first = _impl.stirling_first
stirling_row = _impl.stirling_row
power_sums = _impl.power_sums
binomial_sum_num_den = _impl.binomial_sum_num_den
schwarz_terms = _impl.schwarz_terms


def backend_name() -> str:
    """Name of the kernel backend selected at import: 'c' or 'python'."""
    return BACKEND
