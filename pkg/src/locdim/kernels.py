"""Kernel backend selection.

Imports the compiled extension when it is built, the pure-Python
implementations otherwise. Set LOCDIM_NO_SPEEDUPS=1 to force the pure
backend (useful for benchmarking and for debugging kernel disagreements).
"""

from __future__ import annotations

import os

if os.environ.get("LOCDIM_NO_SPEEDUPS"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

max_clique = _impl.max_clique
min_hitting_set = _impl.min_hitting_set
canonical_bits = _impl.canonical_bits
induced_embedding = _impl.induced_embedding

__all__ = [
    "BACKEND",
    "max_clique",
    "min_hitting_set",
    "canonical_bits",
    "induced_embedding",
]
