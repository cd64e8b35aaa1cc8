"""Kernel selection: compiled extension when present, pure Python otherwise.

Set ``SOCLEKIT_PURE=1`` in the environment to force the pure backend (used
by the benchmark and by tests that compare the two).
"""

import os

if os.environ.get("SOCLEKIT_PURE"):
    from .elim_py import fraction_free_rank, fraction_free_ref

    BACKEND = "python"
else:
    try:
        from ._elim import (  # type: ignore[no-redef]
            fraction_free_rank,
            fraction_free_ref,
        )

        BACKEND = "cython"
    except ImportError:
        from .elim_py import (  # type: ignore[no-redef]
            fraction_free_rank,
            fraction_free_ref,
        )

        BACKEND = "python"

__all__ = ["fraction_free_ref", "fraction_free_rank", "BACKEND"]
