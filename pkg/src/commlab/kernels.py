"""Kernel dispatch: compiled extension when built, pure Python otherwise.

Set ``COMMLAB_PURE=1`` to force the pure-Python backend even when the
compiled module is importable (used by the benchmark and by parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("COMMLAB_PURE") == "1":
    from commlab import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from commlab import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from commlab import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

reduce_letters = _impl.reduce_letters
multiply_reduced = _impl.multiply_reduced
invert_reduced = _impl.invert_reduced
artin_images = _impl.artin_images
compose = _impl.compose
invert_perm = _impl.invert_perm
extend_subgroup = _impl.extend_subgroup
closure_set = _impl.closure_set
