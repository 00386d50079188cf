"""Kernel selection: compiled extension when available, pure Python
otherwise.  Set SUPERVERGE_KERNEL=python (or =cython) to force a choice.
"""

from __future__ import annotations

import os

_choice = os.environ.get("SUPERVERGE_KERNEL", "auto")

if _choice == "python":
    from . import _kernel_py as _impl
elif _choice == "cython":
    from . import _kernel_c as _impl  # type: ignore[attr-defined]
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION
right_op = _impl.right_op
left_op = _impl.left_op
orbit_closure = _impl.orbit_closure
