"""Kernel backend selection.

Imports the compiled reduction kernel when available, otherwise the pure
Python twin.  Set GERMLAB_KERNEL=py to force the fallback (or =c to demand
the compiled one).
"""

import os

_choice = os.environ.get("GERMLAB_KERNEL", "").lower()
_impl = None
if _choice not in ("py", "python", "pure"):
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice in ("c", "compiled"):
            raise ImportError("GERMLAB_KERNEL=c but germlab._speedups is not built")
        _impl = None
if _impl is None:
    from . import _purekernel as _impl

BACKEND = _impl.BACKEND
std_basis = _impl.std_basis
normal_form = _impl.normal_form
lead_exp = _impl.lead_exp
