"""Kernel backend selection: compiled Cython core with a NumPy fallback.

The compiled extension is used when importable; set POSLAB_KERNEL=fallback
or POSLAB_KERNEL=compiled to force a backend (forcing the compiled one
raises if the extension was never built).
"""

import os

_forced = os.environ.get("POSLAB_KERNEL", "").strip().lower()

if _forced == "fallback":
    from . import _fallback as _impl
elif _forced == "compiled":
    from . import _core as _impl
else:
    try:
        from . import _core as _impl
    except ImportError:
        from . import _fallback as _impl

BACKEND = _impl.BACKEND
eval_poly_batch = _impl.eval_poly_batch
sign_scan = _impl.sign_scan
exchange_scan = _impl.exchange_scan
