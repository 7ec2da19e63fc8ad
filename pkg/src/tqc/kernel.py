"""Backend selection for the integer kernels.

The compiled module is used when it was built; otherwise the pure-Python
twin is loaded.  Setting ``TQC_PURE=1`` forces the fallback.
"""

import os

if os.environ.get("TQC_PURE", "") not in ("", "0"):
    from tqc import _kernel_py as _impl
else:
    try:
        from tqc import _kernel as _impl
    except ImportError:
        from tqc import _kernel_py as _impl

BACKEND = _impl.BACKEND
reduce_pair = _impl.reduce_pair
det2 = _impl.det2
cyc_cmp = _impl.cyc_cmp
cyclic_between = _impl.cyclic_between
mobius = _impl.mobius
mediant = _impl.mediant

__all__ = ["BACKEND", "reduce_pair", "det2", "cyc_cmp", "cyclic_between", "mobius", "mediant"]
