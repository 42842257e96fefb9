"""Backend selection for the hot kernels.

The compiled extension ``hyperdet._speedups`` is preferred when it imports;
otherwise the pure-Python twin ``hyperdet._pykernels`` is used.  Set the
environment variable ``HYPERDET_BACKEND=python`` (or ``cython``) before
import to force a backend.
"""

import os

_requested = os.environ.get("HYPERDET_BACKEND", "").strip().lower()

if _requested in ("py", "python", "pure"):
    from . import _pykernels as _impl

    BACKEND = "python"
elif _requested in ("c", "cy", "cython", "compiled"):
    from . import _speedups as _impl  # type: ignore[attr-defined]

    BACKEND = "cython"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

GREVLEX = _impl.GREVLEX
LEX = _impl.LEX

mono_total = _impl.mono_total
mono_greater = _impl.mono_greater
mono_divides = _impl.mono_divides
mono_sub = _impl.mono_sub
mono_add = _impl.mono_add
mono_lcm = _impl.mono_lcm
leading_monomial = _impl.leading_monomial
make_primitive = _impl.make_primitive
combine = _impl.combine
reduce_full = _impl.reduce_full
eval_terms = _impl.eval_terms
ff_echelon = _impl.ff_echelon
modp_rank = _impl.modp_rank
