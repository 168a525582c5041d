"""Term-level kernels, compiled when available.

The Cython build of ``_kernels`` is imported if present; otherwise the
pure-Python ``_kernels_py`` is used.  Set ``KHOVBASIS_PURE_PYTHON=1`` to
force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("KHOVBASIS_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import (  # noqa: F401
        axpy_inplace, coprime, divides, leading_exp, mono_lcm, mono_quo,
        mul_terms, order_key, reduce_full,
    )
else:
    try:
        from ._kernels import (  # noqa: F401
            axpy_inplace, coprime, divides, leading_exp, mono_lcm, mono_quo,
            mul_terms, order_key, reduce_full,
        )
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import (  # noqa: F401
            axpy_inplace, coprime, divides, leading_exp, mono_lcm, mono_quo,
            mul_terms, order_key, reduce_full,
        )
