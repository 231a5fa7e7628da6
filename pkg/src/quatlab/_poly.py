"""Backend selector for the polynomial kernel.

Imports the compiled Cython kernel when available, otherwise the pure-Python
fallback.  Set QUATLAB_PURE=1 to force the fallback (used by the benchmark
and by CI on platforms without a compiler).
"""

import os

if os.environ.get("QUATLAB_PURE"):
    from quatlab._poly_py import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from quatlab._poly_cy import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from quatlab._poly_py import *  # noqa: F401,F403
        BACKEND = "python"
