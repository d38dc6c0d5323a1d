"""Backend selection for the hot kernels.

The compiled module is used when it was built; set ``BRINTHOMPSON_PURE=1``
to force the pure-Python fallback.
"""

import os

if os.environ.get("BRINTHOMPSON_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:  # extension not built
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
intersect_blocks = _impl.intersect_blocks
compose_triples = _impl.compose_triples
equal_triples = _impl.equal_triples
reduce_triples = _impl.reduce_triples
is_hierarchical = _impl.is_hierarchical
