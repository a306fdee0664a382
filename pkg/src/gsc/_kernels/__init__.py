"""Kernel backend selection.

The compiled Cython core is used when importable; setting GSC_PURE_PYTHON=1
forces the pure-Python fallback.  Both expose the same flat-int contract
(see `pykern` for the reference semantics).
"""

import os

from . import pykern

if os.environ.get("GSC_PURE_PYTHON", "") not in ("", "0"):
    _impl = pykern
else:
    try:
        from . import _ckern as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pykern

BACKEND = _impl.BACKEND

prepare_ints = _impl.prepare_ints
free_reduce = _impl.free_reduce
lift_end = _impl.lift_end
lift_runs = _impl.lift_runs
bfs_parents = _impl.bfs_parents
bfs_dists = _impl.bfs_dists
product_reach = _impl.product_reach
perm_eval = _impl.perm_eval
words_first_non_identity = _impl.words_first_non_identity
words_first_identity = _impl.words_first_identity
