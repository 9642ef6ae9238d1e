"""Backend selection for the word kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` module is used.  Setting the environment
variable ``METABELIAN_GS_PURE=1`` forces the pure-Python path.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("METABELIAN_GS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels

merge = _impl.merge
mul_word_tail = _impl.mul_word_tail
tail_diff = _impl.tail_diff
tail_lcm = _impl.tail_lcm
strict_remove = _impl.strict_remove
is_subword_tail = _impl.is_subword_tail

__all__ = [
    "BACKEND",
    "merge",
    "mul_word_tail",
    "tail_diff",
    "tail_lcm",
    "strict_remove",
    "is_subword_tail",
]
