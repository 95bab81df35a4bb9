"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``COLORPATHS_PURE`` is set to a non-empty value other
than ``0``, the pure-Python versions are used.  ``BACKEND`` names the choice.
"""

import os

from . import _purepy

BACKEND = "python"
_compiled = None

if os.environ.get("COLORPATHS_PURE", "") in ("", "0"):
    try:
        from . import _speedups as _compiled
        BACKEND = "cython"
    except ImportError:
        _compiled = None

color_dp = _compiled.color_dp if _compiled else _purepy.color_dp
f_search = _compiled.f_search if _compiled else _purepy.f_search


def max_chain(succ, families, prefix, cand, best_size, max_nodes, deadline):
    """Dispatch to the compiled chain search when the masks fit in 64 bits."""
    if _compiled is not None and len(succ) <= 64:
        return _compiled.max_chain(succ, families, prefix, cand, best_size, max_nodes, deadline)
    return _purepy.max_chain(succ, families, prefix, cand, best_size, max_nodes, deadline)


def backends():
    """Mapping of available backend name -> module, for tests and benchmarks."""
    out = {"python": _purepy}
    if _compiled is not None:
        out["cython"] = _compiled
    else:
        try:
            from . import _speedups
            out["cython"] = _speedups
        except ImportError:
            pass
    return out
