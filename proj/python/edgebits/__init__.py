"""Edge bits of decohered cluster states: MPS pipeline and diagnostics.

Thin wrapper around the compiled `_edgebits` extension.  When the package is
not installed (e.g. running tests straight from a CMake build tree), the
extension is picked up from the directory named by EDGEBITS_EXT_DIR.
"""

import os
import sys

try:
    from ._edgebits import *  # noqa: F401,F403
    from ._edgebits import __doc__ as _ext_doc  # noqa: F401
except ImportError:
    _ext_dir = os.environ.get("EDGEBITS_EXT_DIR")
    if _ext_dir and _ext_dir not in sys.path:
        sys.path.insert(0, _ext_dir)
    from _edgebits import *  # noqa: F401,F403

__version__ = "0.1.0"
