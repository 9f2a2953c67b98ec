"""Curve backend selection.

The compiled kernel (``_ecfast``) is preferred when it built; otherwise the
pure-Python module is used.  ``CLUAGG_BACKEND=pure|cython`` forces a choice,
which the cross-backend tests and the benchmark rely on.
"""

from __future__ import annotations

import os

from . import _ecpure


def load_backend(prefer: str | None = None):
    choice = prefer or os.environ.get("CLUAGG_BACKEND", "")
    if choice == "pure":
        return _ecpure
    try:
        from . import _ecfast
    except ImportError:
        if choice == "cython":
            raise ImportError(
                "compiled curve kernel requested but not built; "
                "run `pip install -e . --no-build-isolation`"
            ) from None
        return _ecpure
    return _ecfast


active = load_backend()


def backend_name() -> str:
    return active.NAME
