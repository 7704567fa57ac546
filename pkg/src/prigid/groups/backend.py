"""Kernel backend selection.

The compiled extension is preferred when importable; PRIGID_KERNEL=pure or
PRIGID_KERNEL=compiled forces a choice.  Both backends expose theta_mul,
theta_inv, ut_mul, ut_inv, table_mul with identical semantics.
"""

from __future__ import annotations

import os

from ..errors import UsageError

_selected = None


def get():
    global _selected
    if _selected is None:
        _selected = _choose(os.environ.get("PRIGID_KERNEL", "auto"))
    return _selected


def _choose(want: str):
    if want not in ("auto", "pure", "compiled"):
        raise UsageError(f"PRIGID_KERNEL must be auto, pure, or compiled; got {want!r}")
    if want == "pure":
        from . import pykern

        return pykern
    try:
        from . import _ckern  # type: ignore[attr-defined]

        return _ckern
    except ImportError:
        if want == "compiled":
            raise UsageError("compiled kernel requested but the extension is not built")
        from . import pykern

        return pykern


def force(name: str):
    """Explicitly select a backend (used by the benchmark and tests)."""
    global _selected
    _selected = _choose(name)
    return _selected
