"""Hot-kernel backend selection.

The compiled :mod:`kreweras._speedups` module is used when it was built;
otherwise, or when ``KREWERAS_PURE_PYTHON`` is set to a non-empty value,
the pure-Python twin in :mod:`kreweras._purepy` is used.
"""

import os

from . import _purepy

KERNEL_NAMES = (
    "iota",
    "promote",
    "promote_power",
    "promote_by_taus",
    "promote_inverse",
    "evacuate",
    "dual_evacuate",
    "is_kreweras",
    "is_connected",
    "enumerate_words",
    "orbit_size",
)


def _load():
    if os.environ.get("KREWERAS_PURE_PYTHON"):
        return _purepy, "python"
    try:
        from . import _speedups
    except ImportError:
        return _purepy, "python"
    return _speedups, "cython"


backend, BACKEND = _load()

iota = backend.iota
promote = backend.promote
promote_power = backend.promote_power
promote_by_taus = backend.promote_by_taus
promote_inverse = backend.promote_inverse
evacuate = backend.evacuate
dual_evacuate = backend.dual_evacuate
is_kreweras = backend.is_kreweras
is_connected = backend.is_connected
enumerate_words = backend.enumerate_words
orbit_size = backend.orbit_size


def available_backends():
    """Map backend name to module for every backend importable here."""
    out = {"python": _purepy}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        out["cython"] = _speedups
    return out
