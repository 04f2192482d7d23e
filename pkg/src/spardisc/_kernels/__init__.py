"""Hot-kernel selection: compiled extension when built, pure fallback otherwise.

Set SPARDISC_PURE=1 to force the fallback implementations (used by the
benchmark and by tests that cross-check both paths).
"""

from __future__ import annotations

import importlib
import os

from . import _fallback

_FORCE_PURE = os.environ.get("SPARDISC_PURE", "") not in ("", "0")

_speed = None
if not _FORCE_PURE:
    try:
        _speed = importlib.import_module("._speed", __name__)
    except ImportError:
        _speed = None

HAVE_COMPILED = _speed is not None

if HAVE_COMPILED:
    poly_mul_acc = _speed.poly_mul_acc
    ModRref = _speed.ModRref
else:
    poly_mul_acc = _fallback.poly_mul_acc
    ModRref = _fallback.ModRref

MAX_PRIME = _fallback.MAX_PRIME


def implementations() -> dict:
    """All available kernel implementations, for benchmarks and cross-tests."""
    impls = {"fallback": _fallback}
    if _speed is not None:
        impls["compiled"] = _speed
    return impls


def active() -> str:
    return "compiled" if HAVE_COMPILED else "fallback"
