"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled module handles up to 64 diagonals (one machine word per subset);
anything larger, or any call made with NCOTOR_PURE=1 in the environment, is
routed to the pure-Python twins in ncotor._pykernels.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _speedups as _compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

HAVE_COMPILED = _compiled is not None


def _pure_forced() -> bool:
    return os.environ.get("NCOTOR_PURE", "") not in ("", "0")


def _backend(d: int):
    if _compiled is not None and d <= 64 and not _pure_forced():
        return _compiled
    return _pykernels


def backend_name(d: int = 0) -> str:
    return "compiled" if _backend(d) is _compiled and _compiled is not None else "pure"


def nc_bits(masks, full: int, bits: int) -> int:
    return _backend(len(masks)).nc_bits(masks, full, bits)


def closure_bits(masks, full: int, bits: int) -> int:
    return _backend(len(masks)).closure_bits(masks, full, bits)


def next_closed(masks, full: int, prev: int) -> int:
    return _backend(len(masks)).next_closed(masks, full, prev)


def brute_fixed_points(avec, bvec) -> list[int]:
    # the compiled scan is capped at 2^30 subsets; route anything bigger
    # (only reachable by raising the budget) to the pure twin
    if len(avec) > 30:
        return _pykernels.brute_fixed_points(avec, bvec)
    return _backend(len(avec)).brute_fixed_points(avec, bvec)
