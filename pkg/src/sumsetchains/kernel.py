"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SUMSETCHAINS_KERNEL=py to force the fallback (useful for benchmarking and
for testing the pure path); SUMSETCHAINS_KERNEL=c fails loudly if the
extension is missing.
"""

from __future__ import annotations

import os
import warnings

from . import _kernel_py as _py

_choice = os.environ.get("SUMSETCHAINS_KERNEL", "").strip().lower()
if _choice not in ("", "c", "py"):
    raise RuntimeError(f"SUMSETCHAINS_KERNEL must be 'c' or 'py', got {_choice!r}")

_c = None
if _choice != "py":
    try:
        from . import _kernel as _c  # type: ignore[attr-defined]
    except ImportError:
        _c = None
        if _choice == "c":
            raise
        warnings.warn(
            "compiled kernel unavailable, using the pure-Python fallback "
            "(searches will be slower)",
            RuntimeWarning,
            stacklevel=2,
        )

BACKEND = "cython" if _c is not None else "python"

# The compiled paths assume int64 arithmetic; route anything wider to the
# pure implementation (Bareiss minors stay under 2**63 for k <= 12, and the
# slice sweeps use fixed 16-word bitsets, max element 511).
_RANK_K_CAP = 12
_SLICE_M_CAP = 511
_DOUBLING_SPAN_CAP = 1 << 20


def doubling_size(elements):
    if _c is not None and elements[-1] - elements[0] <= _DOUBLING_SPAN_CAP:
        return _c.doubling_size(elements)
    return _py.doubling_size(elements)


def lambda_rank(elements):
    if _c is not None and len(elements) <= _RANK_K_CAP:
        return _c.lambda_rank(elements)
    return _py.lambda_rank(elements)


def is_one_dimensional(elements):
    if _c is not None and 2 < len(elements) <= _RANK_K_CAP:
        return _c.is_one_dimensional(elements)
    return _py.is_one_dimensional(elements)


def sweep_slice(k, m, t_max):
    if _c is not None and k <= _RANK_K_CAP and m <= _SLICE_M_CAP:
        return _c.sweep_slice(k, m, t_max)
    return _py.sweep_slice(k, m, t_max)


def collect_slice(k, m, ts):
    if _c is not None and k <= _RANK_K_CAP and m <= _SLICE_M_CAP:
        return _c.collect_slice(k, m, ts)
    return _py.collect_slice(k, m, ts)
