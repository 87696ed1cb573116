"""Hot pair-scan kernels with backend selection at import.

The compiled extension ``skcurve._kernels`` is used when it was built;
otherwise the numpy fallback in ``skcurve._kernels_py`` is used.  Setting
``SKCURVE_PURE_PYTHON=1`` forces the fallback.  Inputs whose products
would not fit in int64 are routed to the arbitrary-precision loops, so
results are exact for every input.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from . import _kernels_py

if os.environ.get("SKCURVE_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _kernels_py

_INT64_SAFE = 1 << 62


def _spread(v: Sequence[int]) -> int:
    return (max(v) - min(v)) if len(v) else 0


def _as_int64(v) -> np.ndarray:
    return np.ascontiguousarray(v, dtype=np.int64)


def _fits(xs, ys, ts, a=1, b=1, c=0) -> bool:
    span = _spread(xs) ** 2 + _spread(ys) ** 2
    dt = _spread(ts)
    worst = max(abs(a) * span * max(dt, 1), abs(b) * dt + abs(c), span * max(dt, 1))
    return worst < _INT64_SAFE


def max_pair_ratio(xs, ys, ts, backend=None) -> tuple[int, int, int, int]:
    """Maximize ``|p_j - p_i|**2 / (t_j - t_i)`` over ``i < j``.

    Returns ``(num, den, i, j)`` for the lexicographically smallest
    maximizing pair; ``ts`` must be strictly increasing.
    """
    xs, ys, ts = list(map(int, xs)), list(map(int, ys)), list(map(int, ts))
    if len(xs) < 2:
        raise ValueError("need at least two samples")
    impl = _impl if backend is None else _backend(backend)
    if impl is None or not _fits(xs, ys, ts):
        return _kernels_py.max_pair_ratio_bigint(xs, ys, ts)
    n, d, i, j = impl.max_pair_ratio(_as_int64(xs), _as_int64(ys), _as_int64(ts))
    return int(n), int(d), int(i), int(j)


def first_excess(xs, ys, ts, a: int, b: int, c: int, backend=None) -> tuple[int, int] | None:
    """First ``(i, j)`` with ``a*|p_j - p_i|**2 > b*(t_j - t_i) + c``, or None."""
    xs, ys, ts = list(map(int, xs)), list(map(int, ys)), list(map(int, ts))
    impl = _impl if backend is None else _backend(backend)
    if impl is None or not _fits(xs, ys, ts, a, b, c):
        i, j = _kernels_py.first_excess_bigint(xs, ys, ts, a, b, c)
    else:
        i, j = impl.first_excess(_as_int64(xs), _as_int64(ys), _as_int64(ts), a, b, c)
    return None if i < 0 else (int(i), int(j))


def _backend(name: str):
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    if name == "python":
        return _kernels_py
    if name == "bigint":
        return None
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    return (["compiled"] if _compiled is not None else []) + ["python", "bigint"]
