"""Comparison curves on the unit square.

Only the Hilbert curve ships: entry corner ``(0, 0)``, exit corner
``(1, 0)``, visiting the lower-left, upper-left, upper-right and
lower-right quarters in turn.  Its values at times ``k / 4**d`` are cell
corners, hence dyadic, so its SLR is compared with the Sierpinski-Knopp
curve exactly.
"""

from __future__ import annotations

import enum

import numpy as np

from .curve import Point, check_depth
from .exact import DomainError, Dyadic, DyadicLike
from .metrics import LocalityReport, pair_locality

__all__ = ["RivalCurveId", "hilbert_evaluate", "hilbert_lattice", "rival_locality"]


class RivalCurveId(enum.Enum):
    HILBERT = "hilbert"


def _hilbert_children(e, u, w):
    """Oriented quarter squares of the square ``e + [0,1]u + [0,1]w`` in traversal order.

    ``e`` is the entry corner, ``e + u`` the exit corner.
    """
    hu = (u[0] // 2, u[1] // 2)
    hw = (w[0] // 2, w[1] // 2)
    add = lambda p, *vs: (p[0] + sum(v[0] for v in vs), p[1] + sum(v[1] for v in vs))
    neg = lambda v: (-v[0], -v[1])
    return (
        (e, hw, hu),
        (add(e, hw), hu, hw),
        (add(e, hw, hu), hu, hw),
        (add(e, u, hw), neg(hw), neg(hu)),
    )


def hilbert_evaluate(t: DyadicLike) -> Point:
    """Exact Hilbert curve value at a dyadic time (a cell corner)."""
    t = Dyadic.coerce(t)
    if not 0 <= t <= 1:
        raise DomainError(f"time {t} outside [0, 1]")
    if t == 1:
        return Point.of(1, 0)
    d = (t.exp + 1) // 2  # base-4 depth
    check_depth(2 * d)
    k = t.num << (2 * d - t.exp)
    one = 1 << d
    e, u, w = (0, 0), (one, 0), (0, one)
    for level in range(d - 1, -1, -1):
        e, u, w = _hilbert_children(e, u, w)[(k >> (2 * level)) & 3]
    return Point(Dyadic(e[0], d), Dyadic(e[1], d))


def hilbert_lattice(depth: int) -> tuple[np.ndarray, np.ndarray, int]:
    """Hilbert values at ``k / 2**depth``, ``k = 0..2**depth``, scaled by ``2**h``."""
    check_depth(depth)
    d = (depth + 1) // 2
    one = 1 << d
    cells = [((0, 0), (one, 0), (0, one))]
    for _ in range(d):
        cells = [c for cell in cells for c in _hilbert_children(*cell)]
    entries = [c[0] for c in cells] + [(one, 0)]
    step = 1 << (2 * d - depth)
    pts = np.array(entries[::step], dtype=np.int64)
    return pts[:, 0].copy(), pts[:, 1].copy(), d


def rival_locality(curve: RivalCurveId | str, depth: int) -> LocalityReport:
    """Exhaustive exact SLR maximum of a rival curve over times ``k / 2**depth``."""
    curve = RivalCurveId(curve)
    if curve is RivalCurveId.HILBERT:
        xs, ys, h = hilbert_lattice(depth)
    else:  # pragma: no cover - extension point
        raise DomainError(f"unsupported curve {curve}")
    return pair_locality(xs, ys, h, depth)
