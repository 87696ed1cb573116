"""Grid-search oracle for the extremal triangle.

Among triangles with sides ``a <= b <= c``, ``c**2 <= 4`` and
``a**2 + b**2 <= 4``, the largest area is 1, reached only by the right
isosceles triangle ``(sqrt 2, sqrt 2, 2)``.  This module corroborates that
numerically; it is the one place in the package that uses floating point.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass

import numpy as np

from .exact import DomainError

__all__ = ["TriangleSides", "heron_area", "treug_search"]


@dataclass(frozen=True, order=True)
class TriangleSides:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise DomainError("side lengths must be nonnegative")
        if not self.a <= self.b <= self.c:
            raise DomainError("sides must satisfy a <= b <= c")


def heron_area(t: TriangleSides, *, slack: float = 1e-12) -> float:
    """Area from the side lengths (Kahan's numerically stable Heron formula)."""
    a, b, c = t.c, t.b, t.a  # Kahan wants a >= b >= c
    if c - (a - b) < -slack * a:
        raise DomainError(f"triangle inequality violated by {astuple(t)}")
    p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return 0.25 * math.sqrt(max(p, 0.0))


def _heron_vec(a, b, c):
    # same formula, arrays sorted as a <= b <= c
    p = (c + (b + a)) * (a - (c - b)) * (a + (c - b)) * (c + (b - a))
    return 0.25 * np.sqrt(np.maximum(p, 0.0))


def treug_search(resolution: int) -> dict:
    """Maximize the area over a grid with step ``2 / resolution`` on ``a, b`` in ``[0, 2]``.

    For each grid pair the candidate third sides are ``min(2, a + b)``,
    ``2`` and every grid value in ``[b, 2]``.  Area is unimodal in ``c``
    (largest at ``c**2 = a**2 + b**2``), so only the two grid values
    bracketing that point need to be evaluated among the grid candidates.
    Ties are broken by the lexicographically smallest sides.
    """
    if resolution < 2:
        raise DomainError("resolution must be at least 2")
    h = 2.0 / resolution
    idx = np.arange(resolution + 1)
    # i * 2.0 / resolution is correctly rounded, so nested grids share values
    grid = idx * 2.0 / resolution
    ia, ib = np.meshgrid(idx, idx, indexing="ij")
    keep = ia <= ib
    ia, ib = ia[keep], ib[keep]
    a, b = grid[ia], grid[ib]
    ok = a * a + b * b <= 4.0
    ia, ib, a, b = ia[ok], ib[ok], a[ok], b[ok]

    hyp = np.sqrt(a * a + b * b)
    lo_i = np.clip(np.floor(hyp / h).astype(np.int64), ib, resolution)
    hi_i = np.minimum(lo_i + 1, resolution)
    cands = [grid[lo_i], grid[hi_i], np.minimum(2.0, a + b), np.full_like(a, 2.0)]

    best_area = np.full(a.shape, -1.0)
    best_c = np.zeros_like(a)
    for c in cands:
        valid = (c >= b) & (c <= 2.0) & (c <= a + b)
        area = np.where(valid, _heron_vec(a, b, c), -1.0)
        better = (area > best_area) | ((area == best_area) & (c < best_c))
        best_area = np.where(better, area, best_area)
        best_c = np.where(better, c, best_c)

    top = best_area.max()
    if top < 0:
        raise DomainError("no feasible triangle on this grid")
    hits = np.flatnonzero(best_area == top)
    order = np.lexsort((best_c[hits], b[hits], a[hits]))
    k = hits[order[0]]
    return {
        "max_area": float(top),
        "argmax": TriangleSides(float(a[k]), float(b[k]), float(best_c[k])),
        "resolution": resolution,
    }
