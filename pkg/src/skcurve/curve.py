"""The Sierpinski-Knopp curve.

Canonical placement: the curve runs from ``(0, 0)`` to ``(2, 0)`` through
the right-angle vertex ``(1, 1)``, covering a triangle of area exactly 1.
A fraction of order ``n`` is the image of ``[k/2**n, (k+1)/2**n]``; it is
an isosceles right triangle, and halving its time interval splits it along
the altitude from the right angle.  Because that split only ever takes a
midpoint, every vertex of every fraction is a dyadic point.
"""

from __future__ import annotations

import functools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .exact import DomainError, Dyadic, DyadicLike

__all__ = [
    "DepthBudgetError",
    "OrientedFraction",
    "Point",
    "depth_budget",
    "evaluate",
    "evaluate_real",
    "fraction_at",
    "lattice_samples",
    "lattice_tiling",
    "orient",
    "preimages",
    "root_fraction",
    "samples",
    "subdivide",
    "tiling",
]

DEFAULT_DEPTH_BUDGET = 64


class DepthBudgetError(DomainError):
    """Requested depth exceeds the configured budget (``SK_DEPTH_BUDGET``)."""


def depth_budget() -> int:
    return int(os.environ.get("SK_DEPTH_BUDGET", DEFAULT_DEPTH_BUDGET))


def check_depth(n: int, what: str = "depth") -> int:
    if n < 0:
        raise DomainError(f"{what} must be nonnegative, got {n}")
    budget = depth_budget()
    if n > budget:
        raise DepthBudgetError(f"{what} {n} exceeds the depth budget {budget}")
    return n


@dataclass(frozen=True, slots=True)
class Point:
    x: Dyadic
    y: Dyadic

    @classmethod
    def of(cls, x: DyadicLike, y: DyadicLike) -> "Point":
        return cls(Dyadic.coerce(x), Dyadic.coerce(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def norm2(self) -> Dyadic:
        return self.x * self.x + self.y * self.y

    def dist2(self, other: "Point") -> Dyadic:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy

    def midpoint(self, other: "Point") -> "Point":
        return Point((self.x + other.x).half(), (self.y + other.y).half())

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self):
        return f"({self.x},{self.y})"

    def to_json(self) -> list[str]:
        return [str(self.x), str(self.y)]


def orient(a: Point, b: Point, c: Point) -> Dyadic:
    """Twice the signed area of ``abc`` (positive when counter-clockwise)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


@dataclass(frozen=True, slots=True)
class OrientedFraction:
    """Fraction ``k`` of order ``n`` with its entry, right-angle and exit vertices."""

    order: int
    index: int
    entry: Point
    right: Point
    exit: Point

    @property
    def time_start(self) -> Dyadic:
        return Dyadic(self.index, self.order)

    @property
    def time_end(self) -> Dyadic:
        return Dyadic(self.index + 1, self.order)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.entry, self.right, self.exit)

    def area(self) -> Dyadic:
        return abs(orient(self.entry, self.right, self.exit)).half()

    def contains(self, p: Point) -> bool:
        """Closed-triangle membership by exact orientation signs."""
        s1 = orient(self.entry, self.right, p).sign()
        s2 = orient(self.right, self.exit, p).sign()
        s3 = orient(self.exit, self.entry, p).sign()
        return not ((s1 < 0 or s2 < 0 or s3 < 0) and (s1 > 0 or s2 > 0 or s3 > 0))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "index": self.index,
            "entry": self.entry.to_json(),
            "right": self.right.to_json(),
            "exit": self.exit.to_json(),
            "time_start": str(self.time_start),
            "time_end": str(self.time_end),
        }


_ROOT = OrientedFraction(0, 0, Point.of(0, 0), Point.of(1, 1), Point.of(2, 0))


def root_fraction() -> OrientedFraction:
    return _ROOT


def subdivide(f: OrientedFraction) -> tuple[OrientedFraction, OrientedFraction]:
    """Split ``f`` at the foot of the altitude from its right-angle vertex."""
    foot = f.entry.midpoint(f.exit)
    n, k = f.order + 1, 2 * f.index
    return (
        OrientedFraction(n, k, f.entry, foot, f.right),
        OrientedFraction(n, k + 1, f.right, foot, f.exit),
    )


def fraction_at(n: int, k: int) -> OrientedFraction:
    """Descend ``n`` subdivisions along the bits of ``k``, most significant first."""
    check_depth(n, "order")
    if not 0 <= k < (1 << n):
        raise DomainError(f"index {k} out of range for order {n}")
    f = _ROOT
    for bit in range(n - 1, -1, -1):
        f = subdivide(f)[(k >> bit) & 1]
    return f


def _check_time(t: Dyadic | Fraction | float) -> None:
    if not 0 <= t <= 1:
        raise DomainError(f"time {t} outside [0, 1]")


def evaluate(t: DyadicLike) -> Point:
    """Exact value ``s(t)`` at a dyadic time."""
    t = Dyadic.coerce(t)
    _check_time(t)
    if t == 1:
        return _ROOT.exit
    if t.exp <= _CACHED_DEPTH:
        xs, ys, h = _cached_samples(t.exp)
        return Point(Dyadic(int(xs[t.num]), h), Dyadic(int(ys[t.num]), h))
    return fraction_at(t.exp, t.num).entry


def evaluate_real(t: float | Fraction, depth: int) -> tuple[Point, Dyadic]:
    """Approximate ``s(t)`` for any real ``t`` by the entry of its depth-``depth`` fraction.

    Returns the point and a bound on the *squared* distance to the true
    value: the squared hypotenuse ``4 * 2**-depth`` of that fraction.
    """
    check_depth(depth)
    if isinstance(t, float) and not math.isfinite(t):
        raise DomainError("time must be finite")
    q = Fraction(t)
    _check_time(q)
    bound = Dyadic(4, depth)
    if q == 1:
        return _ROOT.exit, bound
    k = math.floor(q * (1 << depth))
    return fraction_at(depth, k).entry, bound


def preimages(p: Point, depth: int) -> list[int]:
    """Indices ``k`` of the order-``depth`` fractions whose closed triangle contains ``p``."""
    check_depth(depth)
    if not _ROOT.contains(p):
        return []
    level = [_ROOT]
    for _ in range(depth):
        level = [c for f in level for c in subdivide(f) if c.contains(p)]
    return sorted(f.index for f in level)


def iter_tiling(n: int) -> Iterator[OrientedFraction]:
    check_depth(n, "order")
    level = [_ROOT]
    for _ in range(n):
        level = [c for f in level for c in subdivide(f)]
    yield from level


def tiling(n: int) -> list[OrientedFraction]:
    """All ``2**n`` fractions of order ``n`` in time order."""
    return list(iter_tiling(n))


# Integer lattice views ------------------------------------------------------
#
# Vertices of order-n fractions have denominators dividing 2**(n//2), so
# scaling by that power gives integer coordinates.  The kernels work on
# these arrays.

def lattice_shift(n: int) -> int:
    return n // 2


_CACHED_DEPTH = 14


@functools.lru_cache(maxsize=None)
def _cached_tiling(n: int):
    arrays = _build_lattice_tiling(n)
    for a in arrays[:3]:
        a.flags.writeable = False
    return arrays


@functools.lru_cache(maxsize=None)
def _cached_samples(n: int):
    e, _, x, h = _cached_tiling(n)
    pts = np.vstack([e, x[-1:]])
    xs, ys = pts[:, 0].copy(), pts[:, 1].copy()
    xs.flags.writeable = ys.flags.writeable = False
    return xs, ys, h


def lattice_tiling(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Entry, right and exit vertices of ``tiling(n)`` as ``(2**n, 2)`` int arrays.

    Coordinates are scaled by ``2**h`` where ``h`` is the returned shift.
    Results up to order 14 are cached and read-only.
    """
    check_depth(n, "order")
    if n <= _CACHED_DEPTH:
        return _cached_tiling(n)
    return _build_lattice_tiling(n)


def _build_lattice_tiling(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    if n > 40:
        raise DepthBudgetError(f"lattice tiling of order {n} is too large")
    h = lattice_shift(n)
    one = 1 << h
    e = np.array([[0, 0]], dtype=np.int64)
    r = np.array([[one, one]], dtype=np.int64)
    x = np.array([[2 * one, 0]], dtype=np.int64)
    for _ in range(n):
        s = e + x
        assert not (s & 1).any()
        foot = s // 2
        m = len(e)
        ne = np.empty((2 * m, 2), dtype=np.int64)
        nr = np.empty((2 * m, 2), dtype=np.int64)
        nx = np.empty((2 * m, 2), dtype=np.int64)
        ne[0::2], ne[1::2] = e, r
        nr[0::2], nr[1::2] = foot, foot
        nx[0::2], nx[1::2] = r, x
        e, r, x = ne, nr, nx
    return e, r, x, h


def lattice_samples(n: int) -> tuple[np.ndarray, np.ndarray, int]:
    """``s(k/2**n)`` for ``k = 0..2**n`` as integer arrays scaled by ``2**h``."""
    check_depth(n)
    if n <= _CACHED_DEPTH:
        return _cached_samples(n)
    e, _, x, h = _build_lattice_tiling(n)
    pts = np.vstack([e, x[-1:]])
    return pts[:, 0].copy(), pts[:, 1].copy(), h


def samples(n: int) -> list[Point]:
    """``s(k/2**n)`` for ``k = 0..2**n`` as exact points."""
    xs, ys, h = lattice_samples(n)
    return [Point(Dyadic(int(a), h), Dyadic(int(b), h)) for a, b in zip(xs, ys)]

