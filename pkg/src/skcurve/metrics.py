"""Square-to-linear ratio and locality of the Sierpinski-Knopp curve.

The square-to-linear ratio (SLR) of two curve points is
``|s(t2) - s(t1)|**2 / |t2 - t1|`` and the locality is its supremum.
Two routes to the locality live here:

* :func:`locality_dyadic` is an exhaustive exact maximum over all pairs of
  sample times ``k / 2**depth`` (a lower bound, attained at 4);
* :func:`locality_certified` is a branch-and-bound *upper* bound over all
  real pairs, built from triangle containment of fractions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import kernels
from .curve import (
    OrientedFraction,
    Point,
    check_depth,
    evaluate,
    lattice_samples,
    lattice_tiling,
    root_fraction,
    subdivide,
)
from .exact import Cmp, DomainError, Dyadic, DyadicLike, ExactRatio

__all__ = [
    "AngleClass",
    "AngleReport",
    "LocalityReport",
    "SlrWitness",
    "angle_triple",
    "disk_containment",
    "fraction_metrics",
    "locality_certified",
    "locality_dyadic",
    "pair_locality",
    "points_in_disk",
    "slr",
]

FOUR = ExactRatio(4)


@dataclass(frozen=True)
class SlrWitness:
    t1: Dyadic
    t2: Dyadic
    value: ExactRatio

    def to_json(self) -> dict:
        return {"t1": str(self.t1), "t2": str(self.t2), "value": self.value.to_json()}


@dataclass
class LocalityReport:
    attained_max: ExactRatio
    witness: SlrWitness
    certified_upper: Optional[ExactRatio]
    depth: int
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "attained_max": self.attained_max.to_json(),
            "witness": self.witness.to_json(),
            "certified_upper": None if self.certified_upper is None else self.certified_upper.to_json(),
            **({"stats": self.stats} if self.stats else {}),
        }


def _ratio(d2: Dyadic, dt: Dyadic) -> ExactRatio:
    return ExactRatio(d2, dt)


def slr(t1: DyadicLike, t2: DyadicLike, curve: Callable[[Dyadic], Point] = evaluate) -> ExactRatio:
    """Exact SLR of ``s(t1), s(t2)``; symmetric in its arguments."""
    t1, t2 = Dyadic.coerce(t1), Dyadic.coerce(t2)
    if t1 == t2:
        raise DomainError("SLR needs two distinct times")
    return _ratio(curve(t1).dist2(curve(t2)), abs(t2 - t1))


def pair_locality(xs, ys, shift: int, depth: int) -> LocalityReport:
    """Exhaustive exact SLR maximum over samples ``p_k = (xs[k], ys[k]) / 2**shift`` at ``t = k / 2**depth``."""
    ts = range(len(xs))
    num, den, i, j = kernels.max_pair_ratio(xs, ys, ts)
    # |dp|^2 = num / 4**shift, dt = den / 2**depth
    value = ExactRatio(Dyadic(num, 2 * shift), Dyadic(den, depth))
    witness = SlrWitness(Dyadic(i, depth), Dyadic(j, depth), value)
    return LocalityReport(value, witness, None, depth)


def locality_dyadic(depth: int) -> LocalityReport:
    """Maximum SLR over all pairs of times ``k / 2**depth``.

    The witness is the lexicographically smallest maximizing ``(t1, t2)``.
    """
    check_depth(depth)
    if depth == 0:
        w = SlrWitness(Dyadic(0), Dyadic(1), slr(0, 1))
        return LocalityReport(w.value, w, None, 0)
    xs, ys, h = lattice_samples(depth)
    return pair_locality(xs, ys, h, depth)


# Certified upper bound ------------------------------------------------------
#
# Any pair t1 < t2 lies in a smallest common fraction, in different halves
# of it; mapping that fraction onto the root preserves the SLR.  So the
# supremum over all pairs equals the supremum over pairs straddling 1/2.
# The straddling region is covered by pairs of same-order fractions; every
# pair except the one touching 1/2 on both sides has a positive time gap
# and a finite bound.  The touching ("corner") pairs form a chain whose
# shapes repeat up to similarity, so after the first repeat all further
# pairs are similar copies of ones already queued.

def _frame_key(a: OrientedFraction, b: OrientedFraction) -> tuple:
    """Similarity-invariant shape of the adjacent pair ``(a, b)``."""
    o = a.entry
    ux, uy = a.exit.x - o.x, a.exit.y - o.y
    n2 = ux * ux + uy * uy  # a power of two, so coordinates stay dyadic
    assert n2.num & (n2.num - 1) == 0
    inv = Dyadic(1, n2.num.bit_length() - 1 - n2.exp)

    def coords(p: Point) -> list[Dyadic]:
        dx, dy = p.x - o.x, p.y - o.y
        return [(dx * ux + dy * uy) * inv, (dy * ux - dx * uy) * inv]

    pts = [coords(a.right)] + [coords(p) for p in b.vertices]
    if pts[0][1].sign() < 0:  # mirror image: same shape
        pts = [[u, -v] for u, v in pts]
    return tuple(c for p in pts for c in p)


def _straddle_pairs() -> list[tuple[OrientedFraction, OrientedFraction]]:
    seen = set()
    out = []
    corner = subdivide(root_fraction())
    while _frame_key(*corner) not in seen:
        seen.add(_frame_key(*corner))
        a0, a1 = subdivide(corner[0])
        b0, b1 = subdivide(corner[1])
        out += [(a0, b0), (a0, b1), (a1, b1)]
        corner = (a1, b0)
    return out


def _pair_bound(a: OrientedFraction, b: OrientedFraction) -> ExactRatio:
    far = max(p.dist2(q) for p in a.vertices for q in b.vertices)
    return ExactRatio(far, b.time_start - a.time_end)


def locality_certified(depth_limit: int) -> LocalityReport:
    """Certified upper bound on the locality, by branch and bound to ``depth_limit``.

    A pair of fractions ``(a, b)`` with time gap ``g > 0`` bounds every SLR
    between them by (largest vertex-to-vertex squared distance) / ``g``.
    Pairs whose bound is at most 4 (the attained value) are discarded;
    others are split into four child pairs until their order reaches
    ``depth_limit``.  The result never increases with ``depth_limit``.
    """
    if depth_limit < 2:
        raise DomainError("depth_limit must be at least 2")
    check_depth(depth_limit)
    attained = SlrWitness(Dyadic(0), Dyadic(1), slr(0, 1))
    best = attained.value
    stack = _straddle_pairs()
    nodes = leaves = 0
    while stack:
        a, b = stack.pop()
        nodes += 1
        bound = _pair_bound(a, b)
        if bound <= FOUR:
            continue
        if a.order >= depth_limit:
            leaves += 1
            if bound > best:
                best = bound
            continue
        for ca in subdivide(a):
            for cb in subdivide(b):
                stack.append((ca, cb))
    return LocalityReport(
        attained.value, attained, best, depth_limit, {"nodes": nodes, "open_leaves": leaves}
    )


# Angle lemma ----------------------------------------------------------------

class AngleClass(enum.Enum):
    ACUTE = "AcuteAtMiddle"
    RIGHT = "RightAtMiddle"
    OBTUSE = "ObtuseAtMiddle"


@dataclass(frozen=True)
class AngleReport:
    d12: Dyadic
    d23: Dyadic
    d13: Dyadic
    slr12: ExactRatio
    slr23: ExactRatio
    slr13: ExactRatio
    angle_class: AngleClass
    lemma_holds: bool


def angle_triple(t1: DyadicLike, t2: DyadicLike, t3: DyadicLike) -> AngleReport:
    """Classify the angle at ``s(t2)`` and test the angle lemma.

    With a non-obtuse angle at the middle image point, the outer SLR does
    not exceed the larger inner one (strictly smaller for an acute angle).
    Distances are squared.
    """
    t1, t2, t3 = (Dyadic.coerce(t) for t in (t1, t2, t3))
    if not t1 < t2 < t3:
        raise DomainError("need t1 < t2 < t3")
    p1, p2, p3 = evaluate(t1), evaluate(t2), evaluate(t3)
    d12, d23, d13 = p1.dist2(p2), p2.dist2(p3), p1.dist2(p3)
    s12, s23, s13 = _ratio(d12, t2 - t1), _ratio(d23, t3 - t2), _ratio(d13, t3 - t1)
    c = Cmp.of(d13, d12 + d23)
    cls = {Cmp.GREATER: AngleClass.OBTUSE, Cmp.EQUAL: AngleClass.RIGHT, Cmp.LESS: AngleClass.ACUTE}[c]
    top = max(s12, s23)
    if cls is AngleClass.OBTUSE:
        holds = True
    elif cls is AngleClass.RIGHT:
        holds = top >= s13
    else:
        holds = top > s13
    return AngleReport(d12, d23, d13, s12, s23, s13, cls, holds)


# Disk corollary -------------------------------------------------------------

def points_in_disk(points, center: Point, radius2: Dyadic) -> bool:
    return all(p.dist2(center) <= radius2 for p in points)


def disk_containment(n: int, k: int, sample_depth: int) -> bool:
    """Whether the curve on fraction ``(n, k)`` stays in the disk on its hypotenuse.

    Checked exactly at every sample ``t = i / 2**sample_depth`` of the
    fraction's time interval.
    """
    if n < 0 or not 0 <= k < (1 << n):
        raise DomainError(f"no fraction ({n}, {k})")
    if sample_depth < n:
        raise DomainError("sample_depth must be at least n")
    check_depth(sample_depth)
    e, _, x, h = lattice_tiling(sample_depth)
    step = 1 << (sample_depth - n)
    lo, hi = k * step, (k + 1) * step
    pts = [*map(tuple, e[lo:hi]), tuple(x[hi - 1])]
    ex, ey = pts[0]
    xx, xy = pts[-1]
    # scale by 2 more so the center is integral; radius^2 = 2**-n
    cx, cy = int(ex + xx), int(ey + xy)
    r2 = 1 << (2 * h + 2 - n)
    return all((2 * int(a) - cx) ** 2 + (2 * int(b) - cy) ** 2 <= r2 for a, b in pts)


def fraction_metrics(f: OrientedFraction) -> dict:
    """Squared leg, squared hypotenuse and end-to-end SLR of a fraction."""
    leg = f.entry.dist2(f.right)
    hyp = f.entry.dist2(f.exit)
    return {"leg_sq": leg, "hyp_sq": hyp, "slr_across": ExactRatio(hyp, f.time_end - f.time_start)}
