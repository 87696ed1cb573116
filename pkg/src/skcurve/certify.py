"""Certification of candidate locality-4 curves.

A candidate is a table of claimed values ``p(i / 2**N)`` of a curve onto a
unit-area triangle.  :func:`certify` runs four finite necessary conditions
in order and stops at the first failure:

C1  the samples at ``t = 0, 1/2, 1`` form an isosceles right triangle with
    squared hypotenuse 4, ``p(0)`` and ``p(1)`` at the acute vertices, and
    every sample lies in that triangle;
C2  every pair of samples obeys ``|p(tj) - p(ti)|**2 <= 4 (tj - ti)``;
C3  every sample at an odd multiple of ``2**-(n+1)`` sits at the right-angle
    vertex of the order-``n`` sub-triangle generated from the C1 anchors;
C4  the isometry carrying the anchors onto ``(0,0), (1,1), (2,0)`` carries
    every sample onto the Sierpinski-Knopp curve.

A pass means "consistent with the Sierpinski-Knopp curve at depth N".
Continuity cannot be decided from samples; C2 gives the Holder-1/2 modulus
at the samples and nothing more is claimed.

Tolerances are additive on squared distances (C4 compares against
``tol**2``).  ``tol = 0`` demands exact agreement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import kernels
from .curve import OrientedFraction, Point, check_depth, orient, samples, subdivide
from .exact import DomainError, Dyadic, DyadicLike, parse_dyadic

__all__ = [
    "CandidateTable",
    "Isometry",
    "IsometryError",
    "Surd",
    "TableError",
    "Verdict",
    "certify",
    "decimal_tolerance",
    "detect_isometry",
    "export_table",
    "load_table",
    "parse_table",
    "transform_table",
]

DEFAULT_DECIMAL_PRECISION = 64


class TableError(DomainError):
    """Malformed candidate table."""


class IsometryError(DomainError):
    """The anchors are not congruent to the canonical triangle."""


# Numbers a + b*sqrt(2) --------------------------------------------------------

@dataclass(frozen=True)
class Surd:
    """``a + b*sqrt(2)`` with dyadic ``a`` and ``b``."""

    a: Dyadic
    b: Dyadic = Dyadic(0)

    @classmethod
    def of(cls, v) -> "Surd":
        return v if isinstance(v, Surd) else cls(Dyadic.coerce(v))

    def __add__(self, o):
        o = Surd.of(o)
        return Surd(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = Surd.of(o)
        return Surd(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return Surd.of(o) - self

    def __neg__(self):
        return Surd(-self.a, -self.b)

    def __mul__(self, o):
        o = Surd.of(o)
        return Surd(self.a * o.a + 2 * (self.b * o.b), self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def sign(self) -> int:
        sa, sb = self.a.sign(), self.b.sign()
        if sb == 0 or sa == sb:
            return sa if sa else sb
        if sa == 0:
            return sb
        # opposite signs: compare a**2 with 2 b**2
        d = (self.a * self.a - 2 * (self.b * self.b)).sign()
        return sa * d

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __le__(self, o):
        return (self - o).sign() <= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 2 ** 0.5

    def is_dyadic(self) -> bool:
        return self.b.sign() == 0

    def __str__(self):
        if not self.b:
            return str(self.a)
        s = f"{self.b}*sqrt(2)"
        return s if not self.a else f"{self.a}+{s}"


_ZERO, _ONE, _HALF_ROOT2 = Surd(Dyadic(0)), Surd(Dyadic(1)), Surd(Dyadic(0), Dyadic(1, 1))
# cos/sin of multiples of 45 degrees
_COS = [_ONE, _HALF_ROOT2, _ZERO, -_HALF_ROOT2, -_ONE, -_HALF_ROOT2, _ZERO, _HALF_ROOT2]


@dataclass(frozen=True)
class Isometry:
    """Plane isometry ``q -> M (q + translation)``.

    ``M`` rotates by ``rotation * 45`` degrees, after first mirroring in the
    x-axis when ``reflect`` is set.  The translation is applied first so it
    stays a dyadic point for every rotation.
    """

    rotation: int
    reflect: bool
    translation: Point

    @property
    def matrix(self) -> tuple[tuple[Surd, Surd], tuple[Surd, Surd]]:
        c, s = _COS[self.rotation % 8], _COS[(self.rotation - 2) % 8]
        if self.reflect:
            return ((c, s), (s, -c))
        return ((c, -s), (s, c))

    @property
    def determinant(self) -> int:
        return -1 if self.reflect else 1

    def apply(self, q: Point) -> tuple[Surd, Surd]:
        (m00, m01), (m10, m11) = self.matrix
        x, y = q.x + self.translation.x, q.y + self.translation.y
        return m00 * x + m01 * y, m10 * x + m11 * y

    def apply_exact(self, q: Point) -> Point:
        x, y = self.apply(q)
        if not (x.is_dyadic() and y.is_dyadic()):
            raise DomainError("image is not a dyadic point")
        return Point(x.a, y.a)

    def inverse(self) -> "Isometry":
        if self.rotation % 2:
            raise DomainError("inverse translation is not dyadic")
        # q = M^T p - T = M^T (p - M T)
        mt = self.apply(Point.of(0, 0))
        shift = Point(-mt[0].a, -mt[1].a)
        rot = self.rotation % 8 if self.reflect else (-self.rotation) % 8
        return Isometry(rot, self.reflect, shift)

    def is_identity(self) -> bool:
        return self.rotation % 8 == 0 and not self.reflect and not self.translation.x and not self.translation.y

    def to_json(self) -> dict:
        return {
            "matrix": [[str(v) for v in row] for row in self.matrix],
            "translation": self.translation.to_json(),
            "rotation_degrees": 45 * (self.rotation % 8),
            "reflection": self.reflect,
            "determinant": self.determinant,
            "applied_as": "M * (q + translation)",
        }


def _dist2(p: tuple[Surd, Surd], q: tuple[Surd, Surd]) -> Surd:
    dx, dy = p[0] - q[0], p[1] - q[1]
    return dx * dx + dy * dy


# Tables ---------------------------------------------------------------------

@dataclass
class CandidateTable:
    depth: int
    points: list[Point]
    encoding: str = "dyadic"
    precision: Optional[int] = None

    def __post_init__(self):
        if self.depth < 1:
            raise TableError("depth must be at least 1")
        if len(self.points) != (1 << self.depth) + 1:
            raise TableError(
                f"length: expected {(1 << self.depth) + 1} points for depth {self.depth}, got {len(self.points)}"
            )

    def anchors(self) -> tuple[Point, Point, Point]:
        return self.points[0], self.points[1 << (self.depth - 1)], self.points[-1]

    def to_json(self) -> dict:
        out = {"depth": self.depth, "encoding": self.encoding}
        if self.encoding == "decimal":
            out["precision"] = self.precision
            out["points"] = [[_exact_decimal(p.x), _exact_decimal(p.y)] for p in self.points]
        else:
            out["points"] = [p.to_json() for p in self.points]
        return out


def _exact_decimal(d: Dyadic) -> str:
    # m / 2**e = m * 5**e / 10**e has a finite decimal expansion
    with localcontext() as ctx:
        ctx.prec = max(28, len(str(abs(d.num))) + 2 * d.exp)
        s = format(Decimal(d.num * 5 ** d.exp).scaleb(-d.exp), "f")
    return s


def _round_dyadic(q: Fraction, bits: int) -> Dyadic:
    return Dyadic(round(q * (1 << bits)), bits)


def decimal_tolerance(text: str = "1e-12", bits: int = 80) -> Dyadic:
    """Smallest multiple of ``2**-bits`` not below the decimal ``text``."""
    q = Fraction(text)
    m = -((-q.numerator << bits) // q.denominator)
    return Dyadic(m, bits)


def parse_table(obj: dict) -> CandidateTable:
    if not isinstance(obj, dict):
        raise TableError("table must be a JSON object")
    try:
        depth = obj["depth"]
        raw = obj["points"]
    except KeyError as exc:
        raise TableError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < 1:
        raise TableError("depth must be a positive integer")
    check_depth(depth)
    encoding = obj.get("encoding", "dyadic")
    if encoding not in ("dyadic", "decimal"):
        raise TableError(f"unknown encoding {encoding!r}")
    precision = None
    if encoding == "decimal":
        precision = obj.get("precision", DEFAULT_DECIMAL_PRECISION)
        if not isinstance(precision, int) or precision < 0:
            raise TableError("precision must be a nonnegative integer (bits)")
    if not isinstance(raw, list) or len(raw) != (1 << depth) + 1:
        n = len(raw) if isinstance(raw, list) else "?"
        raise TableError(f"length: expected {(1 << depth) + 1} points for depth {depth}, got {n}")
    pts = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise TableError(f"points[{i}]: expected a coordinate pair")
        try:
            if encoding == "dyadic":
                xy = [parse_dyadic(str(v)) if not isinstance(v, int) else Dyadic(v) for v in pair]
            else:
                xy = [_round_dyadic(Fraction(str(v)), precision) for v in pair]
        except (ValueError, ZeroDivisionError) as exc:
            raise TableError(f"points[{i}]: bad encoding ({exc})") from None
        pts.append(Point(*xy))
    return CandidateTable(depth, pts, encoding, precision)


def load_table(path) -> CandidateTable:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise TableError(f"invalid JSON: {exc}") from None
    return parse_table(obj)


def export_table(depth: int, encoding: str = "dyadic") -> CandidateTable:
    """Samples of the Sierpinski-Knopp curve at ``k / 2**depth`` as a table."""
    check_depth(depth)
    precision = None if encoding == "dyadic" else max(depth // 2, 1)
    return CandidateTable(depth, samples(depth), encoding, precision)


def transform_table(table: CandidateTable, iso: Isometry) -> CandidateTable:
    return CandidateTable(table.depth, [iso.apply_exact(p) for p in table.points], table.encoding, table.precision)


# Verdict --------------------------------------------------------------------

NOTE = (
    "finite necessary conditions only: a pass means consistent with the "
    "Sierpinski-Knopp curve at the sampled depth; continuity is not "
    "certified, C2 gives the Holder-1/2 modulus at the samples"
)


@dataclass
class Verdict:
    passed: bool
    failed_check: Optional[str] = None
    first_violation: Optional[dict] = None
    isometry: Optional[Isometry] = None
    depth: Optional[int] = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "failed_check": self.failed_check,
            "first_violation": self.first_violation,
            "isometry": None if self.isometry is None else self.isometry.to_json(),
            "depth": self.depth,
            "details": self.details,
            "note": NOTE,
        }


def _fail(check: str, depth: int, **violation) -> Verdict:
    return Verdict(False, check, violation, None, depth)


def _within(value: Dyadic, target: int, tol: Dyadic) -> bool:
    return abs(value - target) <= tol


# Checks ---------------------------------------------------------------------

def _check_c1(table: CandidateTable, tol: Dyadic) -> Optional[dict]:
    p0, pm, pe = table.anchors()
    sides = {"hyp_sq": (p0.dist2(pe), 4), "leg0_sq": (p0.dist2(pm), 2), "leg1_sq": (pm.dist2(pe), 2)}
    for name, (val, want) in sides.items():
        if not _within(val, want, tol):
            return {"reason": f"anchor triangle {name} = {val}, expected {want}", "value": str(val)}
    ccw = orient(p0, pm, pe).sign()
    edges = [(p0, pm), (pm, pe), (pe, p0)]
    lens = [u.dist2(v) for u, v in edges]
    for i, q in enumerate(table.points):
        for (u, v), l2 in zip(edges, lens):
            cross = orient(u, v, q) * ccw
            if cross.sign() < 0 and cross * cross > tol * l2:
                return {"reason": "sample outside the anchor triangle", "index": i, "point": q.to_json()}
    return None


def _lattice(points: list[Point]) -> tuple[list[int], list[int], int]:
    e = max(max(p.x.exp, p.y.exp) for p in points)
    xs = [p.x.num << (e - p.x.exp) for p in points]
    ys = [p.y.num << (e - p.y.exp) for p in points]
    return xs, ys, e


def _check_c2(table: CandidateTable, tol: Dyadic) -> Optional[dict]:
    xs, ys, e = _lattice(table.points)
    n = table.depth
    # |dp|^2 = D / 2**(2e), dt = (j - i) / 2**n, tol = m / 2**te; clear denominators
    k = max(2 * e, n, tol.exp)
    a = 1 << (k - 2 * e)
    b = 4 << (k - n)
    c = tol.num << (k - tol.exp)
    hit = kernels.first_excess(xs, ys, range(len(xs)), a, b, c)
    if hit is None:
        return None
    i, j = hit
    d2 = table.points[i].dist2(table.points[j])
    limit = Dyadic(4 * (j - i), n) + tol
    return {
        "reason": "square-to-linear bound exceeded",
        "i": i,
        "j": j,
        "t_i": str(Dyadic(i, n)),
        "t_j": str(Dyadic(j, n)),
        "dist_sq": str(d2),
        "limit": str(limit),
    }


def _check_c3(table: CandidateTable, tol: Dyadic) -> Optional[dict]:
    p0, pm, pe = table.anchors()
    n_max = table.depth
    level = [OrientedFraction(0, 0, p0, pm, pe)]
    for n in range(n_max):
        stride = 1 << (n_max - n - 1)
        for f in level:
            idx = (2 * f.index + 1) * stride
            d2 = table.points[idx].dist2(f.right)
            if d2 > tol:
                return {
                    "reason": "midpoint sample is not the right-angle vertex of its sub-triangle",
                    "order": n,
                    "k": f.index,
                    "index": idx,
                    "expected": f.right.to_json(),
                    "found": table.points[idx].to_json(),
                    "dist_sq": str(d2),
                }
        if n + 1 < n_max:
            level = [c for f in level for c in subdivide(f)]
    return None


def detect_isometry(table: CandidateTable, tol: DyadicLike = 0) -> Isometry:
    """The isometry carrying the anchors ``p(0), p(1/2), p(1)`` to ``(0,0), (1,1), (2,0)``.

    Only the 16 elements of the 45-degree dihedral group are candidates; the
    one with the smallest anchor residual within ``tol`` is returned.
    """
    tol = Surd.of(Dyadic.coerce(tol))
    p0, pm, pe = table.anchors()
    shift = Point(-p0.x, -p0.y)
    targets = [(pm, (Surd.of(1), Surd.of(1))), (pe, (Surd.of(2), Surd.of(0)))]
    best = None
    for reflect in (False, True):
        for rot in range(8):
            iso = Isometry(rot, reflect, shift)
            r1, r2 = (_dist2(iso.apply(p), want) for p, want in targets)
            res = r2 if r1 < r2 else r1
            if res <= tol and (best is None or res < best[0]):
                best = (res, iso)
    if best is None:
        raise IsometryError("no isometry carries the anchors onto the canonical triangle")
    return best[1]


def _check_c4(table: CandidateTable, tol: Dyadic) -> tuple[Optional[dict], Optional[Isometry], Optional[Surd]]:
    try:
        iso = detect_isometry(table, tol)
    except IsometryError as exc:
        return {"reason": str(exc)}, None, None
    limit = Surd.of(tol * tol)
    ref = samples(table.depth)
    worst = Surd.of(0)
    for i, (q, s) in enumerate(zip(table.points, ref)):
        d2 = _dist2(iso.apply(q), (Surd.of(s.x), Surd.of(s.y)))
        if limit < d2:
            return {
                "reason": "sample differs from the Sierpinski-Knopp curve after the isometry",
                "index": i,
                "t": str(Dyadic(i, table.depth)),
                "dist_sq": str(d2),
            }, iso, None
        if worst < d2:
            worst = d2
    return None, iso, worst


def certify(table: CandidateTable, tol: DyadicLike = 0) -> Verdict:
    """Run C1-C4 in order and report the first failure."""
    tol = Dyadic.coerce(tol)
    if tol.sign() < 0:
        raise DomainError("tol must be nonnegative")
    n = table.depth
    for name, check in (("C1", _check_c1), ("C2", _check_c2), ("C3", _check_c3)):
        bad = check(table, tol)
        if bad is not None:
            return _fail(name, n, **bad)
    bad, iso, worst = _check_c4(table, tol)
    if bad is not None:
        v = _fail("C4", n, **bad)
        v.isometry = iso
        return v
    return Verdict(True, None, None, iso, n, {"tol": str(tol), "max_c4_dist_sq": str(worst)})
