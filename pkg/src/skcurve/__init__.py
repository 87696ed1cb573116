"""Exact computations on the Sierpinski-Knopp space-filling curve."""

from .curve import (
    OrientedFraction,
    Point,
    evaluate,
    evaluate_real,
    fraction_at,
    preimages,
    root_fraction,
    subdivide,
    tiling,
)
from .exact import Cmp, DomainError, Dyadic, ExactRatio, cmp_ratio, dyadic, parse_dyadic
from .kernels import BACKEND
from .metrics import (
    angle_triple,
    disk_containment,
    fraction_metrics,
    locality_certified,
    locality_dyadic,
    slr,
)

__version__ = "0.1.0"
