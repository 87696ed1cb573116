"""Pure-Python fallbacks for the compiled pair-scan kernels.

Same contracts as ``_kernels.pyx``.  Each row ``i`` is scanned with numpy
int64 vector arithmetic; the caller has already checked magnitudes.
"""

import numpy as np


def max_pair_ratio(xs, ys, ts):
    xs, ys, ts = (np.asarray(v, dtype=np.int64) for v in (xs, ys, ts))
    bn, bd, bi, bj = -1, 1, -1, -1
    for i in range(len(xs) - 1):
        dx = xs[i + 1:] - xs[i]
        dy = ys[i + 1:] - ys[i]
        d2 = dx * dx + dy * dy
        dt = ts[i + 1:] - ts[i]
        # best candidate in this row: compare pairwise by cross-multiplication
        k = _argmax_ratio(d2, dt)
        n, d = int(d2[k]), int(dt[k])
        if n * bd > bn * d:
            bn, bd, bi, bj = n, d, i, i + 1 + k
    return bn, bd, bi, bj


def _argmax_ratio(num, den):
    # first index of the maximal num/den; floats only pick candidates,
    # the final choice is exact
    approx = num / den
    cand = np.flatnonzero(approx >= approx.max() * (1 - 1e-9))
    best = int(cand[0])
    for k in cand[1:]:
        k = int(k)
        if int(num[k]) * int(den[best]) > int(num[best]) * int(den[k]):
            best = k
    return best


def first_excess(xs, ys, ts, a, b, c):
    xs, ys, ts = (np.asarray(v, dtype=np.int64) for v in (xs, ys, ts))
    for i in range(len(xs) - 1):
        dx = xs[i + 1:] - xs[i]
        dy = ys[i + 1:] - ys[i]
        hit = np.flatnonzero(a * (dx * dx + dy * dy) > b * (ts[i + 1:] - ts[i]) + c)
        if hit.size:
            return i, i + 1 + int(hit[0])
    return -1, -1


def max_pair_ratio_bigint(xs, ys, ts):
    """Arbitrary-precision reference scan (plain Python integers)."""
    bn, bd, bi, bj = -1, 1, -1, -1
    n = len(xs)
    for i in range(n - 1):
        xi, yi, ti = xs[i], ys[i], ts[i]
        for j in range(i + 1, n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            d2 = dx * dx + dy * dy
            dt = ts[j] - ti
            if d2 * bd > bn * dt:
                bn, bd, bi, bj = d2, dt, i, j
    return bn, bd, bi, bj


def first_excess_bigint(xs, ys, ts, a, b, c):
    n = len(xs)
    for i in range(n - 1):
        xi, yi, ti = xs[i], ys[i], ts[i]
        for j in range(i + 1, n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            if a * (dx * dx + dy * dy) > b * (ts[j] - ti) + c:
                return i, j
    return -1, -1
