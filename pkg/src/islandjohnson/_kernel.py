"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel is exact only for |coordinate| < 2**61 (128-bit
determinants); calls with larger coordinates are routed to the
arbitrary-precision pure kernel automatically.  Set ISLANDJOHNSON_PURE=1
to force the pure kernel everywhere.
"""

import os

from . import _purecore as pure

try:
    from . import _fastcore as fast
except ImportError:
    fast = None

FORCE_PURE = os.environ.get("ISLANDJOHNSON_PURE", "") not in ("", "0")
HAVE_FAST = fast is not None
COORD_LIMIT = 1 << 61

BACKEND = "compiled" if (HAVE_FAST and not FORCE_PURE) else "pure"


def _coords_fit(xs, ys):
    lim = COORD_LIMIT
    return (all(-lim < v < lim for v in xs)
            and all(-lim < v < lim for v in ys))


def _use_fast(xs, ys):
    return HAVE_FAST and not FORCE_PURE and _coords_fit(xs, ys)


def orientation(ax, ay, bx, by, cx, cy):
    if HAVE_FAST and not FORCE_PURE:
        try:
            return fast.orientation(ax, ay, bx, by, cx, cy)
        except OverflowError:
            pass
    return pure.orientation(ax, ay, bx, by, cx, cy)


def is_island_members(xs, ys, members):
    if _use_fast(xs, ys) and len(members) <= 64:
        return fast.is_island_members(xs, ys, members)
    return pure.is_island_members(xs, ys, members)


def islands_of_size(xs, ys, k):
    if _use_fast(xs, ys) and k <= 64:
        return fast.islands_of_size(xs, ys, k)
    return pure.islands_of_size(xs, ys, k)


def overlap_edges(members, l, ground_size):
    # The compiled quadratic scan wins on small vertex sets; the inverted
    # index in the pure kernel wins at scale for l >= 1, where qualifying
    # pairs are sparse relative to the quadratic candidate count.
    use_fast = (HAVE_FAST and not FORCE_PURE and ground_size <= 64
                and (l == 0 or len(members) <= 2000))
    if use_fast:
        return fast.overlap_edges(members, l)
    return pure.overlap_edges(members, l)


def high_above(xs_hi, ys_hi, xs_lo, ys_lo):
    if (HAVE_FAST and not FORCE_PURE
            and _coords_fit(xs_hi, ys_hi) and _coords_fit(xs_lo, ys_lo)):
        return fast.high_above(xs_hi, ys_hi, xs_lo, ys_lo)
    return pure.high_above(xs_hi, ys_hi, xs_lo, ys_lo)
