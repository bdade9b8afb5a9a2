"""Counting dominant lattice weights in the shifted window polytope.

The count attached to (quiver, dimension vector, central weight) is the
number of dominant integer weights chi such that chi + (Weyl vector) -
(central weight) lies in the weight zonotope.  All generators of the
zonotope sum to zero, so the count vanishes unless the central weight pairs
integrally with the diagonal cocharacter; that integer also fixes the
coordinate sum of every counted weight, which drives the enumeration.

Enumeration walks the slots vertex-major, keeps coefficients nondecreasing
inside each block, and prunes on per-slot bounding-box ranges plus suffix
sums.  Membership of each completed candidate is decided by the exact flow
route, optionally preceded by the indicator filter (``fast="on"``, sound
rejections, accepted points re-confirmed exactly) or cross-checked against
it (``fast="checked"``, raises on any disagreement).
"""

from __future__ import annotations

import math
from fractions import Fraction
from multiprocessing import get_context

from .errors import CutoffExceededError, InputSchemaError
from .quiver import Quiver, check_dim_vector, require_symmetric, slot_blocks, total_dim
from .weights import CentralWeight, weyl_vector
from .zonotope import (
    INDICATOR_CUTOFF,
    bounding_box,
    contains,
    contains_fast,
    weight_zonotope,
)

COUNT_CUTOFF = 12  # refuse larger total ranks unless force=True

_FAST_MODES = ("on", "off", "checked")


def magic_dimension(q: Quiver, d, delta: CentralWeight, *,
                    fast: str = "on", jobs: int = 1, force: bool = False) -> int:
    """Number of dominant integer weights inside the shifted window."""
    require_symmetric(q)
    d = check_dim_vector(q, d)
    n = total_dim(d)
    if n == 0:
        raise InputSchemaError("dimension vector is zero")
    if n > COUNT_CUTOFF and not force:
        raise CutoffExceededError(
            f"total rank {n} above counting cutoff {COUNT_CUTOFF}; use force to override")
    if fast not in _FAST_MODES:
        raise InputSchemaError(f"unknown fast-membership mode {fast!r}")
    if not isinstance(jobs, int) or jobs < 1:
        raise InputSchemaError(f"jobs must be a positive integer, got {jobs!r}")

    total = delta.total_pairing(d)
    if total.denominator != 1:
        return 0  # the window misses the integer slice of the sum hyperplane
    v = int(total)

    bounds = _slot_bounds(q, d, delta)
    if bounds is None:
        return 0
    lo, hi = bounds

    if jobs > 1 and hi[0] > lo[0]:
        chunks = _split_range(lo[0], hi[0], jobs)
        args = [(q, d, delta, fast, force, c) for c in chunks]
        with get_context("fork").Pool(len(chunks)) as pool:
            return sum(pool.starmap(_count_chunk, args))
    return _count_chunk(q, d, delta, fast, force, (lo[0], hi[0]))


def magic_dimension_v(q: Quiver, d, v: int, **kwargs) -> int:
    """Same count with the integer weight parameter spread evenly."""
    d = check_dim_vector(q, d)
    return magic_dimension(q, d, CentralWeight.spread(d, v), **kwargs)


def _slot_bounds(q, d, delta):
    """Integer per-slot ranges for candidate weights, or None when empty."""
    n = total_dim(d)
    z = weight_zonotope(q, d)
    shift = tuple(dv - rv for dv, rv in zip(delta.expand(d), weyl_vector(d)))
    box = bounding_box(z)
    lo, hi = [], []
    for p in range(n):
        lo.append(math.ceil(box[p][0] + shift[p]))
        hi.append(math.floor(box[p][1] + shift[p]))
        if lo[p] > hi[p]:
            return None
    return lo, hi


def _split_range(lo: int, hi: int, jobs: int):
    width = hi - lo + 1
    jobs = min(jobs, width)
    out = []
    start = lo
    for k in range(jobs):
        size = width // jobs + (1 if k < width % jobs else 0)
        out.append((start, start + size - 1))
        start += size
    return out


def _count_chunk(q, d, delta, fast, force, first_range) -> int:
    """Count candidates whose first-slot value lies in first_range (inclusive)."""
    n = total_dim(d)
    v = int(delta.total_pairing(d))
    z = weight_zonotope(q, d)
    shift = tuple(dv - rv for dv, rv in zip(delta.expand(d), weyl_vector(d)))
    bounds = _slot_bounds(q, d, delta)
    if bounds is None:
        return 0
    lo, hi = bounds
    lo[0] = max(lo[0], first_range[0])
    hi[0] = min(hi[0], first_range[1])
    if lo[0] > hi[0]:
        return 0

    starts = {b0 for b0, b1 in slot_blocks(d) if b1 > b0}
    suffix_lo = [0] * (n + 1)
    suffix_hi = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        suffix_lo[p] = suffix_lo[p + 1] + lo[p]
        suffix_hi[p] = suffix_hi[p + 1] + hi[p]

    use_indicator = fast != "off" and (fast == "checked" or n <= INDICATOR_CUTOFF)

    def member(chi) -> bool:
        x = tuple(Fraction(c) - s for c, s in zip(chi, shift))
        if fast == "checked":
            quick = contains_fast(z, x)
            exact = contains(z, x)
            if quick != exact:
                raise RuntimeError(
                    f"membership routes disagree at {x}: indicator={quick} flow={exact}")
            return exact
        if use_indicator and not contains_fast(z, x):
            return False
        return contains(z, x)

    count = 0
    chi = [0] * n

    def walk(p, acc):
        nonlocal count
        if p == n:
            if acc == v and member(chi):
                count += 1
            return
        floor_p = lo[p] if p in starts else max(lo[p], chi[p - 1])
        for c in range(floor_p, hi[p] + 1):
            acc2 = acc + c
            if acc2 + suffix_lo[p + 1] > v:
                break  # values only grow from here
            if acc2 + suffix_hi[p + 1] < v:
                continue
            chi[p] = c
            walk(p + 1, acc2)

    walk(0, 0)
    return count
