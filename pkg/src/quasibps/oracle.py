"""Brute-force reference routes used to pin expected values.

Everything here is deliberately naive and shares only the core data types
with the primary implementations: weight lists are materialized element by
element, admissibility is sampled over explicit cocharacter grids, and
lattice counts scan entire bounding boxes with no structural pruning.  Use
on small instances only.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, product

from .errors import CutoffExceededError
from .partitions import VectorPartition, _orderings
from .quiver import Quiver, check_dim_vector, require_symmetric, total_dim, weight_multisets
from .weights import CentralWeight, is_dominant, weyl_vector
from .zonotope import bounding_box, contains, weight_zonotope


def window_width_bruteforce(q: Quiver, d, lam):
    """Window width by expanding every weight into a full vector and dotting."""
    require_symmetric(q)
    d = check_dim_vector(q, d)
    n = total_dim(d)
    rep, adj = weight_multisets(q, d)
    vectors = []
    for (p, r), m in rep.entries:
        vec = [0] * n
        vec[p] += 1
        vec[r] -= 1
        for _ in range(m):
            vectors.append((tuple(vec), 1))
    for (p, r), m in adj.entries:
        vec = [0] * n
        vec[p] += 1
        vec[r] -= 1
        for _ in range(m):
            vectors.append((tuple(vec), -1))
    total = 0
    for vec, sign in vectors:
        val = sum(a * b for a, b in zip(lam, vec))
        if val > 0:
            total += sign * val
    return total


def partition_indicator_sampling(q: Quiver, d, partition, delta: CentralWeight,
                                 bound: int = 6):
    """Sample the admissibility quantifier over a finite cocharacter grid.

    Walks every ordering of the parts and every strictly decreasing integer
    level tuple with values in [-bound, bound].  Returns 0 on any failure,
    1 when all sampled cocharacters pass, and "unknown" when the grid admits
    no cocharacter (more parts than available levels).  A return of 1 is a
    necessary-condition witness, not a proof.
    """
    require_symmetric(q)
    d = check_dim_vector(q, d)
    if not isinstance(partition, VectorPartition):
        partition = VectorPartition(tuple(partition))
    dexp = delta.expand(d)
    tested = False
    for ordering in _orderings(partition.parts):
        k = len(ordering)
        for values in combinations(range(bound, -bound - 1, -1), k):
            tested = True
            lam = []
            for i in range(len(d)):
                for j, part in enumerate(ordering):
                    lam.extend([values[j]] * part[i])
            lam = tuple(lam)
            width = window_width_bruteforce(q, d, lam)
            val = Fraction(width, 2) + sum(
                (a * b for a, b in zip(lam, dexp)), Fraction(0))
            if val.denominator != 1:
                return 0
    return 1 if tested else "unknown"


def lattice_count_naive(q: Quiver, d, delta: CentralWeight,
                        max_points: int = 2_000_000) -> int:
    """Window count by scanning the full bounding box lattice.

    Filters by dominance and exact membership only; no sum constraint is used
    to prune, so this is an enumeration oracle for the primary counter.
    """
    require_symmetric(q)
    d = check_dim_vector(q, d)
    n = total_dim(d)
    z = weight_zonotope(q, d)
    shift = tuple(dv - rv for dv, rv in zip(delta.expand(d), weyl_vector(d)))
    ranges = []
    size = 1
    for p, (lo, hi) in enumerate(bounding_box(z)):
        ints = range(math.ceil(lo + shift[p]), math.floor(hi + shift[p]) + 1)
        ranges.append(ints)
        size *= len(ints)
        if size > max_points:
            raise CutoffExceededError(
                f"naive scan would visit more than {max_points} points")
    count = 0
    for chi in product(*ranges):
        if not is_dominant(chi, d):
            continue
        x = tuple(Fraction(c) - s for c, s in zip(chi, shift))
        if contains(z, x):
            count += 1
    return count
