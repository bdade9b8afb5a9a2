"""Vector partitions and the admissible subset attached to a central weight.

A partition of a dimension vector is an unordered multiset of nonzero
dimension vectors summing to it.  A partition is *admissible* for a central
weight when, for every ordering of its parts and every antidominant integer
cocharacter whose level sets realize that ordering, half the window width
plus the central pairing is an integer.

On the cone of cocharacters realizing a fixed ordering that quantity is a
linear form in the level values with no constant term, so admissibility of
the ordering reduces to integrality of the form's coefficients.  The
coefficients are extracted by evaluating at a base level tuple with spacing
three and at one-step perturbations, which stay inside the cone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import CutoffExceededError, InputSchemaError
from .quiver import (
    DimVector,
    Quiver,
    check_dim_vector,
    is_symmetric,
    require_symmetric,
    slot_blocks,
    total_dim,
    weight_multisets,
)
from .weights import CentralWeight, pairing, window_width

log = logging.getLogger(__name__)

PARTITION_CUTOFF = 20  # total rank above which enumeration is refused


@dataclass(frozen=True)
class VectorPartition:
    """Unordered multiset of nonzero dimension vectors, stored canonically.

    Parts are sorted in decreasing lexicographic order so equal multisets
    compare and hash equal.
    """

    parts: tuple[DimVector, ...]

    def __post_init__(self):
        parts = tuple(sorted((tuple(p) for p in self.parts), reverse=True))
        for p in parts:
            if not any(p):
                raise InputSchemaError("partition contains a zero part")
            if any(not isinstance(c, int) or c < 0 for c in p):
                raise InputSchemaError(f"partition part {p!r} is not a nonnegative vector")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[DimVector, int]:
        out: dict[DimVector, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def vector_sum(self) -> DimVector:
        return tuple(sum(col) for col in zip(*self.parts))

    def __str__(self) -> str:
        if all(len(p) == 1 for p in self.parts):
            return "+".join(str(p[0]) for p in self.parts)
        return "+".join("(" + ",".join(str(c) for c in p) + ")" for p in self.parts)


def enumerate_vector_partitions(d, *, force: bool = False) -> list[VectorPartition]:
    """All partitions of d into nonzero dimension vectors, canonical order."""
    d = tuple(d)
    if total_dim(d) > PARTITION_CUTOFF and not force:
        raise CutoffExceededError(
            f"total rank {total_dim(d)} above partition cutoff {PARTITION_CUTOFF}; "
            "use force to override")
    if any(not isinstance(c, int) or c < 0 for c in d):
        raise InputSchemaError(f"dimension vector {d!r} is not nonnegative")
    results: list[VectorPartition] = []
    stack: list[DimVector] = []

    def candidates(rem, cap):
        for vec in product(*(range(m, -1, -1) for m in rem)):
            if any(vec) and vec <= cap:
                yield vec

    def rec(rem, cap):
        if not any(rem):
            results.append(VectorPartition(tuple(stack)))
            return
        for vec in candidates(rem, cap):
            stack.append(vec)
            rec(tuple(r - c for r, c in zip(rem, vec)), vec)
            stack.pop()

    rec(d, d)
    results.sort(key=lambda a: a.parts, reverse=True)
    return results


def _orderings(parts):
    """Distinct orderings of a multiset of parts, deterministic order."""
    counts = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    keys = sorted(counts, reverse=True)
    seq: list[DimVector] = []
    total = len(parts)

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                seq.append(k)
                yield from rec()
                seq.pop()
                counts[k] += 1

    yield from rec()


def _levels_to_cocharacter(ordering, d, values):
    """Antidominant cocharacter with the j-th ordered part at level values[j]."""
    lam = []
    for i in range(len(d)):
        for j, part in enumerate(ordering):
            lam.extend([values[j]] * part[i])
    return tuple(lam)


def _partition_checked(q, d, partition) -> VectorPartition:
    if not isinstance(partition, VectorPartition):
        partition = VectorPartition(tuple(partition))
    if partition.vector_sum() != tuple(d):
        raise InputSchemaError(
            f"partition sums to {partition.vector_sum()}, expected {tuple(d)}")
    return partition


def partition_indicator(q: Quiver, d, partition, delta: CentralWeight) -> int:
    """1 when every ordering of the parts passes the integrality test.

    Mixed verdicts across orderings would signal a convention anomaly; they
    are logged, and the partition still counts as inadmissible.
    """
    require_symmetric(q)
    d = check_dim_vector(q, d)
    partition = _partition_checked(q, d, partition)
    dexp = delta.expand(d)
    verdicts = []
    for ordering in _orderings(partition.parts):
        k = len(ordering)
        base = tuple(3 * (k - j) for j in range(k))

        def form(values):
            lam = _levels_to_cocharacter(ordering, d, values)
            return Fraction(window_width(q, d, lam), 2) + pairing(lam, dexp)

        f0 = form(base)
        ok = True
        for j in range(k):
            bumped = tuple(b + 1 if i == j else b for i, b in enumerate(base))
            if (form(bumped) - f0).denominator != 1:
                ok = False
                break
        verdicts.append(ok)
    if any(verdicts) and not all(verdicts):
        log.warning("orderings disagree for partition %s of %s", partition, tuple(d))
    return 1 if all(verdicts) else 0


def partition_indicator_blockwise(q: Quiver, d, partition, delta: CentralWeight) -> int:
    """Independent admissibility route through blockwise half-sums.

    For each ordering, the representation weights and roots whose pairing
    with the cone is positive are accumulated (with signs -1/2 and +1/2) into
    a single lattice vector; the ordering passes when the coordinate sum of
    that vector over each ordered part, plus the part's central pairing, is
    an integer.  Shares only the weight multisets with the primary route.
    """
    require_symmetric(q)
    d = check_dim_vector(q, d)
    partition = _partition_checked(q, d, partition)
    n = total_dim(d)
    rep, adj = weight_multisets(q, d)
    blocks = slot_blocks(d)
    for ordering in _orderings(partition.parts):
        level_of = [0] * n
        slot = {i: blocks[i][0] for i in range(len(d))}
        for j, part in enumerate(ordering):
            for i, m in enumerate(part):
                for _ in range(m):
                    level_of[slot[i]] = j
                    slot[i] += 1
        theta2 = [0] * n  # twice the accumulated half-sum vector
        for (p, r), m in rep.entries:
            if level_of[p] < level_of[r]:
                theta2[p] -= m
                theta2[r] += m
        for (p, r), m in adj.entries:
            if level_of[p] < level_of[r]:
                theta2[p] += m
                theta2[r] -= m
        for j, part in enumerate(ordering):
            coord = sum(theta2[p] for p in range(n) if level_of[p] == j)
            central = sum((Fraction(m) * val for m, val in zip(part, delta.values)),
                          Fraction(0))
            if (Fraction(coord, 2) + central).denominator != 1:
                return 0
    return 1


def admissible_partitions(q: Quiver, d, delta: CentralWeight, *,
                          force: bool = False) -> tuple[VectorPartition, ...]:
    """All partitions of d passing the indicator, canonical order."""
    require_symmetric(q)
    d = check_dim_vector(q, d)
    return tuple(a for a in enumerate_vector_partitions(d, force=force)
                 if partition_indicator(q, d, a, delta))


def admissible_partitions_closed_form(q: Quiver, d, v: int) -> tuple[VectorPartition, ...]:
    """Closed forms for the two families that admit one.

    Even arrow counts between distinct vertices with an odd loop count at
    every vertex: a part passes iff v * (its total rank) / (total rank) is an
    integer.  One vertex with a positive even loop count: a part of size e at
    position i of an ordering passes iff e*(sum before - sum after)/2 + v*e/d
    is an integer; that test is ordering-independent modulo integers, so one
    ordering is evaluated.  Anything else is refused.
    """
    require_symmetric(q)
    d = check_dim_vector(q, d)
    n = total_dim(d)
    if n == 0 or n > PARTITION_CUTOFF:
        raise InputSchemaError(f"total rank {n} outside the supported range")
    diag_odd = all(q.arrows[i][i] % 2 == 1 for i in range(q.num_vertices))
    off_even = all(q.arrows[i][j] % 2 == 0
                   for i in range(q.num_vertices)
                   for j in range(q.num_vertices) if i != j)
    one_vertex_even = (q.num_vertices == 1 and q.arrows[0][0] >= 2
                       and q.arrows[0][0] % 2 == 0)
    if diag_odd and off_even:
        out = []
        for a in enumerate_vector_partitions(d):
            if all(Fraction(v * total_dim(p), n).denominator == 1 for p in a.parts):
                out.append(a)
        return tuple(out)
    if one_vertex_even:
        out = []
        for a in enumerate_vector_partitions(d):
            sizes = [p[0] for p in a.parts]
            before = 0
            ok = True
            for i, e in enumerate(sizes):
                after = n - before - e
                val = Fraction(e * (before - after), 2) + Fraction(v * e, n)
                if val.denominator != 1:
                    ok = False
                    break
                before += e
            if ok:
                out.append(a)
        return tuple(out)
    raise InputSchemaError(
        "closed form needs either odd loop counts with even cross arrows, "
        "or a single vertex with a positive even loop count")


def find_central_weight(q: Quiver, d, *, max_v: int | None = None,
                        max_num: int = 2, max_den: int = 3) -> CentralWeight | None:
    """Search for a central weight whose only admissible partition is {d}.

    Tries the evenly spread weights with parameter 0 and 1 first, then the
    remaining residues, then spread weights corrected by a sum-zero central
    weight with bounded numerators and denominators.  Returns the first hit
    in that deterministic order, or None.
    """
    require_symmetric(q)
    d = check_dim_vector(q, d)
    n = total_dim(d)
    if n == 0:
        raise InputSchemaError("dimension vector is zero")
    target = (VectorPartition((tuple(d),)),)
    if max_v is None:
        max_v = n - 1
    vs = [v for v in (0, 1) if v <= max_v] + list(range(2, max_v + 1))

    def works(delta):
        return admissible_partitions(q, d, delta) == target

    for v in vs:
        delta = CentralWeight.spread(d, v)
        if works(delta):
            return delta
    for v in vs:
        base = CentralWeight.spread(d, v)
        for den in range(1, max_den + 1):
            for nums in product(range(-max_num, max_num + 1), repeat=len(d)):
                if not any(nums):
                    continue
                if sum(m * num for m, num in zip(d, nums)) != 0:
                    continue  # keep the diagonal pairing an integer
                delta = base + CentralWeight(tuple(Fraction(num, den) for num in nums))
                if works(delta):
                    return delta
    return None
