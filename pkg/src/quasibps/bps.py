"""Score-sequence counts, block dimension tables, and BPS assembly.

The score-sequence count is the independent route to the one-vertex window
counts: for a quiver with 2g+1 loops, rank d and weight v it enumerates the
integer tuples (c_1, ..., c_d) with

* c_i - c_{i-1} + 2g >= 0 for 2 <= i <= d,
* sum of the last k entries at most v*k/d for k = 1..d,
* total sum exactly v.

Those constraints confine every entry to an explicit box, so a depth-first
scan with partial-sum pruning is exact and fast.  The assembly side combines
a table of per-part block dimensions over the admissible partitions of a
central weight, multiplying symmetric-power dimensions over repeated parts.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputSchemaError, MissingBlockError
from .partitions import admissible_partitions
from .quiver import DimVector, Quiver, check_dim_vector
from .weights import CentralWeight


def score_sequence_count(g: int, d: int, v: int) -> int:
    """Number of score sequences for the 2g+1 loop quiver at rank d, weight v."""
    if not isinstance(g, int) or g < 0:
        raise InputSchemaError(f"loop parameter g must be a nonnegative integer, got {g!r}")
    if not isinstance(d, int) or d < 1:
        raise InputSchemaError(f"rank must be a positive integer, got {d!r}")
    lo = math.ceil(Fraction(v, d)) - 2 * g * (d - 1)
    hi = math.floor(Fraction(v, d)) + 2 * g * (d - 1)
    count = 0

    # scan in reverse (last entry first) so the suffix-sum constraints become
    # prefix constraints: with b_j = c_{d+1-j}, need b_{j+1} <= b_j + 2g and
    # d * (b_1 + ... + b_k) <= v * k.
    def walk(j, prev, acc):
        nonlocal count
        if j == d:
            if acc == v:
                count += 1
            return
        top = hi if j == 0 else min(hi, prev + 2 * g)
        rest = d - j - 1
        for b in range(lo, top + 1):
            acc2 = acc + b
            if d * acc2 > v * (j + 1):
                break
            ceiling = acc2 + sum(min(hi, b + 2 * g * (t + 1)) for t in range(rest))
            if ceiling < v:
                continue
            walk(j + 1, b, acc2)

    walk(0, 0, 0)
    return count


def partition_count(n: int) -> int:
    """Number of integer partitions of n (1 for n = 0)."""
    if not isinstance(n, int) or n < 0:
        raise InputSchemaError(f"partition count needs a nonnegative integer, got {n!r}")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            table[m] += table[m - part]
    return table[n]


def sym_power_dim(n: int, m: int) -> int:
    """Dimension of the m-th symmetric power of an n-dimensional space."""
    if n < 0 or m < 0:
        raise InputSchemaError(f"sym_power_dim needs nonnegative arguments, got ({n}, {m})")
    if n == 0:
        return 1 if m == 0 else 0
    return math.comb(n + m - 1, m)


@dataclass(frozen=True)
class BlockDimTable:
    """Per-part block dimensions feeding the assembly.

    ``dims`` maps dimension vectors to total dimensions; ``default_dim``, when
    set, covers every part without an explicit entry (the tables for loop
    quivers are uniform).  ``monodromy`` is "trivial" or "full-input"; with
    full input the invariant dimension must be supplied alongside, since no
    equivariant computation is attempted here.
    """

    dims: tuple[tuple[DimVector, int], ...]
    monodromy: str = "trivial"
    default_dim: int | None = None
    invariant_dim: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "dims",
            tuple(sorted((tuple(p), int(v)) for p, v in self.dims)))
        if self.monodromy not in ("trivial", "full-input"):
            raise InputSchemaError(f"unknown monodromy flag {self.monodromy!r}")

    def dim_for(self, part: DimVector) -> int:
        for p, val in self.dims:
            if p == tuple(part):
                return val
        if self.default_dim is not None:
            return self.default_dim
        raise MissingBlockError(f"no block dimension for part {tuple(part)}")


def builtin_block_table(name: str) -> BlockDimTable:
    """Tables shipped for the standard small examples.

    ``tripled-one-loop``: the tripled single-loop quiver; every block is one
    dimensional and the monodromy is trivial.  ``one-loop``: the single loop
    with zero potential; only rank one carries a block.  ``toric-potential``:
    the two-vertex quiver from the toric family with its potential; the
    diagonal block vanishes and the two unit blocks are one dimensional.
    """
    tables = {
        "tripled-one-loop": BlockDimTable((), default_dim=1),
        "one-loop": BlockDimTable((((1,), 1),), default_dim=0),
        "toric-potential": BlockDimTable((((1, 0), 1), ((0, 1), 1), ((1, 1), 0))),
    }
    if name not in tables:
        raise InputSchemaError(
            f"unknown builtin block table {name!r}; choices: {', '.join(sorted(tables))}")
    return tables[name]


def block_table_from_dict(obj) -> BlockDimTable:
    if not isinstance(obj, dict) or "blocks" not in obj:
        raise InputSchemaError('block table JSON must be an object with a "blocks" list')
    rows = obj["blocks"]
    if not isinstance(rows, list):
        raise InputSchemaError('"blocks" must be a list')
    dims = []
    for k, row in enumerate(rows):
        if not isinstance(row, dict) or "e" not in row or "dim" not in row:
            raise InputSchemaError(f'blocks[{k}] must have keys "e" and "dim"')
        part = row["e"]
        if (not isinstance(part, list) or not part
                or any(not isinstance(c, int) or c < 0 for c in part)):
            raise InputSchemaError(f'blocks[{k}].e must be a nonempty list of nonnegative integers')
        if not isinstance(row["dim"], int) or row["dim"] < 0:
            raise InputSchemaError(f'blocks[{k}].dim must be a nonnegative integer')
        dims.append((tuple(part), row["dim"]))
    return BlockDimTable(
        tuple(dims),
        monodromy=obj.get("monodromy", "trivial"),
        default_dim=obj.get("default_dim"),
        invariant_dim=obj.get("invariant_dim"),
    )


def block_table_to_dict(table: BlockDimTable) -> dict:
    obj: dict = {
        "blocks": [{"e": list(p), "dim": v} for p, v in table.dims],
        "monodromy": table.monodromy,
    }
    if table.default_dim is not None:
        obj["default_dim"] = table.default_dim
    if table.invariant_dim is not None:
        obj["invariant_dim"] = table.invariant_dim
    return obj


def load_block_table(path) -> BlockDimTable:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputSchemaError(f"cannot read block table {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputSchemaError(f"block table {path} is not valid JSON: {exc}")
    return block_table_from_dict(obj)


def bps_assembly_dim(q: Quiver, d, delta: CentralWeight, table: BlockDimTable, *,
                     force: bool = False) -> int:
    """Total assembled dimension over the admissible partitions.

    Each admissible partition contributes the product, over its distinct
    parts, of the symmetric-power dimension of the part's block in the part's
    multiplicity.  Homological shifts move gradings around but never change
    this total, so they are not tracked.
    """
    d = check_dim_vector(q, d)
    total = 0
    for a in admissible_partitions(q, d, delta, force=force):
        prod = 1
        for part, mult in sorted(a.multiplicities().items()):
            prod *= sym_power_dim(table.dim_for(part), mult)
        total += prod
    return total


def ktheory_dim_from_bps(assembly: int, flavor: str = "mf", *,
                         monodromy: str = "trivial",
                         invariant_dim: int | None = None) -> tuple[int, int]:
    """Per-parity topological K-theory dimensions from an assembled total.

    Matrix-factorization flavor ("mf"): both parities carry the full
    dimension.  Preprojective flavor: everything sits in parity zero.  With
    nontrivial monodromy the caller must pass the invariant dimension, which
    then replaces the assembly.
    """
    if flavor not in ("mf", "preprojective"):
        raise InputSchemaError(f"unknown flavor {flavor!r}; choices: mf, preprojective")
    if monodromy == "trivial":
        effective = assembly
    elif monodromy == "full-input":
        if invariant_dim is None:
            raise InputSchemaError(
                "nontrivial monodromy needs invariant_dim supplied with the table")
        effective = invariant_dim
    else:
        raise InputSchemaError(f"unknown monodromy flag {monodromy!r}")
    if flavor == "mf":
        return (effective, effective)
    return (effective, 0)
