"""Assembling BPS dimensions from block tables over admissible partitions.

Each admissible partition contributes the product over its distinct parts of
the symmetric power (in the multiplicity) of the part's block dimension.
With the tripled one-loop table every block is a line, so the assembly at
v = 0 just counts partitions of n; at coprime v only the full partition
survives and the total is 1.
"""

from quasibps import (
    CentralWeight,
    bps_assembly_dim,
    builtin_block_table,
    ktheory_dim_from_bps,
    loop_quiver,
    partition_count,
    triple,
)

q = triple(loop_quiver(1))
table = builtin_block_table("tripled-one-loop")

print("tripled one-loop quiver, v = 0: assembly vs partition numbers")
for n in range(1, 9):
    delta = CentralWeight.spread((n,), 0)
    total = bps_assembly_dim(q, (n,), delta, table)
    print(f"  n = {n}: assembly {total:>3}   p(n) {partition_count(n):>3}")
print()

print("coprime weights collapse the assembly to 1:")
for n, v in [(4, 1), (4, 3), (5, 2), (6, 5)]:
    delta = CentralWeight.spread((n,), v)
    print(f"  n = {n}, v = {v}: {bps_assembly_dim(q, (n,), delta, table)}")
print()

n = 6
total = bps_assembly_dim(q, (n,), CentralWeight.spread((n,), 0), table)
print(f"per-parity K-theory dimensions at n = {n} (assembly {total}):")
print("  matrix factorizations:", ktheory_dim_from_bps(total, "mf"))
print("  preprojective:        ", ktheory_dim_from_bps(total, "preprojective"))
