"""Window lattice counts across the standard small families.

The count attached to (quiver, d, v) is the number of dominant integer
weights landing in the shifted weight zonotope.  Two families have closed
answers worth eyeballing: the two-vertex toric quivers alternate between
2g+1 and 2g+2 with the parity of v, and a single loop collapses to a
divisibility test.
"""

from math import gcd

from quasibps import Quiver, loop_quiver, magic_dimension_v


def toric(g):
    return Quiver(("0", "1"), ((1, 2 * g + 1), (2 * g + 1, 1)))


print("toric family, d = (1,1): rows g, columns v")
header = "g\\v " + "".join(f"{v:>5}" for v in range(-2, 4))
print(header)
for g in range(4):
    row = [magic_dimension_v(toric(g), (1, 1), v) for v in range(-2, 4)]
    print(f"{g:>3} " + "".join(f"{c:>5}" for c in row))
print("even v gives 2g+1, odd v gives 2g+2\n")

print("2e+1 loops at one vertex, d = 2, v = 1: the count is e")
for e in range(1, 5):
    print(f"  e = {e}: {magic_dimension_v(loop_quiver(2 * e + 1), (2,), 1)}")
print()

print("single loop: count is 1 exactly when d divides v")
for d in (2, 3, 4):
    hits = [v for v in range(0, 13) if magic_dimension_v(loop_quiver(1), (d,), v)]
    print(f"  d = {d}: nonzero at v = {hits}")
print()

print("the count only depends on v through gcd(v, d):")
q = loop_quiver(3)
for v in range(7):
    print(f"  d = 4, v = {v}: {magic_dimension_v(q, (4,), v)}   (gcd = {gcd(v, 4)})")
