"""
Box decomposition of three-part partitions
==========================================

Every partition (l1, l2, l3) of n into three parts splits uniquely as
mu + V3 tau where mu is one of 36 fixed remainder points and tau is a
non-negative integer triple.  This script walks through the pieces.
"""

from triparts import (
    GENERATORS,
    box_compose,
    box_decompose,
    fundamental_points,
    h_star,
    tile_partition_triangle,
)

# The three generators all live at height 6 = lcm(1, 2, 3):
print("generators:", GENERATORS)

# Remainders grouped by height.  The counts per height form the census
# vector used by the binomial-basis counting formula.
groups = fundamental_points()
total = 0
for height in sorted(groups):
    pts = groups[height]
    total += len(pts)
    print("height %2d: %d point(s)  %s" % (height, len(pts), list(pts)))
print("total remainders:", total)
print("census vector:", h_star())

# Decompose a few partitions by hand.
for lam in [(13, 4, 3), (11, 5, 2), (6, 1, 1), (40, 17, 9)]:
    mu, tau = box_decompose(lam)
    assert box_compose(mu, tau) == lam
    print("%s = %s + V3 %s" % (lam, mu, tau))

# For a fixed n the decomposition groups P(n,3) into translated triangles,
# one per remainder with matching height class.
n = 20
tiles = tile_partition_triangle(n)
print("\nP(%d,3) splits into %d triangle tiles:" % (n, len(tiles)))
for mu in sorted(tiles):
    print("  mu=%s carries %d partitions" % (mu, len(tiles[mu])))
print("sum of tile sizes:", sum(len(v) for v in tiles.values()))
