"""
When does a prime divide p(n,3)?
================================

For primes m = 5 (mod 6) and m' = 1 (mod 6) the divisible heights form
finitely many residue classes mod 6m.  The two families look different:
the second one needs a square root of -3 mod m'.
"""

from triparts import (
    count_bruteforce,
    residues_neg,
    residues_pos,
    sqrt_minus3,
    verify_characterization,
)
from triparts.congruence import non_witnessed_residues

for m in (5, 11, 17):
    ch = residues_neg(m)
    print("m=%2d  period %3d  residues %s" % (m, ch.period, sorted(ch.residues)))

for mp in (7, 13, 19):
    ch = residues_pos(mp)
    s, t = sqrt_minus3(mp)
    print("m'=%2d period %3d  sqrt(-3) = {%d, %d}  residues %s"
          % (mp, ch.period, s, t, sorted(ch.residues)))

# check the characterizations against direct counting
for m in (5, 7, 11, 13):
    report = verify_characterization(m, 60 * m)
    print("m=%2d brute-force check up to %4d:" % (m, 60 * m),
          "ok" if report.ok else "FAILED at %s" % report.first_mismatch)

# Divisibility by 7 holds on eleven classes mod 42, but on two of them
# (9 and 33) the largest-minus-smallest statistic fails to split the
# partitions evenly; those classes have no known crank.
print("\nnon-witnessed classes for 7:", sorted(non_witnessed_residues(7)))
print("p(9,3) =", count_bruteforce(9), "(divisible by 7, yet no even split)")
