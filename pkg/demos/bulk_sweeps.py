"""
Million-partition sweeps with the numpy helpers
===============================================

The scalar routines are the reference; the array versions exist so that
exhaustive verification over large height ranges stays interactive.
"""

import time

from triparts.bulk import check_box_bijection, cycle_length_multiset, step_successors
from triparts.congruence import is_divisible
from triparts.cranks import step_f

t0 = time.time()
checked = sum(check_box_bijection(n) for n in range(501))
print("box decomposition round-trips verified for %d partitions in %.2fs"
      % (checked, time.time() - t0))

# cycle structure of the stepping permutation over a whole height range
m = 5
t0 = time.time()
counts = {}
for n in range(3, 301):
    if not is_divisible(n, m):
        continue
    size, succ = step_successors(n, m, lambda lam: step_f(lam, m))
    for length in cycle_length_multiset(succ):
        assert length % m == 0
        counts[length] = counts.get(length, 0) + 1
print("cycle lengths seen for m=%d, n <= 300 (all multiples of %d):" % (m, m))
for length in sorted(counts):
    print("  length %4d: %3d cycle(s)" % (length, counts[length]))
print("swept in %.2fs" % (time.time() - t0))
