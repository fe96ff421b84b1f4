"""
Triangles into rectangles: cranks by arrangement
================================================

Box-decomposing P(n,3) leaves one quotient triangle per remainder.  For
heights on the progression n = 6mk' + (2m-2) those triangles pack into
an m(3k'+1) x (mk' + (m-2)/3) rectangle; reading x mod m off the packed
position is then automatically a uniform statistic.
"""

from triparts import (
    arrangement_2m_minus_2,
    box_compose,
    build_arrangement,
    c_ls,
    ehrhart_crank,
    ehrhart_crank_closed_form,
    rectangle_cycle_step,
)
from triparts.cranks import case_labels

m = 5
plan = arrangement_2m_minus_2(m)

for kprime in range(3):
    rep = plan.verify_cover(kprime)
    w, h = plan.dims(kprime)
    print("k'=%d  n=%3d  rectangle %2dx%d  cover %s (%s cells)"
          % (kprime, plan.n_for(kprime), w, h, "ok" if rep.ok else "BAD", rep.cells))

# the k'=1 rectangle: the crank digit per cell is just x mod m, while the
# c_ls values drop by 3 from column to column
print()
cells = plan.cells(1)
w, h = plan.dims(1)
for y in range(h - 1, -1, -1):
    crank_row = "".join(str(ehrhart_crank(plan, box_compose(*cells[(x, y)])))
                        for x in range(w))
    cls_row = "".join(str(c_ls(box_compose(*cells[(x, y)]), m)) for x in range(w))
    print("  %s   c_ls %s" % (crank_row, cls_row))

# walking right along a row cycles through all m crank values and drops
# c_ls by 3 each time
lam = (6, 1, 1)
walk = [lam]
for _ in range(m):
    walk.append(rectangle_cycle_step(plan, walk[-1]))
print("\nwalk:", " -> ".join(str(x) for x in walk))
print("c_ls along the walk:", [c_ls(x, m) for x in walk])

# the composed crank also has a closed form straight from the partition
for lam in [(6, 1, 1), (4, 2, 2), (13, 4, 3), (25, 7, 6)]:
    a = ehrhart_crank(plan, lam)
    b = ehrhart_crank_closed_form(lam, m)
    print("crank%s = %d (closed form %d)" % (lam, a, b))
    assert a == b

# all nine height progressions have an arrangement; dimensions at k'=1:
print()
for label in case_labels():
    p = build_arrangement(label, m)
    print("case %-8s n=%3d  rectangle %2dx%d" % (label, p.n_for(1), *p.dims(1)))
