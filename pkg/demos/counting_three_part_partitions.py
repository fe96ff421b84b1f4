"""
Counting p(n,3) four different ways
===================================
"""

from triparts import (
    count_bruteforce,
    evaluate,
    p3_binomial,
    p3_circulator,
    p3_monomial,
    p3_nearest,
)

# p(n,3) is the nearest integer to n^2/12 for n >= 3.  Three other exact
# routes give the same number: a period-6 monomial table, the binomial
# basis weighted by the remainder census, and a circulator expression
# over exact rationals.

print(" n   brute  nearest  monomial  binomial  circulator")
for n in range(3, 25):
    row = (count_bruteforce(n), p3_nearest(n), p3_monomial(n),
           p3_binomial(n), p3_circulator(n))
    assert len(set(row)) == 1
    print("%3d %6d %8d %9d %9d %11d" % ((n,) + row))

# the same through the tagged front end
r = evaluate(2024, "circulator")
print("\np(%d,3) = %d by the %s route" % (r.n, r.value, r.method))

# agreement holds far beyond the table above
for n in range(0, 50000):
    assert p3_nearest(n) == p3_monomial(n) == p3_binomial(n) == p3_circulator(n)
print("all four evaluators agree for n < 50000")
