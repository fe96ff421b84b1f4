"""Crank statistics for three-part partitions.

Two independent crank constructions witness the divisibility of p(n,3) by
primes m with m % 6 == 5:

* c_ls: largest part minus smallest part, taken mod m.  Realized as a
  permutation of P(n,3) (step_f) whose every step raises c_ls by one, so
  its orbits split P(n,3) into cycles of length divisible by m.

* Rectangle cranks: box-decompose each partition, place the per-remainder
  triangles of box quotients into a lattice rectangle through affine maps,
  and read a rectangle coordinate mod m.  Uniformity is then immediate
  because m divides the rectangle's width (or height).
"""

from collections import namedtuple

from .congruence import is_prime, residues_neg
from .ehrhart import (
    box_compose,
    box_decompose,
    fundamental_points,
    triangle,
    v3_apply,
)
from .partitions import column_multiplicities, enumerate_partitions

# ---------------------------------------------------------------------------
# c_ls and histograms

CrankHistogram = namedtuple("CrankHistogram", ["modulus", "counts"])


def c_ls_raw(lam):
    """Largest part minus smallest part, unreduced."""
    return lam[0] - lam[2]


def c_ls(lam, m):
    """Largest part minus smallest part, mod m."""
    return (lam[0] - lam[2]) % m


def histogram(n, m, crank):
    """Class sizes of a crank statistic over P(n,3).

    ``crank`` is called as crank(lam, m); c_ls can be passed directly.
    """
    counts = [0] * m
    for lam in enumerate_partitions(n):
        counts[crank(lam, m)] += 1
    return CrankHistogram(m, tuple(counts))


def is_uniform(hist):
    """True when all classes have equal size (vacuously for no classes)."""
    return len(set(hist.counts)) <= 1


def c_ls_histogram(n, m):
    """The c_ls histogram of P(n,3) without enumerating partitions.

    For a fixed difference d = l1 - l3 the partitions of n are indexed by
    the smallest part t in max(1, ceil((n-2d)/3)) .. floor((n-d)/3), so
    each difference contributes an interval length to its class d mod m.
    Cross-checked against histogram(n, m, c_ls) in the test suite.
    """
    counts = [0] * m
    for d in range(0, max(0, n - 2)):
        lo = max(1, (n - 2 * d + 2) // 3)
        hi = (n - d) // 3
        if hi >= lo:
            counts[d % m] += hi - lo + 1
    return CrankHistogram(m, tuple(counts))


# ---------------------------------------------------------------------------
# Vertex values and step deltas of the quotient triangles

# Moving within a triangle of box quotients: differences of unit vectors,
# named by the corner the motion leaves and the corner it heads toward
# (L, R, T list the corners (s,0,0), (0,s,0), (0,0,s)).
DIRECTIONS = {
    "L->R": (-1, 1, 0),
    "L->T": (-1, 0, 1),
    "R->T": (0, -1, 1),
}


def vertex_crank_values(mu, s, m):
    """c_ls at the three corners of the size-s triangle with remainder mu.

    Returns (c at L, c at R, c at T) for quotients (s,0,0), (0,s,0),
    (0,0,s).
    """
    corners = ((s, 0, 0), (0, s, 0), (0, 0, s))
    return tuple(c_ls(box_compose(mu, v), m) for v in corners)


def step_deltas():
    """Change of the raw c_ls under each unit motion of the box quotient.

    The deltas are independent of remainder and position: moving tau by d
    moves the partition by V3 d, and c_ls shifts by the first-minus-last
    coordinate of that vector.
    """
    out = {}
    for name, d in DIRECTIONS.items():
        v = v3_apply(d)
        out[name] = v[0] - v[2]
    return out


# ---------------------------------------------------------------------------
# Rectangle arrangements

class AffineMap2:
    """Affine map Z^3 -> Z^2: tau -> matrix tau + offset.

    Restricted to any fixed triangle of quotients the map must be
    injective; this is sanity-checked on construction against a sample
    triangle.
    """

    def __init__(self, matrix, offset):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.offset = (int(offset[0]), int(offset[1]))
        if len(self.matrix) != 2 or any(len(row) != 3 for row in self.matrix):
            raise ValueError("matrix must be 2x3")
        sample = triangle(3)
        if len({self.apply(t) for t in sample}) != len(sample):
            raise ValueError("map %r is not injective on a triangle" % (self,))

    def apply(self, tau):
        (a, b, c), (d, e, f) = self.matrix
        ox, oy = self.offset
        return (a * tau[0] + b * tau[1] + c * tau[2] + ox,
                d * tau[0] + e * tau[1] + f * tau[2] + oy)

    def __repr__(self):
        return "AffineMap2(%r, %r)" % (self.matrix, self.offset)

    def __eq__(self, other):
        return (isinstance(other, AffineMap2)
                and self.matrix == other.matrix and self.offset == other.offset)


CoverReport = namedtuple("CoverReport", ["ok", "cells", "expected", "detail"])


class RectanglePlan:
    """A triangle-to-rectangle arrangement for one height progression.

    Heights run over n = 6 m k' + r_value.  For each k' the plan places
    one triangle of box quotients per remainder mu into the lattice
    rectangle of size ell1(k') x ell2(k'), disjointly and exactly.  The
    crank of a partition is eta(x, y) = (alpha x + beta y + gamma) mod m
    at its cell; cycling adds the unit step delta with wraparound.

    placements is a list of (mu, size_offset, AffineMap2): the triangle
    placed for mu has size k - size_offset where k = m k' + k_offset.
    Coordinates along the step axis are taken mod the rectangle dimension
    (one placement family of the dedicated 2m-2 arrangement wraps); the
    dimension is divisible by m, so cranks never depend on the wrap.
    """

    def __init__(self, r_label, r_value, m, ell1, ell2, k_offset,
                 placements, eta, delta):
        if not is_prime(m) or m % 6 != 5:
            raise ValueError("need a prime congruent to 5 mod 6, got %r" % (m,))
        if (m - 2) % 3:
            raise AssertionError("(m-2)/3 must be integral")
        self.r_label = r_label
        self.r_value = int(r_value)
        self.m = m
        self.ell1 = (int(ell1[0]), int(ell1[1]))
        self.ell2 = (int(ell2[0]), int(ell2[1]))
        self.k_offset = int(k_offset)
        self.placements = list(placements)
        self.eta = (int(eta[0]), int(eta[1]), int(eta[2]))
        self.delta = (int(delta[0]), int(delta[1]))
        if self.delta not in ((1, 0), (0, 1)):
            raise ValueError("delta must be a unit vector")
        side = self.ell1 if self.delta == (1, 0) else self.ell2
        if side[0] % m or side[1] % m:
            raise AssertionError(
                "the step-axis dimension must be divisible by m: %r" % (side,))
        self._by_mu = {}
        for mu, size_offset, mp in self.placements:
            if mu in self._by_mu:
                raise ValueError("duplicate placement for remainder %r" % (mu,))
            self._by_mu[mu] = (size_offset, mp)
        self._cells = {}

    def __repr__(self):
        return "RectanglePlan(%s, m=%d)" % (self.r_label, self.m)

    def k_for(self, kprime):
        return self.m * kprime + self.k_offset

    def n_for(self, kprime):
        return 6 * self.m * kprime + self.r_value

    def kprime_for(self, n):
        d, rem = divmod(n - self.r_value, 6 * self.m)
        if rem:
            raise ValueError("height %d is not on the %s progression for m=%d"
                             % (n, self.r_label, self.m))
        return d

    def dims(self, kprime):
        w = self.ell1[0] * kprime + self.ell1[1]
        h = self.ell2[0] * kprime + self.ell2[1]
        return (max(0, w), max(0, h))

    def _reduce(self, xy, dims):
        x, y = xy
        if self.delta == (1, 0):
            if dims[0] > 0:
                x %= dims[0]
        else:
            if dims[1] > 0:
                y %= dims[1]
        return (x, y)

    def cells(self, kprime):
        """Mapping (x, y) -> (mu, tau) for every cell of the rectangle.

        Raises ValueError if two placements collide or a cell falls
        outside the rectangle; memoized per k'.
        """
        if kprime in self._cells:
            return self._cells[kprime]
        dims = self.dims(kprime)
        k = self.k_for(kprime)
        out = {}
        for mu, size_offset, mp in self.placements:
            for tau in triangle(k - size_offset):
                cell = self._reduce(mp.apply(tau), dims)
                if not (0 <= cell[0] < dims[0] and 0 <= cell[1] < dims[1]):
                    raise ValueError("cell %r outside %dx%d rectangle (mu=%r tau=%r)"
                                     % (cell, dims[0], dims[1], mu, tau))
                if cell in out:
                    raise ValueError("cell %r covered twice (mu=%r tau=%r and mu=%r tau=%r)"
                                     % (cell, out[cell][0], out[cell][1], mu, tau))
                out[cell] = (mu, tau)
        self._cells[kprime] = out
        return out

    def verify_cover(self, kprime):
        """Exhaustive disjoint-cover check for one k'."""
        dims = self.dims(kprime)
        expected = dims[0] * dims[1]
        try:
            got = len(self.cells(kprime))
        except ValueError as exc:
            return CoverReport(False, None, expected, str(exc))
        if got != expected:
            return CoverReport(False, got, expected,
                              "covered %d of %d cells" % (got, expected))
        return CoverReport(True, got, expected, "ok")

    def locate(self, lam):
        """Rectangle coordinates of a partition, unreduced along the
        step axis.  Raises ValueError if the box remainder of lam has no
        placement in this plan."""
        mu, tau = box_decompose(lam)
        try:
            _, mp = self._by_mu[mu]
        except KeyError:
            raise ValueError("remainder %r of %r has no placement in plan %s"
                             % (mu, lam, self.r_label))
        return mp.apply(tau)


def ehrhart_crank(plan, lam):
    """Crank of lam under a rectangle plan: eta at its cell, mod m.

    The step-axis coordinate only matters mod m, and the rectangle
    dimension along that axis is a multiple of m, so no wraparound
    reduction is needed here.
    """
    x, y = plan.locate(lam)
    a, b, g = plan.eta
    return (a * x + b * y + g) % plan.m


def plan_crank(plan):
    """Adapter giving a plan's crank the (lam, m) calling convention."""
    def crank(lam, m=None):
        return ehrhart_crank(plan, lam)
    return crank


def arrangement_2m_minus_2(m):
    """The dedicated arrangement for heights n = 6mk' + (2m-2).

    Remainders of height 8 ride triangles of size k-1, the height-14
    remainder rides size k-2, with k = mk' + (m-2)/3.  The six affine
    maps, written with s = tau1+tau2+tau3:

        (6,1,1) -> (s+tau3,      tau1)      (4,2,2) -> (2s+1-tau1, s-tau3)
        (5,2,1) -> (2s+2+tau3,   tau1)      (3,3,2) -> (3s+3-tau1, s-tau3)
        (4,3,1) -> (3s+4+tau3,   tau1)      (8,4,2) -> (tau2+tau3, tau1+tau2+1)

    x is taken mod ell1 = m(3k'+1); only the (4,3,1) family wraps.  The
    crank is x mod m and decreases by 3 along each row.
    """
    if not is_prime(m) or m % 6 != 5:
        raise ValueError("need a prime congruent to 5 mod 6, got %r" % (m,))
    c = (m - 2) // 3
    placements = [
        ((6, 1, 1), 1, AffineMap2(((1, 1, 2), (1, 0, 0)), (0, 0))),
        ((4, 2, 2), 1, AffineMap2(((1, 2, 2), (1, 1, 0)), (1, 0))),
        ((5, 2, 1), 1, AffineMap2(((2, 2, 3), (1, 0, 0)), (2, 0))),
        ((3, 3, 2), 1, AffineMap2(((2, 3, 3), (1, 1, 0)), (3, 0))),
        ((4, 3, 1), 1, AffineMap2(((3, 3, 4), (1, 0, 0)), (4, 0))),
        ((8, 4, 2), 2, AffineMap2(((0, 1, 1), (1, 1, 0)), (0, 1))),
    ]
    return RectanglePlan("2m-2", 2 * m - 2, m,
                         ell1=(3 * m, m), ell2=(m, c), k_offset=c,
                         placements=placements, eta=(1, 0, 0), delta=(1, 0))


def ehrhart_crank_closed_form(lam, m):
    """Closed form of the 2m-2 arrangement crank, no plan object needed.

    Works directly from the column multiplicities bar = (l1-l2, l2-l3, l3)
    via their floor splits t_i and residues, K = t1+t2+t3:

        bar3 odd:                     x = (r2+1) K + 2 r2 + t3
        bar3 even, residue (4,2):     x = K - t1
        bar3 even otherwise:          x = (r2+2) K + 2 r2 + 1 - t1

    and the crank is x mod m.  Only heights with n % 6 == 2 place their
    remainder in the arrangement; others are rejected.
    """
    if sum(lam) % 6 != 2:
        raise ValueError("height %d is not 2 mod 6; closed form does not apply"
                         % sum(lam))
    b1, b2, b3 = column_multiplicities(lam)
    t1, r1 = divmod(b1, 6)
    t2, r2 = divmod(b2, 3)
    t3 = (b3 + 1) // 2 - 1
    big_k = t1 + t2 + t3
    if b3 % 2:
        x = (r2 + 1) * big_k + 2 * r2 + t3
    elif (r1, r2) == (4, 2):
        x = big_k - t1
    else:
        x = (r2 + 2) * big_k + 2 * r2 + 1 - t1
    return x % m


def rectangle_cycle_step(plan, lam):
    """One step of the rectangle cycling: move by the plan's delta with
    wraparound, and pull the landing cell back to a partition."""
    n = lam[0] + lam[1] + lam[2]
    kprime = plan.kprime_for(n)
    dims = plan.dims(kprime)
    if dims[0] == 0 or dims[1] == 0:
        raise ValueError("plan %s is vacuous at k'=%d" % (plan.r_label, kprime))
    x, y = plan._reduce(plan.locate(lam), dims)
    nxt = ((x + plan.delta[0]) % dims[0], (y + plan.delta[1]) % dims[1])
    mu, tau = plan.cells(kprime)[nxt]
    return box_compose(mu, tau)


# ---------------------------------------------------------------------------
# Generic arrangements for all nine height progressions

# Block primitives (widths in cells; a is the size of the leading triangle):
#   "sq"     one T_a and one T_{a-1}, covering (a+1) columns, rows 0..a
#   "hrect"  two copies of T_a, covering (a+2) columns, rows 0..a
#   "vrect"  two copies of T_a transposed, covering (a+1) columns, rows 0..a+1
# Each case lays three blocks left to right; triangle sizes are k minus the
# listed size offset.  Vertical-axis cases read the crank off y, horizontal
# ones off x; in both the step-axis dimension is m * (integer).
_CASES = {
    # label: (r_value coeffs (am, b) meaning a*m + b, k_offset coeffs,
    #         ell1 const coeffs, ell2 const coeffs, axis, blocks)
    "0": ((0, 0), (0, 0), (0, 0), (0, 0), "y", (("sq", 1), ("sq", 1), ("sq", 1))),
    "1": ((0, 1), (0, 0), (0, 1), (0, 0), "y", (("hrect", 1), ("sq", 1), ("sq", 1))),
    "2": ((0, 2), (0, 0), (0, 2), (0, 0), "y", (("sq", 1), ("hrect", 1), ("hrect", 1))),
    "-1": ((0, -1), (0, -1), (0, -1), (0, 0), "y", (("hrect", 0), ("vrect", 1), ("vrect", 1))),
    "-2": ((0, -2), (0, -1), (0, -2), (0, 0), "y", (("sq", 0), ("vrect", 1), ("vrect", 1))),
    "2m-2": ((2, -2), None, (1, 0), None, "x", (("sq", 1), ("hrect", 1), ("hrect", 1))),
    "2m+1": ((2, 1), None, (1, 0), None, "x", (("hrect", 0), ("vrect", 1), ("vrect", 1))),
    "-(2m-2)": ((-2, 2), None, (-1, 0), None, "x", (("sq", 0), ("vrect", 1), ("vrect", 1))),
    "-(2m+1)": ((-2, -1), None, (-1, 0), None, "x", (("hrect", 1), ("sq", 1), ("sq", 1))),
}


def case_labels():
    """The nine supported height-progression labels."""
    return tuple(_CASES)


def normalize_case_label(r_prime, m=None):
    """Accept either a case label string or a numeric r' for a given m."""
    if isinstance(r_prime, str):
        label = r_prime.replace(" ", "")
        if label in _CASES:
            return label
        try:
            value = int(label)
        except ValueError:
            raise ValueError("unknown case label %r" % (r_prime,))
    else:
        value = int(r_prime)
    if m is None:
        raise ValueError("numeric r'=%r needs m to resolve a label" % (r_prime,))
    for label, row in _CASES.items():
        am, b = row[0]
        if value == am * m + b:
            return label
    raise ValueError("r'=%r is not one of the nine cases for m=%d" % (r_prime, m))


def _block_maps(kind, size_offset, x0):
    """Affine maps for one block whose left edge sits at column
    x0 = (p, q), meaning p*k + q.  Returns ((size_offset, map), ...) and
    the width of the block as (coefficient, constant) in k.

    Written in tau, using that |tau| = k - i on the triangle of size
    offset i, so column offsets linear in k fold into the matrix.
    """
    p, q = x0
    i = size_offset
    if kind == "sq":
        jj = i + 1
        first = (i, AffineMap2(((p, p, p + 1), (1, 0, 0)), (p * i + q, 0)))
        second = (jj, AffineMap2(((p, p + 1, p + 1), (1, 1, 0)),
                                 ((p + 1) * jj + q - i, 1)))
        width = (1, 1 - i)
    elif kind == "hrect":
        first = (i, AffineMap2(((p, p, p + 1), (1, 0, 0)), (p * i + q, 0)))
        second = (i, AffineMap2(((p, p + 1, p + 1), (1, 1, 0)),
                                (p * i + q + 1, 0)))
        width = (1, 2 - i)
    elif kind == "vrect":
        first = (i, AffineMap2(((p + 1, p, p), (0, 0, 1)), (p * i + q, 0)))
        second = (i, AffineMap2(((p + 1, p + 1, p), (0, 1, 1)), (p * i + q, 1)))
        width = (1, 1 - i)
    else:
        raise ValueError("unknown block kind %r" % (kind,))
    return (first, second), width


def build_arrangement(r_prime, m):
    """Construct a rectangle plan for any of the nine height progressions.

    Blocks are packed left to right; remainders are drawn from the height
    classes in sorted order.  Dimensions follow the progression's case
    row; the cover is verified exhaustively by the caller or the tests
    (verify_cover).  Layouts of the dedicated 2m-2 constructor differ
    from this generic packing; both satisfy the same invariants.
    """
    label = normalize_case_label(r_prime, m)
    if not is_prime(m) or m % 6 != 5:
        raise ValueError("need a prime congruent to 5 mod 6, got %r" % (m,))
    c = (m - 2) // 3
    rv_am, rv_b = _CASES[label][0]
    r_value = rv_am * m + rv_b
    koff_coeffs = _CASES[label][1]
    axis = _CASES[label][4]
    blocks = _CASES[label][5]
    if koff_coeffs is not None:
        k_offset = koff_coeffs[0] * c + koff_coeffs[1]
    elif rv_am == 2:
        k_offset = c
    else:
        k_offset = -(c + 1)
    # rectangle dimensions, affine in k'
    if axis == "y":
        ell1 = (3 * m, _CASES[label][2][1])
        ell2 = (m, 0)
        eta = (0, 1, 0)
        delta = (0, 1)
    else:
        sgn = 1 if rv_am > 0 else -1
        ell1 = (3 * m, sgn * m)
        if label == "2m-2":
            ell2 = (m, c)
        elif label == "2m+1":
            ell2 = (m, c + 1)
        elif label == "-(2m-2)":
            ell2 = (m, -c)
        else:  # -(2m+1)
            ell2 = (m, -c - 1)
        eta = (1, 0, 0)
        delta = (1, 0)
    # remainder pools by height class: n mod 6 fixes the residue r, classes
    # r, r+6, r+12 ride triangles of sizes k, k-1, k-2
    r = r_value % 6
    groups = fundamental_points()
    pools = {i: list(groups.get(r + 6 * i, ())) for i in range(3)}
    placements = []
    x0 = (0, 0)
    for kind, size_offset in blocks:
        maps, width = _block_maps(kind, size_offset, x0)
        for cls, mp in maps:
            if not pools[cls]:
                raise ValueError("no arrangement: remainder pool for class %d "
                                 "exhausted in case %s" % (cls, label))
            placements.append((pools[cls].pop(0), cls, mp))
        x0 = (x0[0] + width[0], x0[1] + width[1])
    if any(pools.values()):
        raise ValueError("no arrangement: unplaced remainders %r in case %s"
                         % ({i: p for i, p in pools.items() if p}, label))
    return RectanglePlan(label, r_value, m, ell1=ell1, ell2=ell2,
                         k_offset=k_offset, placements=placements,
                         eta=eta, delta=delta)


# ---------------------------------------------------------------------------
# The cycling permutation on P(n,3)

CycleDecomposition = namedtuple("CycleDecomposition", ["cycles"])


def _signed_residue(n, m):
    """Signed representative r' of n mod 6m among the nine divisible
    classes 0, +-1, +-2, +-(2m-2), +-(2m+1); raises if n does not qualify."""
    residues_neg(m)  # validates m
    for r in (0, 1, 2, -1, -2, 2 * m - 2, -(2 * m - 2), 2 * m + 1, -(2 * m + 1)):
        if (n - r) % (6 * m) == 0:
            return r
    raise ValueError("height %d does not qualify for modulus %d" % (n, m))


def _border_step(n, m, t, r, big_k):
    """Image of the left-border partition (n-2t, t, t) on the right border.

    Case list by signed residue r, with K such that n = 6mK + r and
    j = (m+1)/6.  Every branch lands on (ceil(a/2), floor(a/2), l3) for
    the image's own row l3, and raises c_ls by one.
    """
    mk = m * big_k
    j = (m + 1) // 6
    half = 3 * mk  # (6mK)/2
    if r == -(2 * m + 1):
        hh = (6 * mk + r + 1) // 2
        b = mk + r // 6  # floor division toward -inf
        if 1 <= t <= b:
            return (hh - t, hh - (t + 1), 2 * t)
        if b + 1 <= t <= 2 * b:
            d = t - b
            return (hh - d, hh - d, 2 * d - 1)
    elif r == -(2 * m - 2):
        hh = (6 * mk + r) // 2
        b = mk + r // 6
        if 1 <= t <= b + 1:
            return (hh - (t - 1), hh - t, 2 * t - 1)
        if b + 2 <= t <= 2 * b + 1:
            d = t - b - 1
            return (hh - d, hh - d, 2 * d)
    elif r == -2:
        if 1 <= t <= mk - 1:
            return (half - (t + 1), half - (t + 1), 2 * t)
        if mk <= t <= mk - 1 + 2 * j:
            return (half - (t + 1 - 2 * j), half - (t + 2 - 2 * j),
                    2 * (t - 2 * j) + 1)
        if mk + 2 * j <= t <= 2 * mk - 1:
            return (half - (t + 1 - 2 * j - mk), half - (t + 2 - 2 * j - mk),
                    2 * (t + 1 - 2 * j - mk) - 1)
    elif r == -1:
        if 1 <= t <= mk - 1:
            return (half - t, half - (t + 1), 2 * t)
        if mk <= t <= mk + 4 * j - 1:
            d = t + 1 - 4 * j
            return (half - d, half - d, 2 * d - 1)
        if mk + 4 * j <= t <= 2 * mk - 1:
            d = t + 1 - 4 * j - mk
            return (half - d, half - d, 2 * d - 1)
    elif r == 0:
        if 1 <= t <= mk - 2 * j:
            return (half - (t - 1 + 2 * j), half - (t + 2 * j),
                    2 * (t + 2 * j) - 1)
        if mk - 2 * j + 1 <= t <= mk:
            return (half - (t - 1 + 2 * j - mk), half - (t + 2 * j - mk),
                    2 * (t + 2 * j - mk) - 1)
        if mk + 1 <= t <= mk + 2 * j:
            d = t - 2 * j
            return (half - d, half - d, 2 * d)
        if mk + 2 * j + 1 <= t <= 2 * mk:
            d = t - 2 * j - mk
            return (half - d, half - d, 2 * d)
    elif r == 1:
        if 1 <= t <= mk:
            return (half - (t - 1), half - (t - 1), 2 * t - 1)
        if mk + 1 <= t <= mk + 2 * j:
            return (half - (t - 1 - 2 * j), half - (t - 2 * j),
                    2 * (t - 2 * j))
        if mk + 2 * j + 1 <= t <= 2 * mk:
            return (half - (t - 1 - 2 * j - mk), half - (t - 2 * j - mk),
                    2 * (t - 2 * j - mk))
    elif r == 2:
        if 1 <= t <= mk:
            return (half - (t - 2), half - (t - 1), 2 * t - 1)
        if mk + 1 <= t <= mk + 4 * j:
            d = t - 1 - 4 * j
            return (half - d, half - d, 2 * (t - 4 * j))
        if mk + 4 * j + 1 <= t <= 2 * mk:
            d = t - 1 - 4 * j - mk
            return (half - d, half - d, 2 * (t - 4 * j - mk))
    elif r == 2 * m - 2:
        hh = (6 * mk + r) // 2
        b = mk + r // 6
        if 1 <= t <= b:
            return (hh - t, hh - t, 2 * t)
        if b + 1 <= t <= 2 * b:
            d = t - b
            return (hh - (d - 1), hh - d, 2 * d - 1)
    elif r == 2 * m + 1:
        hh = (6 * mk + r + 1) // 2
        b = mk + r // 6
        if 1 <= t <= b + 1:
            return (hh - t, hh - t, 2 * t - 1)
        if b + 2 <= t <= 2 * b + 1:
            d = t - 1 - b
            return (hh - d, hh - (d + 1), 2 * d)
    raise AssertionError("border row %d out of range for n=%d, m=%d" % (t, n, m))


def step_f(lam, m):
    """One step of the cycling permutation of P(n,3).

    Off the left border (l2 != l3) the step slides one cell along the row
    of constant smallest part: (l1+1, l2-1, l3).  On the border it jumps
    to the right border by the residue-class formula.  Every step raises
    c_ls by exactly one mod m; heights must lie in a divisible class.
    """
    n = lam[0] + lam[1] + lam[2]
    r = _signed_residue(n, m)
    if lam[1] != lam[2]:
        return (lam[0] + 1, lam[1] - 1, lam[2])
    big_k = (n - r) // (6 * m)
    return _border_step(n, m, lam[2], r, big_k)


def cycle_decomposition(n, m):
    """Orbit partition of P(n,3) under step_f.

    Cycles are listed in first-appearance order of their smallest member
    under the partition enumeration; each cycle starts at that member.
    """
    parts = enumerate_partitions(n)
    if not parts:
        raise ValueError("no partitions of %d into three parts" % (n,))
    _signed_residue(n, m)
    seen = set()
    cycles = []
    for lam in parts:
        if lam in seen:
            continue
        cyc = [lam]
        seen.add(lam)
        cur = step_f(lam, m)
        while cur != lam:
            cyc.append(cur)
            seen.add(cur)
            cur = step_f(cur, m)
        cycles.append(cyc)
    return CycleDecomposition(cycles)


def cycle_lengths(dec):
    """Sorted cycle lengths of a decomposition."""
    return sorted(len(c) for c in dec.cycles)


def row_permutation(n, m):
    """The permutation on rows (constant smallest part) induced by the
    border jumps: row t maps to the row of step_f((n-2t, t, t))."""
    perm = {}
    for t in range(1, n // 3 + 1):
        perm[t] = step_f((n - 2 * t, t, t), m)[2]
    return perm


def permutation_cycles(perm):
    """Cycles of a permutation dict, each starting at its smallest
    element, ordered by that element."""
    seen = set()
    out = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = perm[start]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = perm[cur]
        out.append(tuple(cyc))
    return out
