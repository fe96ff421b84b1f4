"""When does a prime divide p(n,3)?

For primes m with m % 6 == 5 and primes m' with m' % 6 == 1 the divisible
heights n form a finite union of arithmetic progressions mod 6m.  This
module builds those residue sets and checks them against brute force.
"""

from collections import namedtuple

from .partitions import count_bruteforce

ResidueCharacterization = namedtuple(
    "ResidueCharacterization",
    ["modulus", "period", "residues", "family", "sqrt_minus3"],
)

VerifyReport = namedtuple("VerifyReport", ["ok", "first_mismatch", "checked"])


def is_prime(m):
    """Trial-division primality; fine for the desk-scale moduli used here."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def _pm_closure(vals, period):
    out = set()
    for v in vals:
        out.add(v % period)
        out.add((-v) % period)
    return frozenset(out)


def residues_neg(m):
    """Residue characterization for a prime m with m % 6 == 5.

    m | p(n,3) exactly when n mod 6m is one of +-0, +-1, +-2, +-(2m-2),
    +-(2m+1): nine distinct residues.
    """
    if not is_prime(m) or m % 6 != 5:
        raise ValueError("need a prime congruent to 5 mod 6, got %r" % (m,))
    period = 6 * m
    res = _pm_closure((0, 1, 2, 2 * m - 2, 2 * m + 1), period)
    return ResidueCharacterization(m, period, res, "minus_one", None)


def sqrt_minus3(mp):
    """Both square roots of -3 modulo a prime mp with mp % 6 == 1.

    Linear scan; a root always exists for this prime family.
    """
    if not is_prime(mp) or mp % 6 != 1:
        raise ValueError("need a prime congruent to 1 mod 6, got %r" % (mp,))
    for s in range(1, mp):
        if (s * s + 3) % mp == 0:
            return (s, mp - s) if s < mp - s else (mp - s, s)
    raise ArithmeticError("no square root of -3 modulo %d; %d is not a valid modulus" % (mp, mp))


def residues_pos(mp):
    """Residue characterization for a prime mp with mp % 6 == 1.

    mp | p(n,3) exactly when n mod 6mp is one of +-0, +-1, +-2, +-(2mp-1),
    +-(2mp+2), +-(3mp+s(mp-1)) where s*s = -3 mod mp: eleven residues.
    The +- closure makes the choice between the two roots immaterial.
    """
    roots = sqrt_minus3(mp)
    s = roots[0]
    period = 6 * mp
    res = _pm_closure(
        (0, 1, 2, 2 * mp - 1, 2 * mp + 2, 3 * mp + s * (mp - 1)), period
    )
    return ResidueCharacterization(mp, period, res, "plus_one", roots)


def characterize(m):
    """Dispatch on m mod 6. Raises ValueError for unsupported moduli."""
    if m % 6 == 5:
        return residues_neg(m)
    if m % 6 == 1 and m > 1:
        return residues_pos(m)
    raise ValueError("modulus %r is not a prime congruent to +-1 mod 6" % (m,))


def is_divisible(n, m):
    """True iff m | p(n,3), decided by the residue characterization alone."""
    ch = characterize(m)
    return n % ch.period in ch.residues


def non_witnessed_residues(mp):
    """The +-(3mp + s(mp-1)) residue pair for the plus_one family.

    On these two classes the divisibility holds but the largest-minus-
    smallest statistic does not split the partitions evenly.
    """
    roots = sqrt_minus3(mp)
    period = 6 * mp
    return frozenset(_pm_closure((3 * mp + roots[0] * (mp - 1),), period))


def verify_characterization(m, n_max):
    """Compare is_divisible against brute-force counting for all n <= n_max.

    Returns VerifyReport(ok, first_mismatch, checked).
    """
    ch = characterize(m)
    for n in range(n_max + 1):
        predicted = n % ch.period in ch.residues
        actual = count_bruteforce(n) % m == 0
        if predicted != actual:
            return VerifyReport(False, n, n + 1)
    return VerifyReport(True, None, n_max + 1)
