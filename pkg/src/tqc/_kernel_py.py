"""Pure-Python integer kernels for extended rationals.

Every rational is passed as a (num, den) pair of Python ints with den >= 0
and infinity stored as (1, 0).  The compiled module ``tqc._kernel`` exposes
the same functions with identical semantics.
"""

from math import gcd

BACKEND = "python"


def reduce_pair(n, d):
    if n == 0 and d == 0:
        raise ValueError("0/0 is not an extended rational")
    if d == 0:
        return 1, 0
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return n, d


def det2(an, ad, bn, bd):
    return an * bd - ad * bn


def _section(n, d):
    # 0 <= x < inf -> 0, inf -> 1, x < 0 -> 2
    if d == 0:
        return 1
    return 0 if n >= 0 else 2


def cyc_cmp(an, ad, bn, bd):
    """Compare positions on the circle read counterclockwise from 0."""
    sa = _section(an, ad)
    sb = _section(bn, bd)
    if sa != sb:
        return -1 if sa < sb else 1
    if sa == 1:
        return 0
    lhs = an * bd
    rhs = bn * ad
    if lhs == rhs:
        return 0
    return -1 if lhs < rhs else 1


def cyclic_between(an, ad, bn, bd, cn, cd):
    """True iff b lies strictly inside the counterclockwise arc from a to c."""
    ab = cyc_cmp(an, ad, bn, bd)
    bc = cyc_cmp(bn, bd, cn, cd)
    ca = cyc_cmp(cn, cd, an, ad)
    if ab == 0 or bc == 0 or ca == 0:
        return False
    # exactly one of the three steps wraps around 0 for a counterclockwise triple
    return (ab < 0) + (bc < 0) + (ca < 0) == 2


def mobius(a, b, c, d, xn, xd):
    return reduce_pair(a * xn + b * xd, c * xn + d * xd)


def mediant(an, ad, bn, bd):
    return reduce_pair(an + bn, ad + bd)
