# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels for extended rationals.

Same contract as ``tqc._kernel_py``.  Each entry point first tries a
64-bit fast path with overflow checks and falls back to Python integers
when an argument or an intermediate product does not fit.
"""

from math import gcd as _pygcd

BACKEND = "cython"

cdef extern from *:
    """
    static int tqc_mul(long long a, long long b, long long *out) {
        return __builtin_mul_overflow(a, b, out);
    }
    static int tqc_add(long long a, long long b, long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    """
    int tqc_mul(long long a, long long b, long long *out)
    int tqc_add(long long a, long long b, long long *out)


cdef inline long long _gcd(long long a, long long b):
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef object _reduce_obj(object n, object d):
    if n == 0 and d == 0:
        raise ValueError("0/0 is not an extended rational")
    if d == 0:
        return (1, 0)
    if d < 0:
        n = -n
        d = -d
    g = _pygcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return (n, d)


cdef inline bint _small(object x):
    return type(x) is int and -4611686018427387904 < x < 4611686018427387904


def reduce_pair(n, d):
    cdef long long cn, cd, g
    if _small(n) and _small(d):
        cn = n
        cd = d
        if cn == 0 and cd == 0:
            raise ValueError("0/0 is not an extended rational")
        if cd == 0:
            return (1, 0)
        if cd < 0:
            cn = -cn
            cd = -cd
        g = _gcd(cn, cd)
        if g != 1:
            cn //= g
            cd //= g
        return (cn, cd)
    return _reduce_obj(n, d)


def det2(an, ad, bn, bd):
    cdef long long p, q, r
    if _small(an) and _small(ad) and _small(bn) and _small(bd):
        if not tqc_mul(an, bd, &p) and not tqc_mul(ad, bn, &q):
            if not tqc_add(p, -q, &r):
                return r
    return an * bd - ad * bn


cdef inline int _section(long long n, long long d):
    if d == 0:
        return 1
    return 0 if n >= 0 else 2


cdef int _cmp_fast(long long an, long long ad, long long bn, long long bd, int *ok):
    cdef int sa = _section(an, ad)
    cdef int sb = _section(bn, bd)
    cdef long long lhs, rhs
    ok[0] = 1
    if sa != sb:
        return -1 if sa < sb else 1
    if sa == 1:
        return 0
    if tqc_mul(an, bd, &lhs) or tqc_mul(bn, ad, &rhs):
        ok[0] = 0
        return 0
    if lhs == rhs:
        return 0
    return -1 if lhs < rhs else 1


cdef int _cmp_obj(object an, object ad, object bn, object bd):
    cdef int sa = 1 if ad == 0 else (0 if an >= 0 else 2)
    cdef int sb = 1 if bd == 0 else (0 if bn >= 0 else 2)
    if sa != sb:
        return -1 if sa < sb else 1
    if sa == 1:
        return 0
    lhs = an * bd
    rhs = bn * ad
    if lhs == rhs:
        return 0
    return -1 if lhs < rhs else 1


cdef int _cmp(object an, object ad, object bn, object bd):
    cdef int ok = 0
    cdef int r
    if _small(an) and _small(ad) and _small(bn) and _small(bd):
        r = _cmp_fast(an, ad, bn, bd, &ok)
        if ok:
            return r
    return _cmp_obj(an, ad, bn, bd)


def cyc_cmp(an, ad, bn, bd):
    return _cmp(an, ad, bn, bd)


def cyclic_between(an, ad, bn, bd, cn, cd):
    cdef int ab = _cmp(an, ad, bn, bd)
    cdef int bc = _cmp(bn, bd, cn, cd)
    cdef int ca = _cmp(cn, cd, an, ad)
    if ab == 0 or bc == 0 or ca == 0:
        return False
    return (ab < 0) + (bc < 0) + (ca < 0) == 2


def mobius(a, b, c, d, xn, xd):
    cdef long long p, q, r, s, u, v
    if (_small(a) and _small(b) and _small(c) and _small(d)
            and _small(xn) and _small(xd)):
        if not (tqc_mul(a, xn, &p) or tqc_mul(b, xd, &q) or tqc_add(p, q, &u)
                or tqc_mul(c, xn, &r) or tqc_mul(d, xd, &s) or tqc_add(r, s, &v)):
            return reduce_pair(u, v)
    return _reduce_obj(a * xn + b * xd, c * xn + d * xd)


def mediant(an, ad, bn, bd):
    return reduce_pair(an + bn, ad + bd)
