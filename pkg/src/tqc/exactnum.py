"""Exact extended rationals, PSL(2,Z) and piecewise-PSL(2,Z) circle maps.

Orientation convention (frozen for the whole package): points of the
projective line are drawn on the unit circle through the Cayley transform
mu(x) = (x - i)/(x + i).  mu(0) = -1, mu(1) = -i, mu(inf) = 1, mu(-1) = i,
so reading the circle counterclockwise visits 0 -> 1 -> inf -> -1 -> 0,
i.e. increasing real order with a wrap through infinity.
"""

from __future__ import annotations

import bisect
import re
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from tqc import kernel as _k


class ExtendedRational:
    """A point of Q u {inf} in lowest terms, den >= 0, inf stored as 1/0."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num: int, den: int = 1):
        n, d = _k.reduce_pair(int(num), int(den))
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)
        object.__setattr__(self, "_key", None)

    @classmethod
    def _raw(cls, n: int, d: int) -> "ExtendedRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", n)
        object.__setattr__(obj, "den", d)
        object.__setattr__(obj, "_key", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedRational is immutable")

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    @property
    def pair(self) -> tuple[int, int]:
        return self.num, self.den

    def cyc_key(self):
        """Sort key placing points counterclockwise starting from 0."""
        key = self._key
        if key is None:
            if self.den == 0:
                key = (1, Fraction(0))
            elif self.num >= 0:
                key = (0, Fraction(self.num, self.den))
            else:
                key = (2, Fraction(self.num, self.den))
            object.__setattr__(self, "_key", key)
        return key

    def __eq__(self, other):
        if isinstance(other, ExtendedRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int) and not isinstance(other, bool):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return ExtendedRational._raw(-self.num if self.den else 1, self.den)

    def __reduce__(self):
        return (ExtendedRational, (self.num, self.den))

    def __str__(self):
        if self.den == 0:
            return "inf"
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"Q({self})"

    def to_fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def __float__(self):
        return float("inf") if self.den == 0 else self.num / self.den


Q = ExtendedRational
INF = ExtendedRational._raw(1, 0)
ZERO = ExtendedRational._raw(0, 1)
ONE = ExtendedRational._raw(1, 1)
MINUS_ONE = ExtendedRational._raw(-1, 1)

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_rational(text) -> ExtendedRational:
    """Parse ``p/q``, ``p``, ``inf``/``oo`` or ``1/0`` into a point."""
    if isinstance(text, ExtendedRational):
        return text
    if isinstance(text, int):
        return ExtendedRational(text, 1)
    if isinstance(text, Fraction):
        return ExtendedRational(text.numerator, text.denominator)
    s = str(text).strip().replace("−", "-")
    if s.lower() in ("inf", "+inf", "-inf", "oo", "∞"):
        return INF
    m = _RAT_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse rational {text!r}")
    return ExtendedRational(int(m.group(1)), int(m.group(2) or 1))


def reduce(num: int, den: int) -> ExtendedRational:
    return ExtendedRational(num, den)


def _as_pair(x) -> tuple[int, int]:
    if isinstance(x, ExtendedRational):
        return x.num, x.den
    n, d = x
    return int(n), int(d)


def mediant(x, y) -> ExtendedRational:
    """(a+c)/(b+d); pass a raw pair such as (-1, 0) to pick the sign of inf."""
    an, ad = _as_pair(x)
    bn, bd = _as_pair(y)
    if _k.reduce_pair(an, ad) == _k.reduce_pair(bn, bd):
        raise ValueError("mediant of a point with itself")
    return ExtendedRational._raw(*_k.mediant(an, ad, bn, bd))


def farey_det(x: ExtendedRational, y: ExtendedRational) -> int:
    return _k.det2(x.num, x.den, y.num, y.den)


def is_farey_edge(x: ExtendedRational, y: ExtendedRational) -> bool:
    if x == y:
        raise ValueError("an edge needs two distinct endpoints")
    return abs(farey_det(x, y)) == 1


def cyc_cmp(x: ExtendedRational, y: ExtendedRational) -> int:
    return _k.cyc_cmp(x.num, x.den, y.num, y.den)


def cyclic_less(a: ExtendedRational, b: ExtendedRational, c: ExtendedRational) -> bool:
    """True iff b lies strictly between a and c going counterclockwise."""
    if a == b or b == c or a == c:
        raise ValueError("cyclic_less needs three distinct points")
    return _k.cyclic_between(a.num, a.den, b.num, b.den, c.num, c.den)


def strictly_between(a: ExtendedRational, b: ExtendedRational, c: ExtendedRational) -> bool:
    """cyclic_less without the distinctness check (False on coincidences)."""
    return _k.cyclic_between(a.num, a.den, b.num, b.den, c.num, c.den)


def farey_apexes(x: ExtendedRational, y: ExtendedRational):
    """The two third vertices of the Farey triangles on a Farey edge {x, y}."""
    a, b = x.num, x.den
    c, d = y.num, y.den
    return (ExtendedRational._raw(*_k.reduce_pair(a + c, b + d)),
            ExtendedRational._raw(*_k.reduce_pair(a - c, b - d)))


def ccw_child(lo: ExtendedRational, hi: ExtendedRational) -> ExtendedRational:
    """Apex of the Farey triangle inside the counterclockwise arc lo -> hi."""
    p, q = farey_apexes(lo, hi)
    return p if strictly_between(lo, p, hi) else q


def sort_ccw(points: Iterable[ExtendedRational]) -> list[ExtendedRational]:
    return sorted(points, key=ExtendedRational.cyc_key)


class SL2ZMatrix:
    """Integer matrix of determinant 1, stored as its PSL(2,Z) representative."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if a * d - b * c != 1:
            raise ValueError(f"determinant of [[{a},{b}],[{c},{d}]] is not 1")
        if c < 0 or (c == 0 and d < 0):
            a, b, c, d = -a, -b, -c, -d
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("SL2ZMatrix is immutable")

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def __eq__(self, other):
        return isinstance(other, SL2ZMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "SL2ZMatrix") -> "SL2ZMatrix":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return SL2ZMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "SL2ZMatrix":
        return SL2ZMatrix(self.d, -self.b, -self.c, self.a)

    def __call__(self, x: ExtendedRational) -> ExtendedRational:
        return ExtendedRational._raw(*_k.mobius(self.a, self.b, self.c, self.d, x.num, x.den))

    def __repr__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __reduce__(self):
        return (SL2ZMatrix, self.entries)


IDENTITY = SL2ZMatrix(1, 0, 0, 1)

_MAT_RE = re.compile(r"^\s*\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]\s*$")


def parse_matrix(text: str) -> SL2ZMatrix:
    m = _MAT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse matrix {text!r}")
    return SL2ZMatrix(*(int(g) for g in m.groups()))


def mobius_eval(m: SL2ZMatrix, x: ExtendedRational) -> ExtendedRational:
    return m(x)


def edge_frame(lo: ExtendedRational, hi: ExtendedRational) -> SL2ZMatrix:
    """The matrix sending 0 -> lo and inf -> hi, for a Farey edge with lo -> hi counterclockwise."""
    a, b = lo.num, lo.den
    c, d = hi.num, hi.den
    det = c * b - a * d
    if det == -1:
        c, d = -c, -d
    elif det != 1:
        raise ValueError(f"{lo}, {hi} is not a Farey edge")
    return SL2ZMatrix(c, a, d, b)


def edge_map(src_lo, src_hi, dst_lo, dst_hi) -> SL2ZMatrix:
    """The unique PSL(2,Z) element carrying one oriented Farey edge onto another."""
    return edge_frame(dst_lo, dst_hi) @ edge_frame(src_lo, src_hi).inverse()


class Arc(NamedTuple):
    """Half-open counterclockwise arc [lo, hi); lo == hi means the whole circle."""

    lo: ExtendedRational
    hi: ExtendedRational

    def contains(self, x: ExtendedRational) -> bool:
        if self.lo == self.hi or x == self.lo:
            return True
        return strictly_between(self.lo, x, self.hi)


class PPSL2ZMap:
    """Piecewise-PSL(2,Z) orientation preserving bijection of Q u {inf}.

    Stored as breakpoints sorted counterclockwise from 0 together with the
    matrix used on the arc starting at each breakpoint.  A single Moebius map
    has no breakpoints.
    """

    __slots__ = ("_breaks", "_mats", "_keys", "_hash")

    def __init__(self, pieces: Sequence[tuple[ExtendedRational, SL2ZMatrix]] | SL2ZMatrix,
                 _trusted: bool = False):
        if isinstance(pieces, SL2ZMatrix):
            pieces = [(ZERO, pieces)]
        items = sorted(((parse_rational(b), m) for b, m in pieces), key=lambda t: t[0].cyc_key())
        if not items:
            raise ValueError("a piecewise map needs at least one piece")
        breaks = [b for b, _ in items]
        if len(set(breaks)) != len(breaks):
            raise ValueError("repeated breakpoint")
        mats = [m for _, m in items]
        breaks, mats = _merge(breaks, mats)
        if not _trusted:
            _validate(breaks, mats)
        self._breaks = tuple(breaks)
        self._mats = tuple(mats)
        self._keys = [b.cyc_key() for b in breaks]
        self._hash = None

    @classmethod
    def identity(cls) -> "PPSL2ZMap":
        return cls(IDENTITY, _trusted=True)

    @classmethod
    def from_edge_partitions(cls, src: Sequence[ExtendedRational], dst: Sequence[ExtendedRational]) -> "PPSL2ZMap":
        """Map the Farey arcs between consecutive src points onto those between dst points.

        Both sequences list the vertices of a Farey polygon counterclockwise;
        arc i of src goes to arc i of dst.
        """
        if len(src) != len(dst) or len(src) < 2:
            raise ValueError("partitions must have equal length >= 2")
        n = len(src)
        pieces = []
        for i in range(n):
            j = (i + 1) % n
            pieces.append((src[i], edge_map(src[i], src[j], dst[i], dst[j])))
        return cls(pieces)

    @property
    def breakpoints(self) -> tuple[ExtendedRational, ...]:
        return self._breaks

    def pieces(self) -> list[tuple[Arc, SL2ZMatrix]]:
        """Pieces in canonical order: starting from the arc containing 0."""
        n = len(self._breaks)
        if n == 0:
            return [(Arc(ZERO, ZERO), self._mats[0])]
        out = [(Arc(self._breaks[i], self._breaks[(i + 1) % n]), self._mats[i]) for i in range(n)]
        if self._breaks[0] != ZERO:
            out = out[-1:] + out[:-1]
        return out

    def matrix_at(self, x: ExtendedRational) -> SL2ZMatrix:
        if not self._breaks:
            return self._mats[0]
        i = bisect.bisect_right(self._keys, x.cyc_key()) - 1
        return self._mats[i]  # i == -1 wraps to the last arc

    def __call__(self, x: ExtendedRational) -> ExtendedRational:
        return self.matrix_at(x)(x)

    def compose(self, g: "PPSL2ZMap") -> "PPSL2ZMap":
        """self o g."""
        ginv = g.inverse()
        cuts = set(g._breaks)
        cuts.update(ginv(b) for b in self._breaks)
        if not cuts:
            return PPSL2ZMap(self._mats[0] @ g._mats[0], _trusted=True)
        pieces = []
        for c in cuts:
            gm = g.matrix_at(c)
            pieces.append((c, self.matrix_at(gm(c)) @ gm))
        return PPSL2ZMap(pieces, _trusted=True)

    def inverse(self) -> "PPSL2ZMap":
        if not self._breaks:
            return PPSL2ZMap(self._mats[0].inverse(), _trusted=True)
        return PPSL2ZMap([(m(b), m.inverse()) for b, m in zip(self._breaks, self._mats)], _trusted=True)

    def is_identity(self) -> bool:
        return not self._breaks and self._mats[0] == IDENTITY

    def __eq__(self, other):
        return isinstance(other, PPSL2ZMap) and self._breaks == other._breaks and self._mats == other._mats

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._breaks, self._mats))
        return self._hash

    def __repr__(self):
        parts = ", ".join(f"[{a.lo},{a.hi}):{m!r}" for a, m in self.pieces())
        return f"PPSL2ZMap({parts})"

    def to_json(self) -> list:
        return [{"lo": str(a.lo), "hi": str(a.hi), "matrix": [[m.a, m.b], [m.c, m.d]]} for a, m in self.pieces()]

    @classmethod
    def from_json(cls, data: list) -> "PPSL2ZMap":
        pieces = []
        for item in data:
            (a, b), (c, d) = item["matrix"]
            pieces.append((parse_rational(item["lo"]), SL2ZMatrix(a, b, c, d)))
        if len(pieces) == 1:
            return cls(pieces[0][1])
        return cls(pieces)


def _merge(breaks: list, mats: list):
    n = len(breaks)
    if n == 1:
        return [], mats
    keep = [i for i in range(n) if mats[i] != mats[i - 1]]
    if not keep:
        return [], [mats[0]]
    return [breaks[i] for i in keep], [mats[i] for i in keep]


def _validate(breaks: list, mats: list) -> None:
    n = len(breaks)
    if n == 0:
        return
    images = []
    for i in range(n):
        b = breaks[i]
        left = mats[i - 1](b)
        right = mats[i](b)
        if left != right:
            raise ValueError(f"pieces disagree at breakpoint {b}: {left} vs {right}")
        images.append(right)
    if len(set(images)) != n:
        raise ValueError("breakpoint images collide")
    # images must be counterclockwise sorted up to rotation (winding number one)
    start = min(range(n), key=lambda i: images[i].cyc_key())
    rot = images[start:] + images[:start]
    if any(rot[i].cyc_key() >= rot[i + 1].cyc_key() for i in range(n - 1)):
        raise ValueError("piecewise map does not preserve the cyclic order")


def ppsl2z_compose(f: PPSL2ZMap, g: PPSL2ZMap) -> PPSL2ZMap:
    return f.compose(g)


def ppsl2z_invert(f: PPSL2ZMap) -> PPSL2ZMap:
    return f.inverse()


def ppsl2z_eval(f: PPSL2ZMap, x: ExtendedRational) -> ExtendedRational:
    return f(x)


def ppsl2z_equal(f: PPSL2ZMap, g: PPSL2ZMap) -> bool:
    return f == g


def farey_parents(x: ExtendedRational) -> tuple[ExtendedRational, ExtendedRational]:
    """The Farey triangle having x as its middle vertex, minus x.

    Returns the two neighbours (lo, hi) with lo -> x -> hi counterclockwise.
    Defined for every x other than 0 and inf.
    """
    if x.den == 0 or x.num == 0:
        raise ValueError(f"{x} is not the middle vertex of any Farey triangle")
    p, q = x.num, x.den
    if q == 1:
        if p > 0:
            return ExtendedRational._raw(p - 1, 1), INF
        return INF, ExtendedRational._raw(p + 1, 1)
    v = pow(p, -1, q)
    u = (p * v - 1) // q
    a = ExtendedRational(u, v)
    b = ExtendedRational(p - u, q - v)
    return (a, b) if strictly_between(a, x, b) else (b, a)


def middle_vertex(tri: Sequence[ExtendedRational]) -> ExtendedRational:
    """Middle vertex of a Farey triangle: the mediant of the other two."""
    return max(tri, key=lambda v: (v.den, abs(v.num)))
