"""Dotted tessellations and the Kashaev moves A, T and P.

A triangle's dot is one of its corners.  Triangles are labelled bijectively
by the nonzero rationals: a Farey triangle of the tessellation gets the label
``sigma(middle vertex)``, the finitely many other triangles are looked up in
an explicit table.  The middles of Farey triangles removed by the diff are
"unused"; ``sigma`` sends them, in counterclockwise order, onto the sorted
table labels.  That completion makes the representation canonical, so
equality of states is structural.

T-move convention.  With the quadrilateral u, w_j, v, w_k read
counterclockwise, triangle j = {u, w_j, v} and triangle k = {u, v, w_k}, the
move applies when j has its dot at u and k has its dot at w_k.  It replaces
the diagonal {u, v} by {w_j, w_k}; afterwards j = {w_k, u, w_j} keeps its dot
at u and k = {w_j, v, w_k} keeps its dot at w_k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from tqc.exactnum import (
    INF,
    ZERO,
    ExtendedRational,
    PPSL2ZMap,
    farey_parents,
    middle_vertex,
    parse_rational,
    strictly_between,
)
from tqc.tessellation import Tessellation, edge, is_farey_triangle, sorted_triangles, standard_farey, triangle


def _key(x):
    return x.cyc_key()


class QPermutation:
    """A bijection of the nonzero rationals: a piecewise map plus a finite patch."""

    __slots__ = ("base", "patch", "_hash", "_inv")

    def __init__(self, base: PPSL2ZMap | None = None, patch: Mapping | None = None, check: bool = True):
        base = PPSL2ZMap.identity() if base is None else base
        raw = {parse_rational(k): parse_rational(v) for k, v in (patch or {}).items()}
        clean = {k: v for k, v in raw.items() if base(k) != v}
        self.base = base
        self.patch = clean
        self._hash = None
        self._inv = None
        if check:
            self._check(raw)

    def _check(self, raw) -> None:
        keys = set(self.patch)
        for k, v in raw.items():
            if k.den == 0 or k.num == 0 or v.den == 0 or v.num == 0:
                raise ValueError(f"patch entry {k} -> {v} leaves Q^x")
        binv = self.base.inverse()
        for bad in (ZERO, INF):
            p = binv(bad)
            if p.num != 0 and p.den != 0 and p not in keys:
                raise ValueError(f"base sends {p} to {bad} without a patch entry")
        vals = set(self.patch.values())
        if len(vals) != len(self.patch):
            raise ValueError("patch is not injective")
        need = {self.base(k) for k in keys | {ZERO, INF}} - {ZERO, INF}
        if vals != need:
            raise ValueError("patch does not complete the base to a bijection")

    @classmethod
    def identity(cls) -> "QPermutation":
        return cls()

    @classmethod
    def transposition(cls, j, k) -> "QPermutation":
        j, k = parse_rational(j), parse_rational(k)
        if j == k:
            raise ValueError("a transposition needs two distinct labels")
        return cls(None, {j: k, k: j})

    def __call__(self, x: ExtendedRational) -> ExtendedRational:
        v = self.patch.get(x)
        return self.base(x) if v is None else v

    def compose(self, g: "QPermutation") -> "QPermutation":
        """self o g."""
        base = self.base.compose(g.base)
        ginv = g.base.inverse()
        keys = set(g.patch)
        keys.update(ginv(k) for k in self.patch)
        binv = base.inverse()
        keys.update((binv(ZERO), binv(INF)))
        keys = {k for k in keys if k.num != 0 and k.den != 0}
        return QPermutation(base, {k: self(g(k)) for k in keys}, check=False)

    def __matmul__(self, g: "QPermutation") -> "QPermutation":
        return self.compose(g)

    def inverse(self) -> "QPermutation":
        if self._inv is None:
            inv = QPermutation(self.base.inverse(), {v: k for k, v in self.patch.items()}, check=False)
            inv._inv = self
            self._inv = inv
        return self._inv

    def __pow__(self, n: int) -> "QPermutation":
        out = QPermutation.identity()
        g = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = g.compose(out)
        return out

    def with_entries(self, entries: Mapping) -> "QPermutation":
        """Override the values at finitely many points (caller keeps it bijective)."""
        patch = dict(self.patch)
        patch.update(entries)
        return QPermutation(self.base, patch)

    def is_identity(self) -> bool:
        return not self.patch and self.base.is_identity()

    def fixes(self, *xs) -> bool:
        return all(self(parse_rational(x)) == parse_rational(x) for x in xs)

    def __eq__(self, other):
        return isinstance(other, QPermutation) and self.base == other.base and self.patch == other.patch

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.base, frozenset(self.patch.items())))
        return self._hash

    def __repr__(self):
        p = ", ".join(f"{k}->{v}" for k, v in sorted(self.patch.items(), key=lambda kv: _key(kv[0])))
        return f"QPermutation({self.base!r}, {{{p}}})"

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "patch": [[str(k), str(v)] for k, v in sorted(self.patch.items(), key=lambda kv: _key(kv[0]))],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QPermutation":
        return cls(PPSL2ZMap.from_json(data["base"]), {k: v for k, v in data["patch"]})


def farey_triangle_of(mid: ExtendedRational):
    """The Farey triangle whose middle vertex is ``mid``."""
    lo, hi = farey_parents(mid)
    return triangle(lo, mid, hi)


class KMoveError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class DottedTessellation:
    tess: Tessellation
    dots: Mapping  # triangle -> corner, for diff triangles and off-middle Farey triangles
    sigma: QPermutation
    interior: Mapping  # diff triangle -> label

    def dot(self, t) -> ExtendedRational:
        t = triangle(t)
        d = self.dots.get(t)
        return middle_vertex(t) if d is None else d

    def label(self, t) -> ExtendedRational:
        t = triangle(t)
        if t in self.interior:
            return self.interior[t]
        if not self.tess.has_triangle(t):
            raise KeyError(f"{t} is not a triangle of the tessellation")
        return self.sigma(middle_vertex(t))

    def find_triangle(self, j) -> tuple:
        j = parse_rational(j)
        if j.num == 0 or j.den == 0:
            raise ValueError("labels are nonzero rationals")
        for t, lab in self.interior.items():
            if lab == j:
                return t
        return farey_triangle_of(self.sigma.inverse()(j))

    def __eq__(self, other):
        return (isinstance(other, DottedTessellation) and self.tess == other.tess
                and dict(self.dots) == dict(other.dots) and self.sigma == other.sigma
                and dict(self.interior) == dict(other.interior))

    def __hash__(self):
        return hash((self.tess, frozenset(self.dots.items()), self.sigma, frozenset(self.interior.items())))

    def to_json(self) -> dict:
        d = self.tess.to_json()
        d["dots"] = [[[str(v) for v in t], str(self.dots[t])] for t in sorted_triangles(self.dots)]
        d["labels"] = [[[str(v) for v in t], str(self.interior[t])] for t in sorted_triangles(self.interior)]
        d["sigma"] = self.sigma.to_json()
        return d

    @classmethod
    def from_json(cls, data: dict) -> "DottedTessellation":
        def tri(vs):
            return triangle(*(parse_rational(v) for v in vs))
        return build_dotted(
            Tessellation.from_json(data),
            {tri(t): parse_rational(c) for t, c in data["dots"]},
            QPermutation.from_json(data["sigma"]),
            {tri(t): parse_rational(lab) for t, lab in data["labels"]},
        )


def build_dotted(tess: Tessellation, dots: Mapping, sigma: QPermutation, interior: Mapping,
                 fixed: Mapping | None = None) -> DottedTessellation:
    """Normalize raw data into the canonical representation.

    ``fixed`` lists sigma values (middle -> label) that must be imposed for
    Farey triangles whose labels changed.
    """
    for t in tess.triangles:
        if t not in interior or t not in dots:
            raise ValueError(f"triangle {t} lacks a label or a dot")
    interior = {t: interior[t] for t in tess.triangles}
    clean_dots = {}
    for t, c in dots.items():
        if c not in t:
            raise ValueError(f"dot {c} is not a corner of {t}")
        if t in tess.triangles:
            clean_dots[t] = c
        elif tess.has_triangle(t) and c != middle_vertex(t):
            clean_dots[t] = c
    entries = dict(fixed or {})
    unused = sorted((middle_vertex(t) for t in tess.removed_farey_triangles()), key=_key)
    labels = sorted(interior.values(), key=_key)
    if len(set(labels)) != len(labels):
        raise ValueError("repeated triangle label")
    entries.update(zip(unused, labels))
    if entries:
        sigma = sigma.with_entries(entries)
    return DottedTessellation(tess, clean_dots, sigma, interior)


def standard_dotted() -> DottedTessellation:
    return DottedTessellation(standard_farey(), {}, QPermutation.identity(), {})


def _replace(d: DottedTessellation, tess=None, dots=None, sigma=None, interior=None, fixed=None):
    return build_dotted(
        d.tess if tess is None else tess,
        d.dots if dots is None else dots,
        d.sigma if sigma is None else sigma,
        d.interior if interior is None else interior,
        fixed,
    )


def _ccw_next(t, c, step: int):
    i = t.index(c)
    return t[(i + step) % 3]


def apply_A(d: DottedTessellation, j, power: int = 1) -> DottedTessellation:
    t = d.find_triangle(j)
    dots = dict(d.dots)
    dots[t] = _ccw_next(t, d.dot(t), power)
    return _replace(d, dots=dots)


def _shared(tj, tk, j, k):
    common = set(tj) & set(tk)
    if len(common) != 2:
        raise KMoveError(f"triangles [{j}] and [{k}] do not share an edge")
    (wj,) = set(tj) - common
    (wk,) = set(tk) - common
    a, b = common
    return a, b, wj, wk


def _set_pair(d: DottedTessellation, old, new, j, k, tess) -> DottedTessellation:
    (oj, ok), ((nj, cj), (nk, ck)) = old, new
    dots = {t: c for t, c in d.dots.items() if t not in (oj, ok)}
    dots[nj] = cj
    dots[nk] = ck
    interior = {t: lab for t, lab in d.interior.items() if t not in (oj, ok)}
    fixed = {}
    for t, lab in ((nj, j), (nk, k)):
        if is_farey_triangle(t):
            fixed[middle_vertex(t)] = lab
        else:
            interior[t] = lab
    # a label that moved off a Farey triangle frees its middle for the completion
    return build_dotted(tess, dots, d.sigma, interior, fixed)


def apply_T(d: DottedTessellation, j, k) -> DottedTessellation:
    j, k = parse_rational(j), parse_rational(k)
    if j == k:
        raise KMoveError("T needs two distinct labels")
    tj, tk = d.find_triangle(j), d.find_triangle(k)
    a, b, wj, wk = _shared(tj, tk, j, k)
    u, v = (a, b) if strictly_between(a, wj, b) else (b, a)
    if d.dot(tj) != u or d.dot(tk) != wk:
        raise KMoveError(
            f"dots of [{j}] and [{k}] are at {d.dot(tj)}, {d.dot(tk)}; T needs them at {u}, {wk}")
    tess, _ = d.tess.flip(u, v)
    return _set_pair(d, (tj, tk), ((triangle(wk, u, wj), u), (triangle(wj, v, wk), wk)), j, k, tess)


def apply_T_inv(d: DottedTessellation, j, k) -> DottedTessellation:
    j, k = parse_rational(j), parse_rational(k)
    if j == k:
        raise KMoveError("T needs two distinct labels")
    tj, tk = d.find_triangle(j), d.find_triangle(k)
    a, b, u, v = _shared(tj, tk, j, k)
    wj, wk = (a, b) if strictly_between(u, a, v) else (b, a)
    if d.dot(tj) != u or d.dot(tk) != wk:
        raise KMoveError(
            f"dots of [{j}] and [{k}] are at {d.dot(tj)}, {d.dot(tk)}; inverse T needs them at {u}, {wk}")
    tess, _ = d.tess.flip(wj, wk)
    return _set_pair(d, (tj, tk), ((triangle(u, wj, v), u), (triangle(u, v, wk), wk)), j, k, tess)


def apply_P(d: DottedTessellation, gamma: QPermutation) -> DottedTessellation:
    interior = {t: gamma(lab) for t, lab in d.interior.items()}
    # build_dotted re-sorts the completion on unused middles
    return build_dotted(d.tess, d.dots, gamma.compose(d.sigma), interior)


def dotted_equal(d1: DottedTessellation, d2: DottedTessellation) -> bool:
    return d1 == d2


# ---------------------------------------------------------------- K-words

class KLetter(NamedTuple):
    kind: str  # "A", "T" or "P"
    idx: tuple  # labels for A/T, () for P
    exp: int  # +1 or -1
    perm: QPermutation | None = None
    name: str | None = None

    def inverse(self) -> "KLetter":
        return self._replace(exp=-self.exp)

    def __str__(self):
        p = "'" if self.exp < 0 else ""
        if self.kind == "P":
            return f"P({self.name or 'gamma'}){p}"
        return self.kind + "".join(f"[{x}]" for x in self.idx) + p


def _label(j) -> ExtendedRational:
    j = parse_rational(j)
    if j.num == 0 or j.den == 0:
        raise ValueError(f"labels are nonzero rationals, got {j}")
    return j


def A(j, exp: int = 1) -> KLetter:
    return KLetter("A", (_label(j),), exp)


def T(j, k, exp: int = 1) -> KLetter:
    j, k = _label(j), _label(k)
    if j == k:
        raise ValueError("T letters need distinct subscripts")
    return KLetter("T", (j, k), exp)


def P(gamma: QPermutation, name: str | None = None, exp: int = 1) -> KLetter:
    return KLetter("P", (), exp, gamma, name)


def invert_kword(w) -> tuple:
    return tuple(x.inverse() for x in reversed(w))


def format_kword(w) -> str:
    return " ".join(str(x) for x in w)


_REGISTRY: dict = {}


def register_permutation(name: str, factory) -> None:
    _REGISTRY[name] = factory


def lookup_permutation(name: str) -> QPermutation:
    name = name.strip()
    m = re.fullmatch(r"swap\(\s*([^,]+?)\s*,\s*([^)]+?)\s*\)", name)
    if m:
        return QPermutation.transposition(m.group(1), m.group(2))
    if "->" in name:
        patch = {}
        for item in name.split(","):
            a, b = item.split("->")
            patch[parse_rational(a)] = parse_rational(b)
        return QPermutation(None, patch)
    if name not in _REGISTRY:
        # the functor module registers ga / gb on import
        import tqc.functor  # noqa: F401
    if name not in _REGISTRY:
        raise ValueError(f"unknown permutation name {name!r}")
    return _REGISTRY[name]()


_KTOKEN = re.compile(r"""
    (?P<A>A\s*\[\s*(?P<aj>[^\]]+?)\s*\])
  | (?P<T>T\s*\[\s*(?P<tj>[^\]]+?)\s*\]\s*\[\s*(?P<tk>[^\]]+?)\s*\])
  | (?P<P>P\s*\(\s*(?P<pn>(?:[^()]|\([^()]*\))+?)\s*\))
  | (?P<open>\()
  | (?P<close>\))
  | (?P<pow>\^\s*-?\d+)
  | (?P<prime>')
  | (?P<ws>\s+)
""", re.VERBOSE)


def parse_kword(text: str) -> tuple:
    """Parse e.g. ``A[-1] T[-1][1]' A[1] P(ga)`` or ``(A[1] A[2])^2``."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _KTOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse K-word at position {pos}: {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.group("ws"):
            continue
        try:
            letter = (A(m.group("aj")) if m.group("A")
                      else T(m.group("tj"), m.group("tk")) if m.group("T") else None)
        except ValueError as exc:
            raise ValueError(f"{exc} at position {m.start()}") from None
        if letter is not None:
            tokens.append(("L", letter, m.start()))
        elif m.group("P"):
            name = m.group("pn")
            tokens.append(("L", P(lookup_permutation(name), name), m.start()))
        elif m.group("open"):
            tokens.append(("(", None, m.start()))
        elif m.group("close"):
            tokens.append((")", None, m.start()))
        elif m.group("pow"):
            tokens.append(("^", int(m.group("pow")[1:].strip()), m.start()))
        elif m.group("prime"):
            tokens.append(("'", None, m.start()))
    i = 0

    def seq(depth):
        nonlocal i
        out = []
        while i < len(tokens):
            kind, val, at = tokens[i]
            if kind == ")":
                if depth == 0:
                    raise ValueError(f"unbalanced ')' at position {at}")
                return out
            i += 1
            if kind == "(":
                item = seq(depth + 1)
                if i >= len(tokens) or tokens[i][0] != ")":
                    raise ValueError("missing ')'")
                i += 1
            elif kind == "L":
                item = [val]
            else:
                raise ValueError(f"unexpected {kind!r} at position {at}")
            while i < len(tokens) and tokens[i][0] in ("'", "^"):
                kind2, val2, _ = tokens[i]
                i += 1
                if kind2 == "'":
                    item = list(invert_kword(item))
                else:
                    if val2 < 0:
                        item = list(invert_kword(item))
                    item = item * abs(val2)
            out.extend(item)
        if depth:
            raise ValueError("missing ')'")
        return out

    return tuple(seq(0))


def apply_letter(d: DottedTessellation, x: KLetter) -> DottedTessellation:
    if x.kind == "A":
        return apply_A(d, x.idx[0], 1 if x.exp > 0 else -1)
    if x.kind == "T":
        return apply_T(d, *x.idx) if x.exp > 0 else apply_T_inv(d, *x.idx)
    return apply_P(d, x.perm if x.exp > 0 else x.perm.inverse())


def apply_kword(d: DottedTessellation, w) -> DottedTessellation:
    if isinstance(w, str):
        w = parse_kword(w)
    n = len(w)
    for pos in range(n - 1, -1, -1):
        try:
            d = apply_letter(d, w[pos])
        except KMoveError as exc:
            raise KMoveError(f"letter {pos} ({w[pos]}): {exc}") from None
    return d


__all__ = [
    "QPermutation", "DottedTessellation", "KLetter", "KMoveError", "A", "T", "P",
    "standard_dotted", "build_dotted", "apply_A", "apply_T", "apply_T_inv", "apply_P",
    "apply_letter", "apply_kword", "parse_kword", "format_kword", "invert_kword",
    "dotted_equal", "farey_triangle_of", "register_permutation", "lookup_permutation", "edge",
]
