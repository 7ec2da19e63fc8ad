"""Marked tessellations, the moves alpha and beta, and vertex functions."""

from __future__ import annotations

import re
from dataclasses import dataclass

from tqc.exactnum import (
    INF,
    MINUS_ONE,
    ONE,
    ZERO,
    ExtendedRational,
    PPSL2ZMap,
    edge_map,
    mediant,
    parse_rational,
    strictly_between,
)
from tqc.tessellation import Tessellation, edge, standard_farey

DEFAULT_DEPTH = 64

LETTERS = ("a", "a'", "b", "b'")


class VertexFunctionError(RuntimeError):
    pass


@dataclass(frozen=True)
class MarkedTessellation:
    tess: Tessellation
    doe: tuple

    def __post_init__(self):
        x, y = self.doe
        if not self.tess.contains_edge(x, y):
            raise ValueError(f"d.o.e. ({x}, {y}) is not an edge of the tessellation")

    def to_json(self) -> dict:
        d = self.tess.to_json()
        d["doe"] = [str(self.doe[0]), str(self.doe[1])]
        return d

    @classmethod
    def from_json(cls, data: dict) -> "MarkedTessellation":
        x, y = (parse_rational(v) for v in data["doe"])
        return cls(Tessellation.from_json(data), (x, y))


def standard_marked() -> MarkedTessellation:
    return MarkedTessellation(standard_farey(), (ZERO, INF))


def apply_alpha(m: MarkedTessellation) -> MarkedTessellation:
    x, y = m.doe
    r = m.tess.third_vertex(x, y, "right")
    l = m.tess.third_vertex(x, y, "left")
    t, _ = m.tess.flip(x, y)
    return MarkedTessellation(t, (r, l))


def apply_alpha_inv(m: MarkedTessellation) -> MarkedTessellation:
    x, y = m.doe
    r = m.tess.third_vertex(x, y, "right")
    l = m.tess.third_vertex(x, y, "left")
    t, _ = m.tess.flip(x, y)
    return MarkedTessellation(t, (l, r))


def apply_beta(m: MarkedTessellation) -> MarkedTessellation:
    x, y = m.doe
    return MarkedTessellation(m.tess, (y, m.tess.third_vertex(x, y, "left")))


def apply_beta_inv(m: MarkedTessellation) -> MarkedTessellation:
    u, v = m.doe
    return MarkedTessellation(m.tess, (m.tess.third_vertex(u, v, "left"), u))


_MOVES = {"a": apply_alpha, "a'": apply_alpha_inv, "b": apply_beta, "b'": apply_beta_inv}


def parse_tword(text: str) -> tuple:
    """Parse ``a b' (b a)^5`` into a tuple of letters; the last letter acts first.

    ``[x, y]`` is the commutator x y x' y'.
    """
    norm = text.replace("α", "a").replace("β", "b").replace("⁻¹", "'")
    found = list(re.finditer(r"[ab]'?|[()\[\],]|\^-?\d+|\S", norm))
    tokens = [m.group() for m in found]
    offset = [m.start() for m in found]
    pos = 0

    def seq(depth):
        nonlocal pos
        out = []
        while pos < len(tokens):
            tok = tokens[pos]
            if tok in ")],":
                if depth == 0:
                    raise ValueError(f"unexpected {tok!r} at position {offset[pos]}")
                return out
            pos += 1
            if tok == "(":
                inner = seq(depth + 1)
                if pos >= len(tokens) or tokens[pos] != ")":
                    raise ValueError("missing ')'")
                pos += 1
                item = inner
            elif tok == "[":
                x = seq(depth + 1)
                if pos >= len(tokens) or tokens[pos] != ",":
                    raise ValueError("commutator needs ','")
                pos += 1
                y = seq(depth + 1)
                if pos >= len(tokens) or tokens[pos] != "]":
                    raise ValueError("missing ']'")
                pos += 1
                item = x + y + invert_tword(x) + invert_tword(y)
            elif tok in LETTERS:
                item = [tok]
            else:
                raise ValueError(f"unexpected token {tok!r} at position {offset[pos - 1]}")
            if pos < len(tokens) and tokens[pos].startswith("^"):
                n = int(tokens[pos][1:])
                pos += 1
                if n < 0:
                    item = invert_tword(item)
                    n = -n
                item = item * n
            out.extend(item)
        if depth:
            raise ValueError("unclosed bracket")
        return out

    return tuple(seq(0))


def invert_tword(w) -> list:
    return [x[:-1] if x.endswith("'") else x + "'" for x in reversed(w)]


def format_tword(w) -> str:
    return " ".join(w)


def apply_tword(m: MarkedTessellation, w) -> MarkedTessellation:
    if isinstance(w, str):
        w = parse_tword(w)
    for letter in reversed(w):
        m = _MOVES[letter](m)
    return m


def marked_equal(m1: MarkedTessellation, m2: MarkedTessellation) -> bool:
    return m1.tess == m2.tess and m1.doe == m2.doe


# index tree: the four arcs of the root square, counterclockwise
ROOT_ARCS = ((ZERO, ONE), (ONE, INF), (INF, MINUS_ONE), (MINUS_ONE, ZERO))


def index_child(lo: ExtendedRational, hi: ExtendedRational) -> ExtendedRational:
    """The Stern-Brocot child inside the counterclockwise index arc lo -> hi."""
    if hi == INF:
        return mediant(lo, (1, 0))
    if lo == INF:
        return mediant((-1, 0), hi)
    return mediant(lo, hi)


def _root_values(m: MarkedTessellation) -> dict:
    x, y = m.doe
    return {
        ZERO: x,
        INF: y,
        ONE: m.tess.third_vertex(x, y, "right"),
        MINUS_ONE: m.tess.third_vertex(x, y, "left"),
    }


def _stable(m: MarkedTessellation, X, Y) -> bool:
    return not any(strictly_between(X, v, Y) for v in m.tess.vertices)


def vertex_value(m: MarkedTessellation, j: ExtendedRational, depth: int = 100000) -> ExtendedRational:
    """tau_j by direct descent of the index tree (the recursive definition)."""
    vals = _root_values(m)
    if j in vals:
        return vals[j]
    for lo, hi in ROOT_ARCS:
        if strictly_between(lo, j, hi):
            break
    X, Y = vals[lo], vals[hi]
    for _ in range(depth):
        mid = index_child(lo, hi)
        Z = m.tess.third_vertex(X, Y, "right")
        if mid == j:
            return Z
        if strictly_between(lo, j, mid):
            hi, Y = mid, Z
        else:
            lo, X = mid, Z
    raise VertexFunctionError(f"index {j} not reached within {depth} steps")


def vertex_function(m: MarkedTessellation, depth: int = DEFAULT_DEPTH, certify: bool = True) -> PPSL2ZMap:
    """The bijection j -> tau_j as a piecewise PSL(2,Z) map."""
    vals = _root_values(m)
    pieces = []
    arcs = []
    stack = [(lo, hi, vals[lo], vals[hi], 0) for lo, hi in reversed(ROOT_ARCS)]
    while stack:
        lo, hi, X, Y, d = stack.pop()
        if _stable(m, X, Y):
            pieces.append((lo, edge_map(lo, hi, X, Y)))
            arcs.append((lo, hi))
            continue
        if d >= depth:
            raise VertexFunctionError(f"no stabilization below index arc [{lo}, {hi}) within depth {depth}")
        mid = index_child(lo, hi)
        Z = m.tess.third_vertex(X, Y, "right")
        stack.append((mid, hi, Z, Y, d + 1))
        stack.append((lo, mid, X, Z, d + 1))
    f = PPSL2ZMap(pieces)
    if certify:
        _certify(m, f, arcs)
    return f


def _certify(m: MarkedTessellation, f: PPSL2ZMap, arcs) -> None:
    # breakpoints plus two interior points of every stable index arc
    pts = set(f.breakpoints)
    for lo, hi in arcs:
        mid = index_child(lo, hi)
        pts.update((lo, mid, index_child(lo, mid)))
    for p in pts:
        if f(p) != vertex_value(m, p):
            raise VertexFunctionError(f"certification failed at {p}")


__all__ = [
    "MarkedTessellation", "VertexFunctionError", "standard_marked", "apply_alpha", "apply_alpha_inv",
    "apply_beta", "apply_beta_inv", "apply_tword", "parse_tword", "invert_tword", "format_tword",
    "marked_equal", "vertex_function", "vertex_value", "index_child", "ROOT_ARCS", "edge",
]
