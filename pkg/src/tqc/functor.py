"""From marked to dotted tessellations, and the homomorphism F on words.

The image of a marked tessellation labels the triangle with vertices
tau_{a/b}, tau_{(a+c)/(b+d)}, tau_{c/d} by (a+c)/(b+d) and puts its dot at
tau_{(a+c)/(b+d)}.  Away from finitely many triangles this is the inverse
vertex function evaluated at middle vertices, so the labelling is returned as
that map plus a finite patch.
"""

from __future__ import annotations

from functools import lru_cache

from tqc.dotted import (
    A,
    P,
    T,
    DottedTessellation,
    KLetter,
    QPermutation,
    build_dotted,
    register_permutation,
)
from tqc.exactnum import INF, MINUS_ONE, ONE, ZERO, middle_vertex
from tqc.marked import (
    ROOT_ARCS,
    MarkedTessellation,
    apply_tword,
    index_child,
    parse_tword,
    standard_marked,
    vertex_function,
)
from tqc.tessellation import is_farey_triangle, triangle


def functor_object(m: MarkedTessellation, depth: int = 4096) -> DottedTessellation:
    f = vertex_function(m)
    finv = f.inverse()
    x, y = m.doe
    r = m.tess.third_vertex(x, y, "right")
    l = m.tess.third_vertex(x, y, "left")
    vals = {ZERO: x, INF: y, ONE: r, MINUS_ONE: l}

    # (triangle, label, dot) for every triangle whose data may deviate from
    # "label = finv(middle), dot = middle"
    visited = [(triangle(x, r, y), ONE, r), (triangle(y, l, x), MINUS_ONE, l)]
    stack = [(lo, hi, vals[lo], vals[hi], 0) for lo, hi in ROOT_ARCS]
    verts = m.tess.vertices
    while stack:
        lo, hi, X, Y, d = stack.pop()
        mid = index_child(lo, hi)
        Z = m.tess.third_vertex(X, Y, "right")
        t = triangle(X, Z, Y)
        visited.append((t, mid, Z))
        stable = is_farey_triangle(t) and middle_vertex(t) == Z and not any(
            _inside(X, v, Y) for v in verts)
        if stable:
            continue
        if d >= depth:
            raise RuntimeError(f"labelling did not settle below [{lo}, {hi})")
        stack.append((lo, mid, X, Z, d + 1))
        stack.append((mid, hi, Z, Y, d + 1))

    interior, dots, fixed = {}, {}, {}
    for t, lab, dot in visited:
        if t in m.tess.triangles:
            interior[t] = lab
            dots[t] = dot
        else:
            fixed[middle_vertex(t)] = lab
            if dot != middle_vertex(t):
                dots[t] = dot
    for v in (x, y):
        if v.num != 0 and v.den != 0:
            tv = _farey_triangle(v)
            if not any(tv == t for t, _, _ in visited) and m.tess.has_triangle(tv):
                fixed[v] = middle_vertex(triangle(*(finv(u) for u in tv)))
    sigma = QPermutation(finv, {}, check=False)
    return build_dotted(m.tess, dots, sigma, interior, fixed)


def _inside(a, b, c) -> bool:
    from tqc.exactnum import strictly_between
    return strictly_between(a, b, c)


def _farey_triangle(v):
    from tqc.dotted import farey_triangle_of
    return farey_triangle_of(v)


def label_change(word) -> QPermutation:
    """Relabelling of the unchanged triangles of the standard tessellation under a move.

    For each label j of a triangle that survives the move, j maps to the label
    the same triangle carries in the image of the moved marked tessellation.
    Labels of destroyed triangles are matched in counterclockwise order.
    """
    m = apply_tword(standard_marked(), word)
    return functor_object(m).sigma


@lru_cache(maxsize=None)
def gamma_alpha() -> QPermutation:
    g = label_change(("a",))
    if not g.fixes(-1, 1):
        raise AssertionError("relabelling under alpha should fix -1 and 1")
    return g


@lru_cache(maxsize=None)
def gamma_beta() -> QPermutation:
    g = label_change(("b",))
    if not g.fixes(-1):
        raise AssertionError("relabelling under beta should fix -1")
    return g


register_permutation("ga", gamma_alpha)
register_permutation("gb", gamma_beta)


def F_alpha() -> tuple:
    return (A(-1), T(-1, 1, -1), A(1), P(gamma_alpha(), "ga"))


def F_beta() -> tuple:
    return (A(-1), P(gamma_beta(), "gb"))


def bold_F(w) -> tuple:
    """Letter-wise image of a T-word as a K-word."""
    if isinstance(w, str):
        w = parse_tword(w)
    out: list[KLetter] = []
    for letter in w:
        img = F_alpha() if letter[0] == "a" else F_beta()
        if letter.endswith("'"):
            img = tuple(x.inverse() for x in reversed(img))
        out.extend(img)
    return tuple(out)


__all__ = ["functor_object", "gamma_alpha", "gamma_beta", "bold_F", "label_change", "F_alpha", "F_beta"]
