"""Farey-type tessellations stored as a finite diff from the Farey tessellation.

A tessellation is determined by the finite set of its triangles that are not
Farey triangles.  Everything else (support polygon, interior edges) is derived
from that set, so two tessellations are equal iff the sets are equal and the
representation is normalized by construction.
"""

from __future__ import annotations

from typing import Iterable

from tqc.exactnum import (
    INF,
    ZERO,
    ExtendedRational,
    farey_apexes,
    is_farey_edge,
    parse_rational,
    strictly_between,
)

Edge = tuple  # (a, b) sorted counterclockwise from 0
Triangle = tuple  # (a, b, c) sorted counterclockwise from 0


def _key(x: ExtendedRational):
    return x.cyc_key()


def edge(x: ExtendedRational, y: ExtendedRational) -> Edge:
    if x == y:
        raise ValueError("an edge needs two distinct endpoints")
    return (x, y) if _key(x) < _key(y) else (y, x)


def triangle(*vs: ExtendedRational) -> Triangle:
    if len(vs) == 1:
        vs = tuple(vs[0])
    if len(set(vs)) != 3:
        raise ValueError("a triangle needs three distinct vertices")
    return tuple(sorted(vs, key=_key))


def tri_edges(t: Triangle):
    a, b, c = t
    return (edge(a, b), edge(b, c), edge(a, c))


def is_farey_triangle(t: Triangle) -> bool:
    a, b, c = t
    return is_farey_edge(a, b) and is_farey_edge(b, c) and is_farey_edge(a, c)


def chords_cross(e: Edge, f: Edge) -> bool:
    a, b = e
    c, d = f
    if c in e or d in e:
        return False
    return strictly_between(a, c, b) != strictly_between(a, d, b)


def farey_apex(x: ExtendedRational, y: ExtendedRational, side: str) -> ExtendedRational:
    """Apex of the Farey triangle on ``side`` of the oriented edge x -> y."""
    p, q = farey_apexes(x, y)
    right = p if strictly_between(x, p, y) else q
    if side == "right":
        return right
    if side == "left":
        return q if right is p else p
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


class Tessellation:
    __slots__ = ("_tris", "_by_edge", "_hash", "_verts", "_removed")

    def __init__(self, triangles: Iterable[Triangle] = ()):
        tris = frozenset(triangle(t) for t in triangles)
        if any(is_farey_triangle(t) for t in tris):
            raise ValueError("Farey triangles belong to the implicit exterior")
        self._tris = tris
        by_edge: dict = {}
        for t in tris:
            for e in tri_edges(t):
                by_edge.setdefault(e, []).append(t)
        if any(len(v) > 2 for v in by_edge.values()):
            raise ValueError("an edge lies on more than two triangles")
        self._by_edge = by_edge
        self._verts = frozenset(v for t in tris for v in t)
        self._hash = None
        self._removed = None

    @property
    def triangles(self) -> frozenset:
        """The non-Farey triangles (those inside the support polygon that differ from Farey)."""
        return self._tris

    @property
    def support(self) -> set:
        return {e for e, ts in self._by_edge.items() if len(ts) == 1}

    @property
    def interior_edges(self) -> set:
        return {e for e, ts in self._by_edge.items() if len(ts) == 2}

    @property
    def interior_triangles(self) -> frozenset:
        return self._tris

    @property
    def vertices(self) -> frozenset:
        return self._verts

    def is_standard(self) -> bool:
        return not self._tris

    def contains_edge(self, x: ExtendedRational, y: ExtendedRational) -> bool:
        e = edge(x, y)
        if e in self._by_edge:
            return True
        if not is_farey_edge(x, y):
            return False
        return not any(chords_cross(e, f) for f in self._by_edge if not is_farey_edge(*f))

    def third_vertex(self, x: ExtendedRational, y: ExtendedRational, side: str = "right") -> ExtendedRational:
        """Apex of the triangle on the given side of the oriented edge x -> y."""
        e = edge(x, y)
        ts = self._by_edge.get(e)
        if ts is None and not self.contains_edge(x, y):
            raise ValueError(f"{{{x}, {y}}} is not an edge of the tessellation")
        want_right = side == "right"
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        for t in ts or ():
            apex = next(v for v in t if v != x and v != y)
            if strictly_between(x, apex, y) == want_right:
                return apex
        return farey_apex(x, y, side)

    def triangles_at(self, x: ExtendedRational, y: ExtendedRational) -> tuple[Triangle, Triangle]:
        """(right, left) triangles incident to the edge x -> y."""
        r = self.third_vertex(x, y, "right")
        l = self.third_vertex(x, y, "left")
        return triangle(x, y, r), triangle(x, y, l)

    def flip(self, x: ExtendedRational, y: ExtendedRational) -> tuple["Tessellation", Edge]:
        r = self.third_vertex(x, y, "right")
        l = self.third_vertex(x, y, "left")
        tris = set(self._tris)
        tris.discard(triangle(x, y, r))
        tris.discard(triangle(x, y, l))
        for t in (triangle(r, y, l), triangle(l, x, r)):
            if not is_farey_triangle(t):
                tris.add(t)
        return Tessellation(tris), edge(r, l)

    def removed_farey_triangles(self) -> frozenset:
        """Farey triangles that are not triangles of this tessellation.

        They all have their vertices on the support polygon, so a search over
        Farey edges between vertices of the diff finds every one of them.
        """
        if self._removed is None:
            verts = sorted(self._verts, key=_key)
            out = set()
            for i, a in enumerate(verts):
                for b in verts[i + 1:]:
                    if not is_farey_edge(a, b):
                        continue
                    for c in farey_apexes(a, b):
                        if c in self._verts:
                            t = triangle(a, b, c)
                            if t not in out and not self.has_triangle(t):
                                out.add(t)
            if len(out) != len(self._tris):
                raise AssertionError("diff bookkeeping broke: triangle counts differ")
            self._removed = frozenset(out)
        return self._removed

    def has_triangle(self, t: Triangle) -> bool:
        t = triangle(t)
        if t in self._tris:
            return True
        if not is_farey_triangle(t):
            return False
        return all(self.contains_edge(*e) for e in tri_edges(t))

    def __eq__(self, other):
        return isinstance(other, Tessellation) and self._tris == other._tris

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._tris)
        return self._hash

    def __repr__(self):
        return f"Tessellation({sorted_triangles(self._tris)})"

    def to_json(self) -> dict:
        def e2s(e):
            return [str(e[0]), str(e[1])]
        return {
            "support": [e2s(e) for e in sorted(self.support, key=_edge_key)],
            "interior_edges": [e2s(e) for e in sorted(self.interior_edges, key=_edge_key)],
            "interior_triangles": [[str(v) for v in t] for t in sorted_triangles(self._tris)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tessellation":
        return cls(triangle(*(parse_rational(v) for v in t)) for t in data.get("interior_triangles", []))


def _edge_key(e):
    return (_key(e[0]), _key(e[1]))


def sorted_triangles(ts) -> list:
    return sorted(ts, key=lambda t: tuple(_key(v) for v in t))


def standard_farey() -> Tessellation:
    return Tessellation()


def third_vertex(t: Tessellation, e, side: str) -> ExtendedRational:
    x, y = e
    return t.third_vertex(x, y, side)


def flip(t: Tessellation, e) -> tuple[Tessellation, Edge]:
    x, y = e
    return t.flip(x, y)


def tess_equal(t1: Tessellation, t2: Tessellation) -> bool:
    return t1 == t2


def from_polygon(vertices, diagonals) -> Tessellation:
    """Triangulate a polygon (vertices counterclockwise) by the given diagonals.

    The polygon sides must be Farey edges; every resulting triangle that is not
    a Farey triangle is kept.
    """
    verts = [parse_rational(v) for v in vertices]
    diags = {edge(parse_rational(a), parse_rational(b)) for a, b in diagonals}
    sides = {edge(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))}
    if not all(is_farey_edge(*s) for s in sides):
        raise ValueError("polygon sides must be Farey edges")
    edges = sides | diags
    tris = set()
    for i, a in enumerate(verts):
        for j in range(i + 1, len(verts)):
            for k in range(j + 1, len(verts)):
                b, c = verts[j], verts[k]
                if edge(a, b) in edges and edge(b, c) in edges and edge(a, c) in edges:
                    t = triangle(a, b, c)
                    if not any(chords_cross(d, e) for d in tri_edges(t) for e in diags):
                        tris.add(t)
    if len(tris) != len(verts) - 2:
        raise ValueError("diagonals do not triangulate the polygon")
    return Tessellation(t for t in tris if not is_farey_triangle(t))


__all__ = [
    "Edge", "Triangle", "Tessellation", "edge", "triangle", "tri_edges", "is_farey_triangle",
    "chords_cross", "farey_apex", "standard_farey", "third_vertex", "flip", "tess_equal",
    "from_polygon", "sorted_triangles", "INF", "ZERO",
]
