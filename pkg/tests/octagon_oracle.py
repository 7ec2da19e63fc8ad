"""Picture oracle for the dotted image of the sample octagon.

Label and dot positions were read off a hand drawing of the disc (radius
2.4, the real axis mapped by the Cayley transform).  Each point is located
in the hyperbolic plane independently of the library's combinatorics.
"""

from tqc.exactnum import INF, ZERO, ExtendedRational, farey_apexes
from tqc.tessellation import triangle

R = 2.4

LABELS = {"-1": (0.15, 1.30), "1": (-0.85, 1.22), "-2": (-0.35, 0.00),
          "-3/2": (0.50, -1.20), "-4/3": (1.20, 0.05), "-3": (-1.25, -0.74)}

DOTS = [(-1.18, 1.56), (0.90, 1.50), (-0.11, -1.54), (-1.70, 1.28), (-0.90, 1.96), (0.79, 1.95),
        (-1.60, -1.15), (1.03, -1.54), (-1.96, 1.07), (-1.96, -1.04), (-1.35, -1.65), (0.78, -1.98),
        (1.90, 0.00), (-0.90, -1.98), (1.64, -1.30), (1.62, 1.30), (1.87, -1.06), (1.87, 1.06)]


def to_half_plane(p):
    w = complex(*p) / R
    return 1j * (1 + w) / (1 - w)


def disc_point(x):
    return complex(R, 0) if x.is_inf else R * (float(x) - 1j) / (float(x) + 1j)


def _inside(p, q, z):
    # is z (complex, or an ExtendedRational on the boundary) inside the half-disc cut off by geodesic pq
    if p.is_inf or q.is_inf:
        x = float(q if p.is_inf else p)
        return (float(z) if isinstance(z, ExtendedRational) else z.real) > x
    c, r = (float(p) + float(q)) / 2, abs(float(p) - float(q)) / 2
    if isinstance(z, ExtendedRational):
        return not z.is_inf and abs(float(z) - c) < r
    return abs(z - c) < r


def _in_triangle(t, z):
    a, b, c = t
    return all(_inside(p, q, z) == _inside(p, q, o) for p, q, o in ((a, b, c), (b, c, a), (a, c, b)))


def _candidates(tess, depth=7):
    out = set(tess.triangles)
    frontier, seen = [(ZERO, INF)], set()
    for _ in range(depth):
        nxt = []
        for x, y in frontier:
            for m in farey_apexes(x, y):
                t = triangle(x, y, m)
                if t in seen:
                    continue
                seen.add(t)
                if tess.has_triangle(t):
                    out.add(t)
                nxt += [(x, m), (m, y)]
        frontier = nxt
    return out


def locate(tess, p):
    z = to_half_plane(p)
    hits = [t for t in _candidates(tess) if _in_triangle(t, z)]
    assert len(hits) == 1, hits
    return hits[0]


def nearest_corner(t, p):
    return min(t, key=lambda v: abs(disc_point(v) - complex(*p)))
