"""SVG pictures of marked and dotted tessellations in the Poincare disc."""

from __future__ import annotations

from dataclasses import dataclass

from tqc.exactnum import INF, ZERO, ExtendedRational, farey_apexes
from tqc.tessellation import Tessellation, sorted_triangles, tri_edges, triangle


@dataclass(frozen=True)
class RenderSpec:
    depth: int = 5
    width: int = 480
    height: int = 480
    show_doe: bool = True
    show_dots: bool = True
    show_labels: bool = True

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be at least 1")


def mu(x: ExtendedRational) -> complex:
    """Cayley transform (x - i)/(x + i) onto the unit circle."""
    if x.den == 0:
        return 1 + 0j
    t = x.num / x.den
    return (t - 1j) / (t + 1j)


class _Canvas:
    def __init__(self, spec: RenderSpec):
        self.spec = spec
        self.cx = spec.width / 2
        self.cy = spec.height / 2
        self.R = 0.45 * min(spec.width, spec.height)
        self.items = []

    def pt(self, z: complex) -> tuple:
        return self.cx + self.R * z.real, self.cy - self.R * z.imag

    @staticmethod
    def f(v: float) -> str:
        s = f"{v:.2f}"
        return "0.00" if s == "-0.00" else s

    def geodesic(self, a: ExtendedRational, b: ExtendedRational, cls: str, extra: str = "") -> None:
        p, q = mu(a), mu(b)
        x1, y1 = self.pt(p)
        x2, y2 = self.pt(q)
        cosd = (p * q.conjugate()).real
        f = self.f
        if cosd < -1 + 1e-12:
            d = f"M{f(x1)},{f(y1)} L{f(x2)},{f(y2)}"
        else:
            c = (p + q) / (1 + cosd)
            r = abs(p - c) * self.R
            cx, cy = self.pt(c)
            cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx)
            sweep = 1 if cross > 0 else 0
            d = f"M{f(x1)},{f(y1)} A{f(r)},{f(r)} 0 0 {sweep} {f(x2)},{f(y2)}"
        self.items.append(f'<path class="{cls}" d="{d}"{extra}/>')

    def circle(self, z: complex, r: float, cls: str) -> None:
        x, y = self.pt(z)
        self.items.append(f'<circle class="{cls}" cx="{self.f(x)}" cy="{self.f(y)}" r="{self.f(r)}"/>')

    def text(self, z: complex, s: str, cls: str) -> None:
        x, y = self.pt(z)
        self.items.append(f'<text class="{cls}" x="{self.f(x)}" y="{self.f(y)}">{s}</text>')

    def svg(self) -> str:
        w, h = self.spec.width, self.spec.height
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
            "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
            "markerHeight=\"7\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n"
            "<style>.disc{fill:none;stroke:#222;stroke-width:1.2}.edge{fill:none;stroke:#555;stroke-width:0.8}"
            ".diff{fill:none;stroke:#1f5fa8;stroke-width:1.4}.doe{fill:none;stroke:#c0392b;stroke-width:2.2}"
            ".dot{fill:#111}.label{font:10px sans-serif;text-anchor:middle;dominant-baseline:middle}</style>\n"
        )
        disc = f'<circle class="disc" cx="{self.f(self.cx)}" cy="{self.f(self.cy)}" r="{self.f(self.R)}"/>\n'
        return head + disc + "\n".join(self.items) + "\n</svg>\n"


def visible_triangles(tess: Tessellation, depth: int) -> list:
    """Triangles of ``tess`` down to the given Farey depth, plus every non-Farey one."""
    out = set(tess.triangles)
    frontier = [(ZERO, INF), (INF, ZERO)]
    seen = set()
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
    return sorted_triangles(out)


def _centroid(t) -> complex:
    return sum(mu(v) for v in t) / 3


def render(tess: Tessellation, spec: RenderSpec = RenderSpec(), doe=None, dots=None, labels=None) -> str:
    cv = _Canvas(spec)
    tris = visible_triangles(tess, spec.depth)
    edges = set()
    for t in tris:
        edges.update(tri_edges(t))
    diff_edges = {e for t in tess.triangles for e in tri_edges(t)}
    for e in sorted(edges, key=lambda e: (e[0].cyc_key(), e[1].cyc_key())):
        cv.geodesic(e[0], e[1], "diff" if e in diff_edges else "edge")
    if doe is not None and spec.show_doe:
        cv.geodesic(doe[0], doe[1], "doe", ' marker-end="url(#arrow)"')
    for t in tris:
        g = _centroid(t)
        if dots is not None and spec.show_dots:
            corner = dots(t)
            cv.circle(g + 0.5 * (mu(corner) - g), 2.2, "dot")
        if labels is not None and spec.show_labels and abs(g) < 0.8:
            cv.text(g, str(labels(t)).removesuffix("/1"), "label")
    return cv.svg()


def render_marked(m, spec: RenderSpec = RenderSpec()) -> str:
    return render(m.tess, spec, doe=m.doe)


def render_dotted(d, spec: RenderSpec = RenderSpec()) -> str:
    return render(d.tess, spec, dots=d.dot, labels=d.label)


__all__ = ["RenderSpec", "render", "render_marked", "render_dotted", "mu", "visible_triangles"]
