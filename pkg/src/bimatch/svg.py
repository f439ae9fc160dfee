"""Deterministic SVG drawings of point sets, matchings and witness lines.

Coordinates are converted to decimals for display only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .geom import WHITE, DirectedLine, PointSet
from .matching import BRMatching

_SIZE = 480
_PAD = 30


def _num(v: float) -> str:
    s = "%.6f" % v
    s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Frame:
    def __init__(self, ps: PointSet):
        xs = [p.x for p in ps.points]
        ys = [p.y for p in ps.points]
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        w = max(self.x1 - self.x0, self.y1 - self.y0, Fraction(1))
        # square margin around the points; overlays are clipped to it
        m = w / 10
        self.x0, self.x1 = self.x0 - m, self.x0 + w + m
        self.y0, self.y1 = self.y0 - m, self.y0 + w + m
        self.k = Fraction(_SIZE - 2 * _PAD) / (self.x1 - self.x0)

    def map(self, p) -> tuple[float, float]:
        x = _PAD + (Fraction(p[0]) - self.x0) * self.k
        y = _SIZE - _PAD - (Fraction(p[1]) - self.y0) * self.k
        return float(x), float(y)

    def clip(self, line: DirectedLine):
        """Endpoints of the line inside the frame box (Liang-Barsky on exact values)."""
        (ox, oy), (dx, dy) = line.origin, line.direction
        lo, hi = None, None
        for p, q in ((-dx, ox - self.x0), (dx, self.x1 - ox), (-dy, oy - self.y0), (dy, self.y1 - oy)):
            if p == 0:
                if q < 0:
                    return None
                continue
            t = Fraction(q) / p
            if p < 0:
                lo = t if lo is None else max(lo, t)
            else:
                hi = t if hi is None else min(hi, t)
        if lo is None or hi is None or lo > hi:
            return None
        return (ox + lo * dx, oy + lo * dy), (ox + hi * dx, oy + hi * dy)


def render_svg(ps: PointSet, m: BRMatching | None = None, *,
               lines: Sequence[DirectedLine] = (), labels: dict | None = None,
               title: str | None = None) -> str:
    """White points hollow, black filled, segments as arrows white -> black.

    `labels` maps segment index -> text placed at the segment midpoint.
    """
    fr = _Frame(ps)
    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">'
           % (_SIZE, _SIZE, _SIZE, _SIZE),
           '<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" '
           'markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker></defs>',
           '<rect width="100%" height="100%" fill="white"/>']
    if title:
        out.append('<text x="%d" y="%d" font-size="14">%s</text>' % (_PAD, _PAD - 10, title))
    for line in lines:
        seg = fr.clip(line)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = fr.map(seg[0]), fr.map(seg[1])
        out.append('<line class="overlay" x1="%s" y1="%s" x2="%s" y2="%s" stroke="red" '
                   'stroke-dasharray="6,4"/>' % (_num(x1), _num(y1), _num(x2), _num(y2)))
    if m is not None:
        for k, s in enumerate(m.segments):
            (x1, y1), (x2, y2) = fr.map(ps[s.white].xy), fr.map(ps[s.black].xy)
            out.append('<line class="segment" x1="%s" y1="%s" x2="%s" y2="%s" stroke="black" '
                       'marker-end="url(#arrow)"/>' % (_num(x1), _num(y1), _num(x2), _num(y2)))
            if labels and k in labels:
                out.append('<text x="%s" y="%s" font-size="12" fill="blue">%s</text>'
                           % (_num((x1 + x2) / 2 + 4), _num((y1 + y2) / 2), labels[k]))
    for p in ps.points:
        x, y = fr.map(p.xy)
        fill = "white" if p.color is WHITE else "black"
        out.append('<circle class="point" cx="%s" cy="%s" r="4" fill="%s" stroke="black"/>'
                   % (_num(x), _num(y), fill))
    out.append("</svg>")
    return "\n".join(out) + "\n"
