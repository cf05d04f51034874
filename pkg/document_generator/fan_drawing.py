"""SVG picture of a Groebner fan: unit rays, shaded cones, ideal labels."""

import math

from reportlab.graphics import renderSVG
from reportlab.graphics.shapes import Circle, Drawing, Line, Polygon, String
from reportlab.lib import colors

from toric.groebner import GroebnerFan2
from toric.ideals import format_monomial

SIZE = 480
RADIUS = 150
SHADES = [colors.HexColor(c) for c in ("#dbe9f6", "#fde2c8", "#d9f0d3", "#eadcf1", "#fff2b3", "#f6d5d5")]


def _unit(v, scale=RADIUS):
    length = math.hypot(*v)
    return SIZE / 2 + scale * v[0] / length, SIZE / 2 + scale * v[1] / length


def draw_fan(fan: GroebnerFan2) -> Drawing:
    d = Drawing(SIZE, SIZE)
    cx = cy = SIZE / 2

    for k, cone in enumerate(fan.cones):
        s, e = (fan.rays[i] for i in cone.rays)
        a0 = math.atan2(s[1], s[0])
        a1 = math.atan2(e[1], e[0])
        if a1 <= a0:
            a1 += 2 * math.pi
        steps = max(2, int(24 * (a1 - a0)))
        points = [cx, cy]
        for t in range(steps + 1):
            a = a0 + (a1 - a0) * t / steps
            points.extend([cx + RADIUS * math.cos(a), cy + RADIUS * math.sin(a)])
        d.add(Polygon(points, fillColor=SHADES[k % len(SHADES)], strokeColor=None))

        mid = (a0 + a1) / 2
        label = ", ".join(format_monomial(g) for g in cone.ideal.sorted_gens)
        d.add(String(cx + 0.6 * RADIUS * math.cos(mid), cy + 0.6 * RADIUS * math.sin(mid),
                     label, fontSize=7, textAnchor="middle"))

    for r in fan.rays:
        x, y = _unit(r)
        d.add(Line(cx, cy, x, y, strokeColor=colors.black, strokeWidth=1))
        lx, ly = _unit(r, RADIUS + 14)
        d.add(String(lx, ly, f"({r[0]},{r[1]})", fontSize=8, textAnchor="middle"))

    d.add(Circle(cx, cy, 2, fillColor=colors.black))
    return d


def fan_to_svg(fan: GroebnerFan2) -> str:
    return renderSVG.drawToString(draw_fan(fan))
