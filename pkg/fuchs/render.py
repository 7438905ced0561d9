# Copyright (C) 2020-2020 Michael Kuyper. All rights reserved.
#
# This file is subject to the terms and conditions defined in file 'LICENSE',
# which is part of this source code package.

from typing import List, Optional, Tuple, Union

import svg

from dataclasses import dataclass, replace

from eventhub import Context
from halfplane import Geodesic, axis_of, reversing_axis
from moebius import BoundaryPoint, IsometryClass, MoebiusMap, classify
from seqsets import SequentialSetOfType
from system import GeneratorSystem

@dataclass(frozen=True)
class Item:
    GEODESIC = 'geodesic'
    AXIS     = 'axis'
    MIRROR   = 'mirror'
    CUSP     = 'cusp'

    style:str
    geodesic:Optional[Geodesic] = None
    point:Optional[BoundaryPoint] = None
    label:str = ''
    arrow:bool = False

    def xs(self) -> List[float]:
        if self.geodesic is not None:
            pts = [self.geodesic.p, self.geodesic.q]
        else:
            pts = [self.point] if self.point is not None else []
        return [b.value for b in pts if not b.is_infinite]

    @property
    def radius(self) -> float:
        if self.geodesic is None or self.geodesic.is_ray:
            return 0.0
        return abs(self.geodesic.p.value - self.geodesic.q.value) / 2


@dataclass(frozen=True)
class Scene:
    items:Tuple[Item,...] = ()
    viewport:Optional[Tuple[float,float,float]] = None # xmin, xmax, ymax

    def fit(self) -> 'Scene':
        xs = [x for it in self.items for x in it.xs()]
        if not xs:
            return replace(self, viewport=(-1.0, 1.0, 1.0))
        lo, hi = min(xs), max(xs)
        span = max(hi - lo, 1.0)
        pad = span / 10
        ymax = max([it.radius for it in self.items] + [span / 4]) * 1.15
        return replace(self, viewport=(lo - pad, hi + pad, ymax))

Drawable = Union[GeneratorSystem, SequentialSetOfType]

def _generator_items(roles:List[str], maps:List[MoebiusMap]) -> List[Item]:
    items = []
    for role, M in zip(roles, maps):
        cls = classify(M)
        if cls.tag == IsometryClass.HYPERBOLIC:
            items.append(Item(Item.AXIS, geodesic=axis_of(M), label=role, arrow=True))
        elif cls.tag == IsometryClass.PARABOLIC:
            items.append(Item(Item.CUSP, point=cls.alpha, label=role))
    return items

def scene_from_system(sys:Drawable) -> Scene:
    """Boundary geodesics, oriented generator axes, cusps and the mirror of sigma."""
    if isinstance(sys, SequentialSetOfType):
        items = _generator_items(sys.type.roles(), sys.gens)
    else:
        items = [Item(Item.GEODESIC, geodesic=l) for l in sys.geodesics]
        items += _generator_items(sys.roles, sys.maps)
        if sys.sigma.o < 0:
            items.append(Item(Item.MIRROR, geodesic=reversing_axis(sys.sigma), label='σ'))
    return Scene(tuple(items)).fit()


# -----------------------------------------------------------------------------
# SVG output

COLORS = {
    Item.GEODESIC: '#555555',
    Item.AXIS:     '#1f4e9c',
    Item.MIRROR:   '#b22222',
    Item.CUSP:     '#2a7a2a',
}

MARGIN = 24
ARROW  = 6

def _n(v:float) -> float:
    return round(v, 6) + 0.0

class _Canvas:
    def __init__(self, viewport:Tuple[float,float,float], width:int) -> None:
        self.xmin, xmax, self.ymax = viewport
        self.s = (width - 2 * MARGIN) / (xmax - self.xmin)
        self.width = width
        self.height = int(round(self.ymax * self.s)) + 2 * MARGIN
        self.base = self.height - MARGIN

    def x(self, x:float) -> float:
        return _n(MARGIN + (x - self.xmin) * self.s)

    def y(self, y:float) -> float:
        return _n(self.base - y * self.s)

    def arrow(self, x:float, y:float, dx:int, dy:int, color:str) -> svg.Polygon:
        # tip at (x, y), pointing along (dx, dy) in screen coordinates
        bx, by = x - dx * ARROW, y - dy * ARROW
        return svg.Polygon(points=[_n(x), _n(y), _n(bx - dy * ARROW / 2), _n(by + dx * ARROW / 2),
                _n(bx + dy * ARROW / 2), _n(by - dx * ARROW / 2)], fill=color)

    def label(self, x:float, y:float, text:str, color:str) -> svg.Text:
        return svg.Text(x=_n(x), y=_n(y), text=text, fill=color, font_size=12,
                font_family='sans-serif', text_anchor='middle')

    def geodesic(self, it:Item) -> List[svg.Element]:
        assert it.geodesic is not None
        color = COLORS[it.style]
        p, q = it.geodesic.p, it.geodesic.q
        out:List[svg.Element] = []
        if it.geodesic.is_ray:
            up = p.is_infinite
            x = self.x((q if up else p).value)
            d = [svg.M(x, self.y(0)), svg.L(x, self.y(self.ymax))]
            ax, ay, dx, dy = x, self.y(self.ymax / 2), 0, (-1 if up else 1)
        else:
            x1, x2 = self.x(q.value), self.x(p.value)
            r = _n(abs(x2 - x1) / 2)
            d = [svg.M(x1, self.y(0)), svg.Arc(r, r, 0, False, x2 > x1, x2, self.y(0))]
            ax, ay, dx, dy = _n((x1 + x2) / 2), self.y(0) - r, (1 if x2 > x1 else -1), 0
        dash = [6, 4] if it.style == Item.MIRROR else None
        out.append(svg.Path(d=d, stroke=color, stroke_width=1.5, fill='none',
                stroke_dasharray=dash, class_=[it.style]))
        if it.arrow:
            out.append(self.arrow(ax, ay, dx, dy, color))
        if it.label:
            out.append(self.label(ax, ay - 8, it.label, color))
        return out

    def cusp(self, it:Item) -> List[svg.Element]:
        assert it.point is not None
        if it.point.is_infinite:
            return []
        color = COLORS[Item.CUSP]
        x = self.x(it.point.value)
        out:List[svg.Element] = [svg.Circle(cx=x, cy=self.y(0), r=3.5, fill=color, class_=[Item.CUSP])]
        if it.label:
            out.append(self.label(x, self.y(0) + 16, it.label, color))
        return out

def render_svg(scene:Scene, *, context:Context={}) -> bytes:
    """Deterministic SVG document of a scene; items are drawn in input order."""
    if scene.viewport is None:
        scene = scene.fit()
    assert scene.viewport is not None
    cv = _Canvas(scene.viewport, int(context.get('render.width', 800)))
    elements:List[svg.Element] = [
        svg.Rect(x=0, y=0, width=cv.width, height=cv.height, fill='white'),
        svg.Line(x1=0, y1=cv.base, x2=cv.width, y2=cv.base, stroke='black', stroke_width=1),
    ]
    for it in scene.items:
        elements += cv.cusp(it) if it.style == Item.CUSP else cv.geodesic(it)
    doc = svg.SVG(width=cv.width, height=cv.height,
            viewBox=svg.ViewBoxSpec(0, 0, cv.width, cv.height), elements=elements)
    return (doc.as_str() + '\n').encode('utf-8')
