"""
Plot Module
SVG drawing of a corridor, its reflex points and convex chains, and a path.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import svgwrite

from . import config
from .minlink import BetaPath
from .minslope import Mcc
from .model import Corridor

Pixel = Tuple[float, float]


class Viewport:
    """Maps corridor coordinates onto the fixed SVG canvas (y grows upward)."""

    def __init__(self, corridor: Corridor, width: int = config.SVG_WIDTH,
                 height: int = config.SVG_HEIGHT, margin: int = config.SVG_MARGIN):
        self.width, self.height, self.margin = width, height, margin
        self.t0, self.t1 = corridor.t_start, corridor.t_end
        self.y0, self.y1 = min(corridor.lower), max(corridor.upper)

    def __call__(self, t: Fraction, y: Fraction) -> Pixel:
        inner_w = self.width - 2 * self.margin
        inner_h = self.height - 2 * self.margin
        x = self.margin + (t - self.t0) / (self.t1 - self.t0) * inner_w
        v = self.height - self.margin - (y - self.y0) / (self.y1 - self.y0) * inner_h
        return round(float(x), 3), round(float(v), 3)

    def points(self, points: Iterable[Tuple[Fraction, Fraction]]) -> List[Pixel]:
        return [self(t, y) for t, y in points]


def render_svg(corridor: Corridor, path: Optional[BetaPath] = None,
               mccs: Sequence[Mcc] = ()) -> str:
    """
    Draw a corridor as an SVG document.

    Args:
        corridor (Corridor): The corridor
        path (BetaPath): Optional ground path
        mccs: Optional convex chains to overlay

    Returns:
        str: The SVG text; identical inputs give identical text
    """
    view = Viewport(corridor)
    dwg = svgwrite.Drawing(size=(view.width, view.height), profile='full')
    dwg.attribs['viewBox'] = f"0 0 {view.width} {view.height}"

    band = corridor.upper_points() + corridor.lower_points()[::-1]
    dwg.add(dwg.polygon(points=view.points(band), class_='band', fill='#dde8f3', stroke='none'))
    dwg.add(dwg.polyline(points=view.points(corridor.lower_points()), class_='chain-lower',
                         fill='none', stroke='#1f5f99', stroke_width=1.5))
    dwg.add(dwg.polyline(points=view.points(corridor.upper_points()), class_='chain-upper',
                         fill='none', stroke='#99401f', stroke_width=1.5))

    for mcc in mccs:
        if len(mcc.vertices) < 2:
            continue
        chain = sorted(p.point for p in mcc.vertices)
        dwg.add(dwg.polyline(points=view.points(chain), class_='mcc', fill='none',
                             stroke='#6a3d9a', stroke_dasharray='4,3'))

    if path is not None:
        dwg.add(dwg.polyline(points=view.points(path.vertices), class_='path', fill='none',
                             stroke='#111111', stroke_width=2))

    for p in corridor.lower_reflex:
        dwg.add(dwg.circle(center=view(p.t, p.y), r=4, class_='reflex-lower', fill='#1f5f99'))
    for p in corridor.upper_reflex:
        dwg.add(dwg.circle(center=view(p.t, p.y), r=4, class_='reflex-upper', fill='#99401f'))
    return dwg.tostring()


def write_svg(out_file, text: str) -> None:
    with open(out_file, 'w', encoding='utf-8') as f:
        f.write(text)
        f.write('\n')
