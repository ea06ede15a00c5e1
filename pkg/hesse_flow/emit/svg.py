import logging
from typing import Dict, List, Optional, Tuple

from markupsafe import escape

from hesse_flow.bokeh.utils import convert_color, is_double, svg_dasharray, template_environment
from hesse_flow.emit.drawing import Drawing, Point, Stroke
from hesse_flow.schemes import Scheme
from hesse_flow.utils import num2str


_logger = logging.getLogger(__name__)


class _Screen:
    """maps plane coordinates into the canvas, y pointing down, equal scale on both axes"""

    def __init__(self, viewport: Tuple[float, float, float, float], scheme: Scheme):
        xmin, xmax, ymin, ymax = viewport
        inner_w = scheme.canvas_width - 2 * scheme.margin
        inner_h = scheme.canvas_height - 2 * scheme.margin
        self.scale = min(inner_w / (xmax - xmin), inner_h / (ymax - ymin))
        self.xmin, self.ymin = xmin, ymin
        self.margin = scheme.margin
        self.height = scheme.canvas_height

    def __call__(self, p: Point) -> Tuple[str, str]:
        x = self.margin + (p[0] - self.xmin) * self.scale
        y = self.height - self.margin - (p[1] - self.ymin) * self.scale
        return num2str(x + 0.0), num2str(y + 0.0)


def _arrow(points: List[Point]) -> Tuple[Point, Point]:
    """short piece around the middle of a polyline, in its direction"""
    if len(points) == 2:
        (x0, y0), (x1, y1) = points
        return (x0 + 0.45 * (x1 - x0), y0 + 0.45 * (y1 - y0)), (x0 + 0.55 * (x1 - x0), y0 + 0.55 * (y1 - y0))
    k = len(points) // 2
    return points[k - 1], points[k]


def _stroke_context(s: Stroke, screen: _Screen, scheme: Scheme, arrows: bool) -> Dict[str, object]:
    if s.dessin:
        color, style, width = convert_color(scheme.dessin_edge_color), '-', scheme.dessin_line_width
    else:
        color = convert_color(scheme.decoration_color[s.decoration])
        style, width = scheme.decoration_linestyle[s.decoration], scheme.line_width
    double = is_double(style)
    coords = [screen(p) for p in s.points]
    d = 'M ' + ' L '.join(f'{x} {y}' for x, y in coords)
    arrow = None
    if arrows and scheme.show_arrows:
        (a, b) = _arrow(s.points)
        arrow = screen(a) + screen(b)
    return {
        'id': escape(s.id),
        'decoration': s.decoration,
        'd': d,
        'color': color,
        'width': num2str(2 * width + scheme.double_line_gap if double else width),
        'gap': num2str(scheme.double_line_gap if double else 0),
        'dasharray': svg_dasharray(style),
        'double': double,
        'arrow': arrow,
    }


def render_svg(drawing: Drawing, scheme: Optional[Scheme] = None, template: str = 'figure.svg.j2') -> str:
    scheme = scheme or Scheme()
    if drawing.viewport is None:
        drawing.fit()
    screen = _Screen(drawing.viewport, scheme)
    xmin, xmax, ymin, ymax = drawing.viewport
    strokes = [_stroke_context(s, screen, scheme, drawing.arrows) for s in drawing.strokes]
    marks = []
    for m in drawing.marks:
        if not (xmin <= m.x <= xmax and ymin <= m.y <= ymax):
            continue
        cx, cy = screen((m.x, m.y))
        marks.append({'id': escape(m.id), 'type': m.type, 'cx': cx, 'cy': cy, 'r': scheme.vertex_radius,
                      'fill': convert_color(scheme.vertex_fill[m.type])})
    dessin_edges = {s.decoration: s.dessin for s in drawing.strokes}
    arrow_colors = [(d, convert_color(scheme.dessin_edge_color if dessin_edges[d] else scheme.decoration_color[d]))
                    for d in sorted(dessin_edges)]
    templ = template_environment().get_template(template)
    svg = templ.render(
        width=scheme.canvas_width,
        height=scheme.canvas_height,
        title=escape(drawing.title),
        description=[escape(line) for line in drawing.description],
        background=convert_color(scheme.background_fill),
        vertex_line_color=convert_color(scheme.vertex_line_color),
        arrow_colors=arrow_colors,
        arrow_size=scheme.arrow_size,
        strokes=strokes,
        marks=marks,
    )
    _logger.debug(f'Rendered {drawing.title}: {len(strokes)} strokes, {len(marks)} marks')
    return svg
