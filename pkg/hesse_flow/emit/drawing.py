import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from hesse_flow.utils import data_range
from hesse_flow.dessins import DecoratedComplex, Dessin
from hesse_flow.lattes import GeometricTn, Layout, geometric_layout
from hesse_flow.sphere import TraceResult


_logger = logging.getLogger(__name__)

DECORATION_LEGEND = '(0,1) solid, (1,inf) dashed, (inf,0) double stroke; arrows point from negative to positive numbers'

Point = Tuple[float, float]


@dataclass
class Stroke:
    id: str
    decoration: str
    points: List[Point]  # tail first
    dessin: bool = False


@dataclass
class Mark:
    id: str
    type: str
    x: float
    y: float


@dataclass
class Drawing:
    """Plane picture of a structure: strokes, vertex marks and the visible window."""
    title: str
    strokes: List[Stroke] = field(default_factory=list)
    marks: List[Mark] = field(default_factory=list)
    viewport: Optional[Tuple[float, float, float, float]] = None
    description: List[str] = field(default_factory=list)
    arrows: bool = True

    def fit(self):
        xs = [x for s in self.strokes for x, _ in s.points] + [m.x for m in self.marks]
        ys = [y for s in self.strokes for _, y in s.points] + [m.y for m in self.marks]
        self.viewport = data_range(xs) + data_range(ys)
        return self

    def count(self, decoration: str = None) -> int:
        return sum(1 for s in self.strokes if decoration is None or s.decoration == decoration)


def drawing_of_complex(c: DecoratedComplex, layout: Layout, title: str = None) -> Drawing:
    drawing = Drawing(title or f'T_{c.level}', description=[DECORATION_LEGEND])
    for e in c.edges.values():
        drawing.strokes.append(Stroke(e.id, e.decoration.value, list(layout.segment(e.id, e.v0, e.v1))))
    for vid, x, y in layout.marks(c.vertices):
        drawing.marks.append(Mark(vid, c.vertices[vid].type.value, x, y))
    return drawing.fit()


def drawing_of_geometric(g: GeometricTn, title: str = None) -> Drawing:
    return drawing_of_complex(g.complex, geometric_layout(g), title or f'T_{g.level} (euclidean)')


def drawing_of_dessin(d: Dessin, layout: Layout, title: str = None) -> Drawing:
    drawing = Drawing(title or f'Gamma_{d.level}', arrows=False,
                      description=['black vertices over 0, white vertices over 1; mirror copy reflected across the real axis'])
    for edge_id, b, w in d.edges:
        drawing.strokes.append(Stroke(edge_id, 'int01', list(layout.segment(edge_id, b, w)), dessin=True))
    types = {v: 'over0' for v in d.black}
    types.update({v: 'over1' for v in d.white})
    for vid, x, y in layout.marks(d.black + d.white):
        drawing.marks.append(Mark(vid, types[vid], x, y))
    return drawing.fit()


def _visible_runs(points, clip: float) -> List[List[Point]]:
    """splits a traced curve where it leaves the clipping disk"""
    runs, current = [], []
    for p in points:
        v = p.value
        if v is None or abs(v) > clip or not math.isfinite(abs(v)):
            if len(current) > 1:
                runs.append(current)
            current = []
        else:
            current.append((v.real, v.imag))
    if len(current) > 1:
        runs.append(current)
    return runs


def drawing_of_trace(trace: TraceResult, x_range: Tuple[float, float], y_range: Tuple[float, float],
                     clip: float = 1e3, title: str = None) -> Drawing:
    drawing = Drawing(title or f'G_{trace.level}', viewport=x_range + y_range, description=[DECORATION_LEGEND])
    seen = []
    for k, polyline in enumerate(trace.polylines):
        for r, run in enumerate(_visible_runs(polyline.points, clip)):
            drawing.strokes.append(Stroke(f'{polyline.decoration}.{k}.{r}', polyline.decoration, run))
        for point, t in ((polyline.start, polyline.start_type), (polyline.end, polyline.end_type)):
            if point.is_infinity or any(point.isclose(q, 1e-9) for q in seen):
                continue
            seen.append(point)
            drawing.marks.append(Mark(f'h={point.value.real:.6g}{point.value.imag:+.6g}j', t,
                                      point.value.real, point.value.imag))
    _logger.debug(f'Trace drawing: {len(drawing.strokes)} strokes, {len(drawing.marks)} marks')
    return drawing
