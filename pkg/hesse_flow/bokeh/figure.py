import logging
from collections import defaultdict
from typing import Dict, List, Optional

from bokeh.models import ColumnDataSource, HoverTool, Range1d, Renderer
from bokeh.plotting import figure

from hesse_flow.bokeh.utils import convert_color, convert_linestyle, is_double
from hesse_flow.emit.drawing import Drawing
from hesse_flow.schemes import Scheme


_logger = logging.getLogger(__name__)


class Figure:
    """bokeh rendition of a Drawing: one multi_line per decoration, one scatter per vertex type"""
    _tools = 'pan,wheel_zoom,box_zoom,reset,save'

    def __init__(self, drawing: Drawing, scheme: Optional[Scheme] = None):
        self._drawing = drawing
        self._scheme = scheme or Scheme()
        self.figure = None
        self.renderers: Dict[str, List[Renderer]] = defaultdict(list)
        self._init_figure()
        self.plot_strokes()
        self.plot_marks()

    def _init_figure(self):
        xmin, xmax, ymin, ymax = self._drawing.viewport
        f = figure(tools=Figure._tools, title=self._drawing.title, match_aspect=True,
                   width=self._scheme.canvas_width, height=self._scheme.canvas_height,
                   x_range=Range1d(xmin, xmax), y_range=Range1d(ymin, ymax),
                   sizing_mode=self._scheme.plot_sizing_mode, toolbar_location=self._scheme.toolbar_location)

        f.border_fill_color = convert_color(self._scheme.border_fill)
        f.background_fill_color = convert_color(self._scheme.background_fill)
        f.xaxis.axis_line_color = convert_color(self._scheme.axis_line_color)
        f.yaxis.axis_line_color = convert_color(self._scheme.axis_line_color)
        f.xgrid.grid_line_color = convert_color(self._scheme.grid_line_color)
        f.ygrid.grid_line_color = convert_color(self._scheme.grid_line_color)
        f.title.text_color = convert_color(self._scheme.headline_color)
        self.figure = f

    def plot_strokes(self):
        groups = defaultdict(list)
        for s in self._drawing.strokes:
            groups[(s.decoration, s.dessin)].append(s)

        for (decoration, dessin), strokes in sorted(groups.items()):
            source = ColumnDataSource(dict(
                xs=[[x for x, _ in s.points] for s in strokes],
                ys=[[y for _, y in s.points] for s in strokes],
                id=[s.id for s in strokes],
            ))
            if dessin:
                color, style = self._scheme.dessin_edge_color, '-'
                width = self._scheme.dessin_line_width
            else:
                color, style = self._scheme.decoration_color[decoration], self._scheme.decoration_linestyle[decoration]
                width = self._scheme.line_width
            double = is_double(style)
            ren = self.figure.multi_line(xs='xs', ys='ys', source=source, line_color=convert_color(color),
                                         line_width=2 * width + self._scheme.double_line_gap if double else width,
                                         line_dash=convert_linestyle(style), legend_label=decoration)
            self.renderers[decoration].append(ren)
            if double:
                gap = self.figure.multi_line(xs='xs', ys='ys', source=source, line_width=self._scheme.double_line_gap,
                                             line_color=convert_color(self._scheme.background_fill))
                self.renderers[decoration].append(gap)
        if self.figure.legend:
            self.figure.legend.location = 'top_left'

    def plot_marks(self):
        groups = defaultdict(list)
        for m in self._drawing.marks:
            groups[m.type].append(m)

        hover_renderers = []
        for vertex_type, marks in sorted(groups.items()):
            source = ColumnDataSource(dict(
                x=[m.x for m in marks],
                y=[m.y for m in marks],
                id=[m.id for m in marks],
            ))
            ren = self.figure.scatter(x='x', y='y', source=source, marker='circle', size=2 * self._scheme.vertex_radius,
                                      fill_color=convert_color(self._scheme.vertex_fill[vertex_type]),
                                      line_color=convert_color(self._scheme.vertex_line_color))
            self.renderers[vertex_type].append(ren)
            hover_renderers.append(ren)
        if hover_renderers:
            self.figure.add_tools(HoverTool(renderers=hover_renderers, tooltips=[('vertex', '@id'), ('h', '(@x, @y)')]))
        _logger.debug(f'Figure {self._drawing.title}: {sum(len(r) for r in self.renderers.values())} renderers')

    @property
    def glyph_count(self) -> int:
        return sum(len(r) for r in self.renderers.values())
