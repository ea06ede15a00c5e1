import logging
from typing import Dict, List, Optional

from bokeh.embed import file_html
from bokeh.layouts import column
from bokeh.models import Model
from bokeh.models.widgets import Div
from bokeh.resources import CDN

from hesse_flow.bokeh.figure import Figure
from hesse_flow.bokeh.utils import generate_stylesheet, template_environment
from hesse_flow.emit.drawing import Drawing
from hesse_flow.html import metadata
from hesse_flow.schemes import Scheme


_logger = logging.getLogger(__name__)


class FigureDocument:
    """Static HTML page holding bokeh figures of one or more drawings plus a metadata block."""

    def __init__(self, title: str, scheme: Optional[Scheme] = None):
        self.title = title
        self.scheme = scheme or Scheme()
        self.figures: List[Figure] = []
        self.params: Dict[str, object] = {}
        self.facts: Dict[str, object] = {}
        self.notes: List[str] = []
        self.model: Optional[Model] = None  # the generated model is kept here after generate_model

    def add_drawing(self, drawing: Drawing) -> Figure:
        fig = Figure(drawing, self.scheme)
        self.figures.append(fig)
        self.notes.extend(line for line in drawing.description if line not in self.notes)
        return fig

    def generate_model(self) -> Model:
        if not self.figures:
            raise RuntimeError(f'Document "{self.title}" has no figures')
        meta = Div(text=metadata.get_metadata_div(self.title, self.params, self.facts, self.notes))
        self.model = column(*[f.figure for f in self.figures], meta)
        return self.model

    def _output_stylesheet(self, template='basic.css.j2') -> str:
        return generate_stylesheet(self.scheme, template)

    def to_html(self, template='basic.html.j2') -> str:
        model = self.generate_model()
        templ = template_environment().get_template(template)
        html = file_html(model,
                         resources=CDN,
                         title=self.title,
                         template=templ,
                         template_variables=dict(
                             stylesheet=self._output_stylesheet(),
                             show_headline=self.scheme.show_headline,
                             headline=self.title,
                         ))
        _logger.info(f'Rendered HTML document "{self.title}" with {len(self.figures)} figures')
        return html
