from typing import Optional

from hesse_flow.bokeh.utils import convert_color, template_environment
from hesse_flow.dessins import Dessin, combinatorial_passport
from hesse_flow.dessins.complex import ORIENTATION_CONVENTION
from hesse_flow.schemes import Scheme
from hesse_flow.utils import passport2str


def _quote(s: str) -> str:
    return s.replace('\\', '\\\\').replace('"', '\\"')


def render_dot(d: Dessin, scheme: Optional[Scheme] = None, template: str = 'dessin.dot.j2') -> str:
    """bipartite DOT graph, every vertex listing its edges in ccw order"""
    scheme = scheme or Scheme()

    def vertex(v: str):
        return {'id': _quote(v), 'rotation': _quote(','.join(d.rotation[v]))}

    edges = [{'id': _quote(e), 'black': _quote(b), 'white': _quote(w),
              'black_position': d.rotation[b].index(e), 'white_position': d.rotation[w].index(e)}
             for e, b, w in d.edges]
    templ = template_environment().get_template(template)
    return templ.render(
        name=f'Gamma_{d.level}',
        convention=ORIENTATION_CONVENTION,
        passport=passport2str(combinatorial_passport(d).partitions()),
        black=[vertex(v) for v in d.black],
        white=[vertex(v) for v in d.white],
        black_fill=convert_color(scheme.vertex_fill['over0']),
        white_fill=convert_color(scheme.vertex_fill['over1']),
        edges=edges,
    )
