from .drawing import (Drawing, Mark, Stroke, drawing_of_complex, drawing_of_dessin, drawing_of_geometric,
                      drawing_of_trace)
from .dot import render_dot
from .jsonio import dumps
from .svg import render_svg
