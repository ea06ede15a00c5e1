from .quadfield import EuclPoint, QuadField
from .geometry import (EuclTriangle, GeometricTn, Layout, build_geometric_Tn, fundamental_triangle, geometric_layout,
                       lattice_consistency_check, subdivide_geometric, svg_layout)
