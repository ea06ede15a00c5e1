from .complex import (DecoratedComplex, Decoration, Edge, Face, HalfEdges, Vertex, VertexType, double,
                      from_triangles)
from .substitution import SubstitutionPattern, base_triangle, build_Tn, subdivide, t1_pattern
from .dessin import CombinatorialPassport, Dessin, combinatorial_passport, dessin, dessin_of, extract_phi
from .isomorphism import IsomorphismResult, ribbon_isomorphic
