import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import sympy

from hesse_flow.dessins import DecoratedComplex, Dessin, VertexType, build_Tn, from_triangles, t1_pattern
from hesse_flow.dessins.complex import CORNER_ORDER
from hesse_flow.errors import GeometryViolation, IdentityFailed
from hesse_flow.lattes.quadfield import EuclPoint, QuadField
from hesse_flow.pencil.invariants import hessian_h_map
from hesse_flow.report import ProofReport
from hesse_flow.utils import check_size


_logger = logging.getLogger(__name__)

MAX_LEVEL = 9

SQRT3 = QuadField.sqrt3()

# angle at the corner over 0, 1 and inf
CORNER_ANGLES = (60, 90, 30)

LATTICE_ANCHOR = 'i*sqrt3 maps Z + Z*eps into itself, |i*sqrt3|^2 = deg H = 3'


def angle_class(at: EuclPoint, p: EuclPoint, q: EuclPoint) -> Optional[int]:
    """90, 60 or 30 when the angle p-at-q is one of them, decided exactly"""
    u, v = p - at, q - at
    d = u.dot(v)
    n = u.norm2() * v.norm2()
    if d == 0:
        return 90
    if d.sign() > 0 and 4 * d * d == n:
        return 60
    if d.sign() > 0 and 4 * d * d == 3 * n:
        return 30
    return None


@dataclass
class EuclTriangle:
    id: str
    corners: Tuple[EuclPoint, EuclPoint, EuclPoint]  # over0, over1, overInf
    orientation: int = 1

    def corner(self, t: VertexType) -> EuclPoint:
        return self.corners[CORNER_ORDER.index(t)]

    def signed_area(self) -> QuadField:
        p0, p1, pinf = self.corners
        return (p1 - p0).cross(pinf - p0) * sympy.Rational(1, 2)

    def area(self) -> QuadField:
        a = self.signed_area()
        return a if a.sign() >= 0 else -a

    def hypotenuse2(self) -> QuadField:
        return (self.corners[2] - self.corners[0]).norm2()

    def angles(self) -> Tuple[Optional[int], ...]:
        p0, p1, pinf = self.corners
        return angle_class(p0, p1, pinf), angle_class(p1, pinf, p0), angle_class(pinf, p0, p1)

    def check(self) -> 'EuclTriangle':
        if self.angles() != CORNER_ANGLES:
            raise GeometryViolation(f'Triangle {self.id} has angles {self.angles()}, expected {CORNER_ANGLES}')
        return self


def fundamental_triangle() -> EuclTriangle:
    return EuclTriangle('F', (EuclPoint(1, 0), EuclPoint(0, 0), EuclPoint(0, SQRT3)), 1).check()


# flags are positive for triangles turning the same way as the fundamental one
_BASE_SIGN = fundamental_triangle().signed_area().sign()


def _flag(t: EuclTriangle) -> int:
    return t.signed_area().sign() * _BASE_SIGN


def subdivide_geometric(t: EuclTriangle) -> List[EuclTriangle]:
    pattern = t1_pattern()
    p0, p1, pinf = t.corners
    points = {'d0': p0, 'd1': p1, 'dinf': pinf}

    # m1 cuts the long leg at a third of its length from the right angle
    points['m1'] = p1.scale(sympy.Rational(2, 3)) + pinf.scale(sympy.Rational(1, 3))
    # m2 is the foot of the perpendicular from m1 onto the hypotenuse
    hyp = p0 - pinf
    s = (points['m1'] - pinf).dot(hyp) / hyp.norm2()
    if not (0 < s < 1) or not s.is_rational():
        raise GeometryViolation(f'Perpendicular foot from m1 falls at {s} on the hypotenuse of {t.id}')
    points['m2'] = pinf + hyp.scale(s)

    for role, (ra, rb), _ in pattern.new_vertices:
        a, b = points[ra], points[rb]
        if (points[role] - a).cross(b - a) != 0:
            raise GeometryViolation(f'{role} is off the edge ({ra}, {rb}) of {t.id}')

    children = []
    for k, (r0, r1, rinf, flag) in enumerate(pattern.faces):
        child = EuclTriangle(f'{t.id}.{k}', (points[r0], points[r1], points[rinf]), flag * t.orientation).check()
        if _flag(child) != child.orientation:
            raise GeometryViolation(f'Triangle {child.id} turns against its orientation flag')
        if 3 * child.hypotenuse2() != t.hypotenuse2():
            raise GeometryViolation(f'Triangle {child.id} is not similar to {t.id} with ratio 1/sqrt3')
        children.append(child)

    # straight angles at the inserted vertices
    for role in ('m1', 'm2'):
        total = 0
        for child, (r0, r1, rinf, _) in zip(children, pattern.faces):
            for angle, r in zip(CORNER_ANGLES, (r0, r1, rinf)):
                if r == role:
                    total += angle
        if total != 180:
            raise GeometryViolation(f'Angles at {role} in {t.id} sum to {total}')

    if sum((c.area() for c in children), QuadField()) != t.area():
        raise GeometryViolation(f'Subdivision of {t.id} does not conserve area')
    return children


@dataclass
class GeometricTn:
    level: int
    triangles: List[EuclTriangle]
    complex: DecoratedComplex
    positions: Dict[str, EuclPoint] = field(default_factory=dict)

    def total_area(self) -> QuadField:
        return sum((t.area() for t in self.triangles), QuadField())


def build_geometric_Tn(n: int) -> GeometricTn:
    if n < 0:
        raise ValueError(f'Level must be non-negative, got {n}')
    check_size('build_geometric_Tn', n, MAX_LEVEL)
    triangles = [fundamental_triangle()]
    for _ in range(n):
        triangles = [child for t in triangles for child in subdivide_geometric(t)]

    ids: Dict[EuclPoint, str] = {}
    types: Dict[str, VertexType] = {}
    faces = []
    for t in triangles:
        corners = []
        for vt, p in zip(CORNER_ORDER, t.corners):
            vid = ids.setdefault(p, f'v{len(ids)}')
            if types.setdefault(vid, vt) != vt:
                raise GeometryViolation(f'Vertex {p} is a corner over {types[vid].value} and over {vt.value}')
            corners.append(vid)
        faces.append((t.id, corners, t.orientation))
    c = from_triangles(n, types, faces).validate()
    _logger.info(f'Built geometric T_{n}: {len(triangles)} triangles')
    return GeometricTn(n, triangles, c, {vid: p for p, vid in ids.items()})


def lattice_consistency_check() -> ProofReport:
    """multiplication by i*sqrt3 preserves the lattice Z + Z*eps, eps = exp(i pi/3), and has degree 3"""
    check_id = 'lattice'
    one = EuclPoint(1, 0)
    eps = EuclPoint(sympy.Rational(1, 2), QuadField(0, sympy.Rational(1, 2)))
    i_sqrt3 = EuclPoint(0, SQRT3)

    def lattice(a: int, b: int) -> EuclPoint:
        return one.scale(a) + eps.scale(b)

    for image, (a, b) in ((i_sqrt3.times(one), (-1, 2)), (i_sqrt3.times(eps), (-2, 1))):
        if image != lattice(a, b):
            raise IdentityFailed(check_id, image - lattice(a, b))
    degree = hessian_h_map().degree
    if i_sqrt3.norm2() != degree:
        raise IdentityFailed(check_id, f'|i sqrt3|^2 = {i_sqrt3.norm2()} != deg H = {degree}')
    return ProofReport(check_id, LATTICE_ANCHOR, witness={
        'i*sqrt3 * 1': '-1 + 2*eps',
        'i*sqrt3 * eps': '-2 + eps',
        '|i*sqrt3|^2': str(i_sqrt3.norm2()),
    })


def _mirrored(vid: str) -> bool:
    return vid.endswith("'")


class Layout:
    """Exact placement of a complex or dessin of some level in the fundamental triangle.

    The mirror copy of a doubled structure is drawn reflected across the real axis.
    """

    def __init__(self, positions: Dict[str, EuclPoint], boundary: Dict[str, bool]):
        self.positions = positions
        self.boundary = boundary

    def point(self, vid: str, mirrored: bool = False) -> Tuple[float, float]:
        base = vid.rstrip("'")
        p = self.positions[base]
        if mirrored or _mirrored(vid):
            p = p.reflect()
        return p.to_floats()

    def segment(self, edge_id: str, v0: str, v1: str) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        mirrored = _mirrored(edge_id)
        return self.point(v0, mirrored), self.point(v1, mirrored)

    def marks(self, vertices) -> List[Tuple[str, float, float]]:
        """vertex markers; boundary vertices off the real axis are shown at both of their places"""
        result = []
        for vid in vertices:
            x, y = self.point(vid)
            result.append((vid, x, y))
            base = vid.rstrip("'")
            if self.boundary.get(base) and self.positions[base].y != 0:
                result.append((vid, x, -y))
        return result


def svg_layout(c: Union[DecoratedComplex, Dessin], level: int = None) -> Layout:
    level = c.level if level is None else level
    if level != c.level:
        raise ValueError(f'Layout level {level} differs from the level {c.level} of the structure')
    combinatorial = build_Tn(level)
    geometric = build_geometric_Tn(level)
    triangles = {t.id: t for t in geometric.triangles}
    positions = {}
    for f in combinatorial.faces.values():
        for vid, p in zip(f.corners, triangles[f.id].corners):
            if positions.setdefault(vid, p) != p:
                raise GeometryViolation(f'Vertex {vid} is placed twice')
    boundary = {v.id: v.on_boundary for v in combinatorial.vertices.values()}
    ids = c.black + c.white if isinstance(c, Dessin) else list(c.vertices)
    missing = [v for v in ids if v.rstrip("'") not in positions]
    if missing:
        raise GeometryViolation(f'No position for vertices {missing[:5]}')
    _logger.debug(f'Layout of level {level}: {len(positions)} vertices')
    return Layout(positions, boundary)


def geometric_layout(g: GeometricTn) -> Layout:
    return Layout(g.positions, {v.id: v.on_boundary for v in g.complex.vertices.values()})
