import pytest
import sympy

from hesse_flow.dessins import build_Tn, dessin, double, ribbon_isomorphic
from hesse_flow.errors import GeometryViolation, SizeLimit
from hesse_flow.lattes import (EuclPoint, EuclTriangle, QuadField, build_geometric_Tn, fundamental_triangle,
                               lattice_consistency_check, subdivide_geometric, svg_layout)
from hesse_flow.lattes.geometry import angle_class

from tests.asserts.asserts import assert_counts, assert_euler

SQRT3 = QuadField.sqrt3()


def test_quadfield_arithmetic():
    a = QuadField(1, 2)
    assert a * a.conjugate() == a.norm() == -11
    assert a * a.inverse() == 1
    assert SQRT3 * SQRT3 == 3
    assert (SQRT3 / 3) * SQRT3 == 1
    assert 2 - a == QuadField(1, -2)
    assert str(QuadField(sympy.Rational(1, 2), -1)) == '1/2-1*sqrt3'


@pytest.mark.parametrize('value,sign', [
    (QuadField(2, -1), 1),
    (QuadField(1, -1), -1),
    (QuadField(-7, 4), -1),
    (QuadField(-6, 4), 1),
    (QuadField(0, 0), 0),
])
def test_quadfield_exact_sign(value, sign):
    assert value.sign() == sign
    assert (value > 0) == (sign > 0)


def test_fundamental_triangle():
    t = fundamental_triangle()
    assert t.angles() == (60, 90, 30)
    assert t.area() == SQRT3 / 2
    assert t.signed_area().sign() == -1
    assert t.hypotenuse2() == 4


def test_angle_class():
    o = EuclPoint(0, 0)
    assert angle_class(o, EuclPoint(1, 0), EuclPoint(0, 1)) == 90
    assert angle_class(o, EuclPoint(1, 0), EuclPoint(sympy.Rational(1, 2), SQRT3 / 2)) == 60
    assert angle_class(o, EuclPoint(1, 0), EuclPoint(1, 1)) is None


def test_subdivide_fundamental_triangle():
    children = subdivide_geometric(fundamental_triangle())
    assert len(children) == 3
    m1 = EuclPoint(0, SQRT3 / 3)
    m2 = EuclPoint(sympy.Rational(1, 2), SQRT3 / 2)
    assert [t.id for t in children] == ['F.0', 'F.1', 'F.2']
    assert [t.orientation for t in children] == [-1, 1, -1]
    assert children[0].corners == (m1, EuclPoint(0, 0), EuclPoint(1, 0))
    assert children[1].corners == (m1, m2, EuclPoint(1, 0))
    for child in children:
        assert child.angles() == (60, 90, 30)
        assert 3 * child.hypotenuse2() == 4
    assert sum((c.area() for c in children), QuadField()) == SQRT3 / 2


def test_subdivide_rejects_non_fundamental_shape():
    square = EuclTriangle('S', (EuclPoint(1, 0), EuclPoint(0, 0), EuclPoint(0, 1)))
    with pytest.raises(GeometryViolation):
        square.check()
    with pytest.raises(GeometryViolation):
        subdivide_geometric(square)


@pytest.mark.parametrize('n', [0, 1, 2, 3])
def test_geometric_Tn(n):
    g = build_geometric_Tn(n)
    assert len(g.triangles) == 3 ** n
    assert g.total_area() == SQRT3 / 2
    assert_euler(g.complex, 1)
    assert all(t.angles() == (60, 90, 30) for t in g.triangles)


def test_geometric_T1_counts():
    g = build_geometric_Tn(1)
    assert_counts(g.complex, 5, 7, 3)
    assert EuclPoint(0, SQRT3 / 3) in g.positions.values()


@pytest.mark.parametrize('n', range(1, 7))
def test_geometric_matches_combinatorial(n):
    assert ribbon_isomorphic(build_geometric_Tn(n).complex, build_Tn(n))
    assert ribbon_isomorphic(double(build_geometric_Tn(n).complex), double(build_Tn(n)))


def test_geometric_limit():
    with pytest.raises(SizeLimit):
        build_geometric_Tn(10)


def test_lattice_consistency():
    report = lattice_consistency_check()
    assert report.passed
    assert report.witness['|i*sqrt3|^2'] == '3'


def test_svg_layout_of_complex():
    T1 = build_Tn(1)
    layout = svg_layout(T1)
    assert layout.point('d0') == (1.0, 0.0)
    assert layout.point('d1') == (0.0, 0.0)
    x, y = layout.point('e1inf/m')
    assert x == 0.0 and y == pytest.approx(3 ** 0.5 / 3)
    assert layout.point('e1inf/m', mirrored=True) == (x, -y)
    marks = layout.marks(T1.vertices)
    # the three boundary vertices off the real axis appear twice
    assert len(marks) == 5 + 3


def test_svg_layout_of_dessin():
    d = dessin(2)
    layout = svg_layout(d)
    for edge_id, b, w in d.edges:
        (x0, y0), (x1, y1) = layout.segment(edge_id, b, w)
        if edge_id.endswith("'"):
            assert y0 <= 1e-12 and y1 <= 1e-12


def test_svg_layout_level_mismatch():
    with pytest.raises(ValueError):
        svg_layout(build_Tn(1), level=2)
