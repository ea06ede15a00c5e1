from dataclasses import replace

import pytest

from hesse_flow.dessins import (DecoratedComplex, Decoration, Dessin, VertexType, base_triangle, build_Tn,
                                combinatorial_passport, dessin, dessin_of, double, extract_phi, from_triangles,
                                ribbon_isomorphic, subdivide, t1_pattern)
from hesse_flow.errors import InvalidComplex, SizeLimit
from hesse_flow.sphere import analytic_passport

from tests.asserts.asserts import assert_counts, assert_euler, assert_passport


@pytest.fixture(scope='module')
def T1() -> DecoratedComplex:
    return build_Tn(1)


def test_base_triangle():
    c = base_triangle().validate()
    assert_counts(c, 3, 3, 1)
    assert_euler(c, 1)
    assert {e.id: e.decoration for e in c.edges.values()} == {
        'e01': Decoration.int01, 'e1inf': Decoration.int1Inf, 'einf0': Decoration.intNeg}
    assert all(e.on_boundary for e in c.edges.values())


def test_level_one(T1):
    T1.validate()
    assert_counts(T1, 5, 7, 3)
    assert_euler(T1, 1)
    assert {e.id for e in T1.edges_by_decoration(Decoration.int01)} == {'e1inf/a', 'F/e1'}
    assert sorted(T1.faces) == ['F.0', 'F.1', 'F.2']
    assert [T1.faces[f].orientation for f in ('F.0', 'F.1', 'F.2')] == [-1, 1, -1]


def test_level_one_retypes_old_corners(T1):
    assert T1.vertex_type('d0') == VertexType.overInf
    assert T1.vertex_type('d1') == VertexType.over1
    assert T1.vertex_type('dinf') == VertexType.overInf
    assert T1.vertex_type('e1inf/m') == VertexType.over0
    assert T1.vertex_type('einf0/m') == VertexType.over1


def test_edges_follow_the_lifted_orientation(T1):
    tails = {Decoration.int01: VertexType.over0, Decoration.int1Inf: VertexType.over1,
             Decoration.intNeg: VertexType.overInf}
    for e in T1.edges.values():
        assert T1.vertex_type(e.v0) == tails[e.decoration]


@pytest.mark.parametrize('n', range(9))
def test_faces_and_euler(n):
    c = build_Tn(n).validate()
    assert len(c.faces) == 3 ** n
    assert_euler(c, 1)
    assert_euler(double(c).validate(), 2)


def test_checkerboard():
    c = build_Tn(3)
    he = c.half_edges()
    for h, k in enumerate(he.twin):
        if k is not None:
            assert c.faces[he.face[h]].orientation != c.faces[he.face[k]].orientation


def test_double(T1):
    sphere = double(T1).validate()
    assert sphere.closed
    assert_counts(sphere, 5, 9, 6)
    assert_euler(sphere, 2)
    assert "F.0'" in sphere.faces
    assert sphere.faces["F.0'"].orientation == -sphere.faces['F.0'].orientation
    with pytest.raises(InvalidComplex):
        double(sphere)


def test_rotation_needs_closed_complex(T1):
    he = T1.half_edges()
    with pytest.raises(InvalidComplex):
        he.rotation('d0')


def test_validate_rejects_wrong_decoration(T1):
    broken = DecoratedComplex(T1.level, dict(T1.vertices), dict(T1.edges), dict(T1.faces))
    e = broken.edges['F/e1']
    broken.edges['F/e1'] = replace(e, decoration=Decoration.intNeg)
    with pytest.raises(InvalidComplex):
        broken.validate()


def test_validate_rejects_missing_face(T1):
    broken = DecoratedComplex(T1.level, dict(T1.vertices), dict(T1.edges), dict(T1.faces))
    del broken.faces['F.1']
    with pytest.raises(InvalidComplex):
        broken.validate()


def test_validate_rejects_equal_flags_across_an_edge(T1):
    broken = DecoratedComplex(T1.level, dict(T1.vertices), dict(T1.edges), dict(T1.faces))
    broken.faces['F.0'] = replace(broken.faces['F.0'], orientation=1)
    with pytest.raises(InvalidComplex):
        broken.validate()


def test_from_triangles_matches_subdivision(T1):
    types = {v.id: v.type for v in T1.vertices.values()}
    rebuilt = from_triangles(1, types, [(f.id, f.corners, f.orientation) for f in T1.faces.values()]).validate()
    assert_counts(rebuilt, 5, 7, 3)
    assert ribbon_isomorphic(rebuilt, T1)


def test_subdivide_refuses_closed():
    with pytest.raises(InvalidComplex):
        subdivide(double(base_triangle()))


def test_build_limits():
    with pytest.raises(SizeLimit):
        build_Tn(13)
    with pytest.raises(ValueError):
        build_Tn(-1)


def test_extract_phi(T1):
    phi = extract_phi(T1)
    assert phi.black == ['e1inf/m']
    assert phi.white == ['d1', 'einf0/m']
    assert len(phi.edges) == 2


def test_dessin_level_one():
    d = dessin(1).validate()
    assert len(d.edges) == 3
    assert d.black == ['e1inf/m']
    assert d.degree('e1inf/m') == 3
    assert d.degree('einf0/m') == 2
    assert d.degree('d1') == 1
    assert d.euler == 2
    assert_passport(combinatorial_passport(d), [3], [2, 1], [2, 1])


def test_dessin_level_two():
    d = dessin(2).validate()
    assert (len(d.black), len(d.white), len(d.edges), len(d.faces())) == (3, 5, 9, 3)
    assert_passport(combinatorial_passport(d), [3, 3, 3], [2, 2, 2, 2, 1], [6, 2, 1])


@pytest.mark.parametrize('n', range(1, 7))
def test_passports_agree(n):
    assert combinatorial_passport(dessin(n)).partitions() == analytic_passport(n).partitions()


def test_dessin_edges_grow_by_three():
    for n in range(1, 7):
        assert len(dessin(n).edges) == 3 ** n


def test_dessin_is_isomorphic_to_itself():
    d = dessin(3)
    result = ribbon_isomorphic(d, dessin_of(double(build_Tn(3))))
    assert result
    assert set(result.witness) == {e for e, _, _ in d.edges}


@pytest.fixture
def chiral_tree() -> Dessin:
    # b0 has white neighbours of degrees 1, 2 and 3, so its cyclic order has no symmetry
    edges = [('a', 'b0', 'wa'), ('b', 'b0', 'wb'), ('c', 'b0', 'wc'), ('d', 'b1', 'wb'), ('e', 'b2', 'wc'),
             ('f', 'b3', 'wc')]
    rotation = {'b0': ['a', 'b', 'c'], 'b1': ['d'], 'b2': ['e'], 'b3': ['f'],
                'wa': ['a'], 'wb': ['b', 'd'], 'wc': ['c', 'e', 'f']}
    return Dessin(1, ['b0', 'b1', 'b2', 'b3'], ['wa', 'wb', 'wc'], edges, rotation).validate()


def test_reversed_rotation_is_not_isomorphic(chiral_tree):
    reversed_tree = chiral_tree.with_reversed_rotation('b0').validate()
    assert combinatorial_passport(reversed_tree).partitions() == combinatorial_passport(chiral_tree).partitions()
    assert not ribbon_isomorphic(chiral_tree, reversed_tree)


def test_reversal_between_equivalent_leaves_is_absorbed(chiral_tree):
    result = ribbon_isomorphic(chiral_tree, chiral_tree.with_reversed_rotation('wc'))
    assert result
    assert result.witness == {'a': 'a', 'b': 'b', 'c': 'c', 'd': 'd', 'e': 'f', 'f': 'e'}


def test_reversal_at_parallel_edges_is_absorbed():
    d = dessin(2)
    v = next(b for b in d.black if len({w for _, bb, w in d.edges if bb == b}) < d.degree(b))
    assert ribbon_isomorphic(d, d.with_reversed_rotation(v))


def test_mirror_dessin_is_isomorphic():
    d = dessin(2)
    mirror = d
    for v in d.black + d.white:
        mirror = mirror.with_reversed_rotation(v)
    assert ribbon_isomorphic(d, mirror)


def test_isomorphism_argument_checks():
    with pytest.raises(TypeError):
        ribbon_isomorphic(dessin(1), build_Tn(1))
    with pytest.raises(ValueError):
        ribbon_isomorphic(dessin(1), dessin(2))


def test_to_dict(T1):
    d = T1.to_dict()
    assert d['orientation_convention'] == 'upper-half-plane-positive'
    assert len(d['faces']) == 3
    assert {f['orientation'] for f in d['faces']} == {'+', '-'}
    dd = dessin(1).to_dict()
    assert dd['passport'] == {'level': 1, 'black': [3], 'white': [2, 1], 'faces': [2, 1]}


def test_t1_pattern_is_normalized():
    pattern = t1_pattern()
    assert pattern.split_of('dinf', 'd1') == 'm1'
    assert pattern.split_of('d0', 'd1') is None
    assert pattern.new_type('d0') == VertexType.overInf
    assert pattern.new_type('m2') == VertexType.over1
