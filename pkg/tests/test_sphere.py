import pytest
import sympy

from hesse_flow.sphere import (SpherePoint, analytic_passport, critical_containment_check,
                               critical_containment_suite, critical_points_of_iterate, eval_H, eval_iterate,
                               fiber_degrees, forward_orbit, iterated_preimages, quartic_factor,
                               quartic_identity_check, solve_preimage, sorted_leaves, symbolic_iterate)
from hesse_flow.algebra import rf_evaluate

from tests.asserts.asserts import assert_close, assert_passport


def point(value) -> SpherePoint:
    return SpherePoint.from_value(value)


@pytest.mark.parametrize('h,expected', [
    (4, 0),
    (-8, 1),
    (1, 1),
    (2, 2 / 27),
    (0, None),
    (None, None),
])
def test_eval_H(h, expected):
    assert eval_H(point(h)) == point(expected)


def test_eval_H_is_projective():
    assert eval_H(SpherePoint(2, 1)) == eval_H(SpherePoint(6j, 3j))


def test_eval_H_commutes_with_conjugation():
    h = point(0.3 + 1.7j)
    assert eval_H(h.conjugate()).chordal_distance(eval_H(h).conjugate()) < 1e-12


def test_eval_iterate():
    assert_close(eval_iterate(2, point(2)).value, 297754 / 729, 1e-9)
    assert eval_iterate(2, point(1)) == point(1)
    assert eval_iterate(3, point(0)).is_infinity
    with pytest.raises(ValueError):
        eval_iterate(0, point(1))


def test_iterate_agrees_with_symbolic():
    H3 = symbolic_iterate(3)
    for h in (2, -3, 5):
        exact = rf_evaluate(H3, h)
        assert_close(eval_iterate(3, point(h)).value, complex(float(exact)), 1e-9 * max(1.0, abs(float(exact))))


def test_forward_orbit_of_zero():
    orbit = forward_orbit(point(0), 3)
    assert orbit[0] == point(0)
    assert all(p.is_infinity for p in orbit[1:])


def test_solve_preimage_critical_values():
    assert [(p.value, k) for p, k in solve_preimage(point(0))] == [(4, 3)]
    fiber = solve_preimage(point(1))
    assert [(p.value, k) for p, k in fiber] == [(-8, 2), (1, 1)]
    fiber = solve_preimage(SpherePoint.infinity())
    assert [k for _, k in fiber] == [2, 1]
    assert fiber[0][0] == point(0) and fiber[1][0].is_infinity


@pytest.mark.parametrize('c', [2.5, -1.0, 0.3 + 0.4j, 1e3, 1e-3])
def test_solve_preimage_generic(c):
    roots = solve_preimage(point(c))
    assert len(roots) == 3
    assert all(k == 1 for _, k in roots)
    for p, _ in roots:
        assert eval_H(p).chordal_distance(point(c)) < 1e-9


def test_iterated_preimages_tree():
    tree = iterated_preimages(point(0), 2)
    leaves = sorted_leaves(tree)
    assert len(leaves) == 3
    assert all(leaf.local_degree == 3 for leaf in leaves)
    assert all(eval_iterate(2, leaf.point).chordal_distance(point(0)) < 1e-9 for leaf in leaves)
    assert leaves[0].chain()[-1] is tree


def test_iterated_preimages_size():
    total = sum(leaf.local_degree for leaf in iterated_preimages(point(0.5), 3).leaves())
    assert total == 27


def test_near_critical_value_uses_exact_fiber():
    assert [(p.value, k) for p, k in solve_preimage(point(1e-12))] == [(4, 3)]


def test_fiber_degrees():
    assert fiber_degrees(point(1), 1) == (2, 1)
    assert fiber_degrees(SpherePoint.infinity(), 2) == (6, 2, 1)


def test_analytic_passport_level_one():
    passport = analytic_passport(1)
    assert_passport(passport, [3], [2, 1], [2, 1])
    assert passport.euler_count == 2


def test_analytic_passport_level_two():
    passport = analytic_passport(2)
    assert_passport(passport, [3, 3, 3], [2, 2, 2, 2, 1], [6, 2, 1])
    assert passport.euler_count == 2


@pytest.mark.parametrize('n', [3, 4])
def test_analytic_passport_is_planar(n):
    passport = analytic_passport(n)
    assert passport.euler_count == 2
    assert all(sum(part) == 3 ** n for part in passport.partitions())


def test_critical_points_of_iterate():
    assert len(critical_points_of_iterate(1)) == 3
    assert len(critical_points_of_iterate(2)) == 9


@pytest.mark.parametrize('n', range(1, 7))
def test_critical_containment(n):
    report = critical_containment_check(n)
    assert report.passed
    assert report.witness['critical_values'] == '0,1,inf'


def test_critical_containment_suite():
    report = critical_containment_suite(3)
    assert report.passed
    assert set(report.witness) == {'level_1', 'level_2', 'level_3'}


def test_quartic_identity():
    report = quartic_identity_check()
    assert report.passed
    assert report.witness['scalar'] == 1


def test_quartic_vanishes_on_traced_curve():
    # a non-real preimage of a real value lies on the quartic
    for p, _ in solve_preimage(point(0.5)):
        h = p.value
        if abs(h.imag) > 1e-6:
            q = quartic_factor().as_expr().subs({'x': h.real, 'y': h.imag})
            assert abs(float(q)) < 1e-6 * max(1.0, abs(h) ** 4)


def test_random_points_properties(rng):
    for _ in range(25):
        h = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        p = point(h)
        assert eval_H(p.conjugate()).chordal_distance(eval_H(p).conjugate()) < 1e-12
        for root, _ in solve_preimage(p):
            assert eval_H(root).chordal_distance(p) < 1e-9


def test_random_rationals_agree_with_symbolic_iterates(rng):
    for n in (1, 2):
        Hn = symbolic_iterate(n)
        assert Hn.degree == 3 ** n
        for _ in range(5):
            q = sympy.Rational(rng.randint(-50, 50), rng.randint(1, 20))
            exact = rf_evaluate(Hn, q)
            numeric = eval_iterate(n, point(float(q)))
            if exact is None:
                assert numeric.chordal_distance(SpherePoint.infinity()) < 1e-9
            else:
                assert numeric.chordal_distance(point(float(exact))) < 1e-9
