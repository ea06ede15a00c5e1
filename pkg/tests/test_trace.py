import numpy
import pytest

from hesse_flow.dessins import SubstitutionPattern, t1_pattern
from hesse_flow.errors import ContinuationJump, SizeLimit
from hesse_flow.sphere import SpherePoint, eval_iterate, iterated_preimages, trace_preimage_curves
from hesse_flow.sphere.trace import pull_back, sample_parameters, snap_ends


_ENDPOINT_VALUES = {'over0': SpherePoint.from_value(0), 'over1': SpherePoint.from_value(1),
                    'overInf': SpherePoint.infinity()}


@pytest.fixture(scope='module')
def trace1():
    return trace_preimage_curves(1)


def test_sample_parameters():
    s = sample_parameters(24)
    assert numpy.all(numpy.diff(s) > 0)
    assert 0 < s[0] < 1e-5
    assert 1 - 1e-5 < s[-1] < 1
    assert len(s) == 24 + 2 * 5


def test_sample_parameters_stop_at_floor():
    s = sample_parameters(24, floor=1e-7)
    assert s[0] >= 1e-7
    assert 1 - s[-1] >= 1e-7
    assert len(s) == 24 + 2 * 4


def test_pull_back_repeats_multiple_roots():
    # 1 - 1.07e-8 lies within the dedup tolerance of the critical value 1
    a, b = pull_back(numpy.array([0.5, 1.0, 1 - 1.07e-8]), 1)
    assert a.shape == b.shape == (3, 3)
    for row in (1, 2):
        values = sorted((a[row] / b[row]).real)
        assert values[0] == pytest.approx(-8)
        assert values[1] == pytest.approx(-8)
        assert values[2] == pytest.approx(1)


def test_pull_back_level_two_rows_are_full():
    a, b = pull_back(numpy.array([0.0, 0.25, 1.0]), 2)
    assert a.shape == (3, 9)


def test_snap_rejects_ends_far_from_their_fiber_point():
    # all three strand ends sit on h = 1, but the fiber over 1 is -8 twice and 1 once
    ends = numpy.ones(3, dtype=complex)
    with pytest.raises(ContinuationJump):
        snap_ends(ends, ends, 1.0, 1, 1e-8, 'int01', 1.0)


def test_snap_accepts_ends_near_their_fiber_point():
    a = numpy.array([-8 + 1e-3j, -8 - 1e-3j, 1 + 1e-6], dtype=complex)
    snapped, distance = snap_ends(a, numpy.ones(3, dtype=complex), 1.0, 1, 1e-8)
    assert [p.value.real for p in snapped] == pytest.approx([-8, -8, 1])
    assert distance < 1e-4


def test_level_zero_is_the_real_circle():
    trace = trace_preimage_curves(0)
    assert len(trace.polylines) == 3
    assert trace.census() == {'real': 3, 'upper': 0, 'lower': 0}
    assert [p.decoration for p in trace.polylines] == ['intNeg', 'int01', 'int1Inf']


def test_level_one_census(trace1):
    assert len(trace1.polylines) == 9
    assert trace1.census() == {'real': 5, 'upper': 2, 'lower': 2}
    for decoration in ('intNeg', 'int01', 'int1Inf'):
        assert len(trace1.by_decoration(decoration)) == 3


def test_level_one_endpoints_lie_over_critical_values(trace1):
    for p in trace1.polylines:
        assert eval_iterate(1, p.start).chordal_distance(_ENDPOINT_VALUES[p.start_type]) < 1e-9
        assert eval_iterate(1, p.end).chordal_distance(_ENDPOINT_VALUES[p.end_type]) < 1e-9


def test_level_one_endpoints_are_fiber_points(trace1):
    fibers = {t: [leaf.point for leaf in iterated_preimages(v, 1).leaves()] for t, v in _ENDPOINT_VALUES.items()}
    for p in trace1.polylines:
        assert min(p.start.chordal_distance(q) for q in fibers[p.start_type]) < 1e-6
        assert min(p.end.chordal_distance(q) for q in fibers[p.end_type]) < 1e-6


def test_level_one_curves_are_symmetric(trace1):
    upper = sorted(p.start.sort_key() + p.end.sort_key() for p in trace1.polylines if p.half == 'upper')
    lower = sorted(p.start.sort_key() + p.end.sort_key() for p in trace1.polylines if p.half == 'lower')
    assert upper == lower


def test_interior_points_map_into_their_interval(trace1):
    for p in trace1.by_decoration('int01'):
        for q in p.points[1:-1]:
            v = eval_iterate(1, q).value
            assert abs(v.imag) < 1e-8
            assert -1e-8 < v.real < 1 + 1e-8


def test_pattern_from_level_one_curves(trace1):
    assert SubstitutionPattern.from_level_one_curves(trace1) == t1_pattern()


def test_pattern_needs_level_one():
    with pytest.raises(ValueError):
        SubstitutionPattern.from_level_one_curves(trace_preimage_curves(0))


def test_threads_give_same_curves(trace1):
    threaded = trace_preimage_curves(1, threads=3)
    assert threaded.census() == trace1.census()
    assert [(p.decoration, p.half) for p in threaded.polylines] == [(p.decoration, p.half) for p in trace1.polylines]


def test_level_two_census():
    trace = trace_preimage_curves(2)
    assert len(trace.polylines) == 27
    census = trace.census()
    assert census['upper'] == census['lower']
    assert sum(census.values()) == 27


def test_limits():
    with pytest.raises(SizeLimit):
        trace_preimage_curves(5)
    with pytest.raises(ValueError):
        trace_preimage_curves(1, samples_per_edge=4)
    with pytest.raises(ValueError):
        trace_preimage_curves(-1)


def test_to_dict(trace1):
    d = trace1.to_dict()
    assert d['level'] == 1
    assert d['census'] == {'real': 5, 'upper': 2, 'lower': 2}
    assert {p['half'] for p in d['polylines']} == {'real', 'upper', 'lower'}
