import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy
from scipy.optimize import linear_sum_assignment

from hesse_flow.errors import ContinuationJump
from hesse_flow.sphere.dynamics import DEDUP_TOL, solve_many, iterated_preimages
from hesse_flow.sphere.point import SpherePoint, as_arrays, chordal_arrays
from hesse_flow.utils import check_size


_logger = logging.getLogger(__name__)

# oriented intervals of the real circle, from negative to positive numbers
INTERVALS: Tuple[Tuple[str, Optional[float], Optional[float]], ...] = (
    ('intNeg', None, 0.0),
    ('int01', 0.0, 1.0),
    ('int1Inf', 1.0, None),
)

VERTEX_TYPES = {0.0: 'over0', 1.0: 'over1', None: 'overInf'}

MAX_REFINEMENT_ROUNDS = 4
END_REFINEMENTS = 5
REAL_TOL = 1e-9
JUMP_FLOOR = 1e-3
# a strand end must be at most this fraction of its distance to any other fiber point away from its own
SNAP_MARGIN = 0.5


def _interval_value(decoration: str, s: numpy.ndarray) -> numpy.ndarray:
    if decoration == 'intNeg':
        return (s - 1) / s
    elif decoration == 'int01':
        return s
    elif decoration == 'int1Inf':
        return 1 + s / (1 - s)
    raise ValueError(f'Unknown interval "{decoration}"')


def sample_parameters(samples_per_edge: int, floor: float = 0.0) -> numpy.ndarray:
    """Chebyshev nodes on (0, 1), with geometric refinement towards both ends.

    Refinement stops at `floor` from either end.
    """
    k = numpy.arange(samples_per_edge)
    s = (1 - numpy.cos(numpy.pi * (k + 0.5) / samples_per_edge)) / 2
    first, last = s[0], 1 - s[-1]
    near_0 = first * 10.0 ** -numpy.arange(1, END_REFINEMENTS + 1)
    near_1 = 1 - last * 10.0 ** -numpy.arange(1, END_REFINEMENTS + 1)
    near_0 = near_0[near_0 >= floor]
    near_1 = near_1[1 - near_1 >= floor]
    return numpy.unique(numpy.concatenate([near_0, s, near_1]))


@dataclass
class Polyline:
    decoration: str
    points: List[SpherePoint]
    start_type: str
    end_type: str

    @property
    def start(self) -> SpherePoint:
        return self.points[0]

    @property
    def end(self) -> SpherePoint:
        return self.points[-1]

    @property
    def half(self) -> str:
        """real, upper or lower, by the side of the real circle the curve runs on"""
        imag = [p.embed()[1] for p in self.points[1:-1]]
        if not imag or max(abs(y) for y in imag) < REAL_TOL:
            return 'real'
        return 'upper' if sum(imag) > 0 else 'lower'

    def to_dict(self) -> Dict[str, object]:
        return {
            'decoration': self.decoration,
            'oriented_from': self.start_type,
            'oriented_to': self.end_type,
            'half': self.half,
            'points': [p.to_json() for p in self.points],
        }


@dataclass
class TraceResult:
    level: int
    polylines: List[Polyline] = field(default_factory=list)
    max_snap_distance: float = 0.0
    refinements: int = 0

    def by_decoration(self, decoration: str) -> List[Polyline]:
        return [p for p in self.polylines if p.decoration == decoration]

    def census(self) -> Dict[str, int]:
        counts = {'real': 0, 'upper': 0, 'lower': 0}
        for p in self.polylines:
            counts[p.half] += 1
        return counts

    def to_dict(self) -> Dict[str, object]:
        return {
            'level': self.level,
            'census': self.census(),
            'polylines': [p.to_dict() for p in self.polylines],
        }


def pull_back(values: numpy.ndarray, n: int, tol: float = DEDUP_TOL) -> Tuple[numpy.ndarray, numpy.ndarray]:
    """Full fibers of H^(n) over sample values, as projective arrays of shape (samples, 3^n).

    Roots of exact critical fibers are repeated by their multiplicity, so coalescing strands stay
    separate entries.
    """
    frontier = [[SpherePoint.from_value(complex(v))] for v in values]
    for _ in range(n):
        flat = [p for row in frontier for p in row]
        solved = solve_many(flat, tol)
        it = iter(solved)
        frontier = [[root for _ in row for root, mult in next(it) for _k in range(mult)] for row in frontier]
    a = numpy.array([[p.a for p in row] for row in frontier], dtype=complex)
    b = numpy.array([[p.b for p in row] for row in frontier], dtype=complex)
    return a, b


def _continue_strands(a: numpy.ndarray, b: numpy.ndarray) -> Tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]:
    """reorders each sample's fiber to follow the previous one by minimal chordal matching"""
    a, b = a.copy(), b.copy()
    steps = numpy.zeros((a.shape[0] - 1, a.shape[1]))
    for k in range(1, a.shape[0]):
        cost = chordal_arrays(a[k - 1][:, None], b[k - 1][:, None], a[k][None, :], b[k][None, :])
        _, cols = linear_sum_assignment(cost)
        a[k], b[k] = a[k][cols], b[k][cols]
        steps[k - 1] = cost[numpy.arange(len(cols)), cols]
    return a, b, steps


def _jumps(steps: numpy.ndarray, factor: float) -> numpy.ndarray:
    median = numpy.median(steps, axis=0)
    bad = (steps > factor * median[None, :]) & (steps > JUMP_FLOOR)
    return numpy.nonzero(bad.any(axis=1))[0]


def snap_ends(a: numpy.ndarray, b: numpy.ndarray, value: Optional[float], n: int, tol: float,
          decoration: str = '', parameter: float = 0.0) -> Tuple[List[SpherePoint], float]:
    """Assigns strand ends to fiber points of value, each repeated by its local degree.

    Raises ContinuationJump unless every strand end is clearly nearest to the fiber point it is
    assigned to.
    """
    target = SpherePoint.infinity() if value is None else SpherePoint.from_value(value)
    if n == 0:
        return [target] * len(a), float(numpy.max(chordal_arrays(a, b, target.a, target.b)))
    targets = [leaf.point for leaf in iterated_preimages(target, n, tol).leaves() for _ in range(leaf.local_degree)]
    ta, tb = as_arrays(targets)
    cost = chordal_arrays(a[:, None], b[:, None], ta[None, :], tb[None, :])
    rows, cols = linear_sum_assignment(cost)
    same = chordal_arrays(ta[:, None], tb[:, None], ta[None, :], tb[None, :]) < 10 * tol
    snapped = [None] * len(a)
    for r, c in zip(rows, cols):
        others = cost[r][~same[c]]
        if len(others) and cost[r, c] > SNAP_MARGIN * others.min():
            raise ContinuationJump(decoration, parameter, float(cost[r, c]))
        snapped[r] = targets[c]
    return snapped, float(cost[rows, cols].max())


def _trace_interval(decoration: str, start: Optional[float], end: Optional[float], n: int, samples_per_edge: int,
                    factor: float, tol: float) -> Tuple[List[Polyline], float, int]:
    s = sample_parameters(samples_per_edge, floor=10 * tol)
    for rounds in range(MAX_REFINEMENT_ROUNDS + 1):
        a, b = pull_back(_interval_value(decoration, s), n, tol)
        a, b, steps = _continue_strands(a, b)
        bad = _jumps(steps, factor) if len(steps) > 2 else numpy.array([], dtype=int)
        if not len(bad):
            break
        if rounds == MAX_REFINEMENT_ROUNDS:
            k = int(bad[0])
            raise ContinuationJump(decoration, float(s[k + 1]), float(steps[k].max()))
        _logger.warning(f'Refining {len(bad)} continuation steps on {decoration} (round {rounds + 1})')
        s = numpy.unique(numpy.concatenate([s, (s[bad] + s[bad + 1]) / 2]))

    starts, d0 = snap_ends(a[0], b[0], start, n, tol, decoration, float(s[0]))
    ends, d1 = snap_ends(a[-1], b[-1], end, n, tol, decoration, float(s[-1]))
    polylines = []
    for strand in range(a.shape[1]):
        interior = [SpherePoint(a[k, strand], b[k, strand]) for k in range(a.shape[0])]
        polylines.append(Polyline(decoration, [starts[strand]] + interior + [ends[strand]],
                                  VERTEX_TYPES[start], VERTEX_TYPES[end]))
    return polylines, max(d0, d1), rounds


def trace_preimage_curves(n: int, samples_per_edge: int = 24, continuation_factor: float = 8.0,
                          tol: float = DEDUP_TOL, threads: int = 1) -> TraceResult:
    """Decorated, oriented polylines of the preimage of the real circle under H^(n).

    Every interval yields 3^n strands, each running from a fiber point over the interval's
    negative end to one over its positive end.
    """
    if n < 0:
        raise ValueError(f'Trace level must be non-negative, got {n}')
    check_size('trace_preimage_curves', n, 4)
    if samples_per_edge < 8:
        raise ValueError(f'At least 8 samples per edge are needed, got {samples_per_edge}')

    def run(interval):
        return _trace_interval(*interval, n, samples_per_edge, continuation_factor, tol)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(run, INTERVALS))

    trace = TraceResult(n)
    for polylines, snap, rounds in results:
        trace.polylines.extend(sorted(polylines, key=lambda p: (p.start.sort_key(), p.end.sort_key(), p.half)))
        trace.max_snap_distance = max(trace.max_snap_distance, snap)
        trace.refinements += rounds
    _logger.info(f'Traced level {n}: {len(trace.polylines)} polylines, snap distance {trace.max_snap_distance:.3g}')
    return trace
