import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy

from hesse_flow.algebra import RationalFunction1V, rf_compose
from hesse_flow.errors import DedupAmbiguity, IdentityFailed, RootFindingDiverged
from hesse_flow.pencil.invariants import critical_fibers, critical_points, hessian_h_map
from hesse_flow.report import ProofReport
from hesse_flow.sphere.point import SpherePoint, as_arrays, chordal_arrays, embed_arrays, normalize_arrays
from hesse_flow.utils import check_fiber_size, check_size


_logger = logging.getLogger(__name__)

DEDUP_TOL = 1e-8
REFINE_TOL = 1e-10
CRITICAL_VALUE_TOL = 1e-6

# the three critical values in the order 0, 1, inf
CRITICAL_VALUES = (0, 1, None)

CONTAINMENT_ANCHOR = 'critical values of every iterate lie in {0, 1, inf}'


def _H_arrays(a: numpy.ndarray, b: numpy.ndarray) -> Tuple[numpy.ndarray, numpy.ndarray]:
    return normalize_arrays(-(a - 4 * b) ** 3, 27 * a ** 2 * b)


def eval_H(p: SpherePoint) -> SpherePoint:
    return SpherePoint(-(p.a - 4 * p.b) ** 3, 27 * p.a ** 2 * p.b)


def eval_iterate(n: int, p: SpherePoint) -> SpherePoint:
    if n < 1:
        raise ValueError(f'Iterate count must be positive, got {n}')
    for _ in range(n):
        p = eval_H(p)
    return p


def forward_orbit(p: SpherePoint, steps: int) -> List[SpherePoint]:
    orbit = [p]
    for _ in range(steps):
        orbit.append(eval_H(orbit[-1]))
    return orbit


def symbolic_iterate(n: int) -> RationalFunction1V:
    """H^(n) as an exact rational function; coefficient growth limits this to n <= 4"""
    check_size('symbolic_iterate', n, 4)
    H = hessian_h_map()
    result = RationalFunction1V.identity('h')
    for _ in range(n):
        result = rf_compose(H, result)
    return result


# region preimages

def _exact_fiber(c_index: int) -> List[Tuple[SpherePoint, int]]:
    fiber = critical_fibers()[CRITICAL_VALUES[c_index]]
    return [(SpherePoint.from_value(None if r is None else complex(r)), k) for r, k in fiber]


_CRITICAL_POINTS = (SpherePoint.from_value(0), SpherePoint.from_value(1), SpherePoint.infinity())


def _critical_value_index(p: SpherePoint, tol: float) -> Optional[int]:
    for idx, cv in enumerate(_CRITICAL_POINTS):
        if p.chordal_distance(cv) < tol:
            return idx
    return None


def _generic_roots(a: numpy.ndarray, b: numpy.ndarray) -> Tuple[numpy.ndarray, numpy.ndarray]:
    """All three roots of b*(h-4)^3 + 27*a*h^2 = 0 for a batch of values c = a/b, none of them critical.

    Returns projective root pairs of shape (N, 3).
    """
    finite_chart = numpy.abs(a) <= numpy.abs(b)
    with numpy.errstate(divide='ignore', invalid='ignore'):
        c = numpy.where(finite_chart, a / b, 0)
        w = numpy.where(finite_chart, 0, b / a)
        # monic in h: h^3 + c2 h^2 + c1 h + c0
        c2 = numpy.where(finite_chart, 27 * c - 12, (27 - 12 * w) / w)
    c1 = numpy.full_like(c2, 48)
    c0 = numpy.full_like(c2, -64)

    companion = numpy.zeros((len(a), 3, 3), dtype=complex)
    companion[:, 0, 0] = -c2
    companion[:, 0, 1] = -c1
    companion[:, 0, 2] = -c0
    companion[:, 1, 0] = 1
    companion[:, 2, 1] = 1
    roots = numpy.linalg.eigvals(companion)

    ra, rb = roots, numpy.ones_like(roots)
    for _ in range(2):
        ra, rb = _newton(ra, rb, a[:, None], b[:, None])
    return normalize_arrays(ra, rb)


def _newton(ra: numpy.ndarray, rb: numpy.ndarray, a: numpy.ndarray, b: numpy.ndarray) -> Tuple[numpy.ndarray, numpy.ndarray]:
    """one Newton step per root, in the h chart inside the unit disk and in the 1/h chart outside"""
    inside = numpy.abs(ra) <= numpy.abs(rb)
    with numpy.errstate(divide='ignore', invalid='ignore', over='ignore'):
        h = numpy.where(inside, ra / rb, 0)
        u = numpy.where(inside, 0, rb / ra)
        F = b * (h - 4) ** 3 + 27 * a * h ** 2
        dF = 3 * b * (h - 4) ** 2 + 54 * a * h
        h_new = h - F / dF
        G = b * (1 - 4 * u) ** 3 + 27 * a * u
        dG = -12 * b * (1 - 4 * u) ** 2 + 27 * a
        u_new = u - G / dG
    h_new = numpy.where(numpy.isfinite(h_new), h_new, h)
    u_new = numpy.where(numpy.isfinite(u_new), u_new, u)
    return numpy.where(inside, h_new, 1), numpy.where(inside, 1, u_new)


def solve_many(points: Sequence[SpherePoint], tol: float) -> List[List[Tuple[SpherePoint, int]]]:
    results: List[Optional[List[Tuple[SpherePoint, int]]]] = [None] * len(points)
    generic = []
    for idx, p in enumerate(points):
        cv = _critical_value_index(p, tol)
        if cv is not None:
            results[idx] = _exact_fiber(cv)
        else:
            generic.append(idx)

    if generic:
        a, b = as_arrays([points[i] for i in generic])
        ra, rb = _generic_roots(a, b)

        ha, hb = _H_arrays(ra, rb)
        residual = chordal_arrays(ha, hb, a[:, None], b[:, None])
        worst = numpy.nanmax(residual) if residual.size else 0.0
        if not numpy.all(numpy.isfinite(residual)) or worst > REFINE_TOL:
            bad = generic[int(numpy.nanargmax(residual) // 3)] if numpy.isfinite(worst) else generic[0]
            raise RootFindingDiverged(f'Preimage of {points[bad]!r} did not refine below {REFINE_TOL} (residual {worst:.3g})')

        for k, (i, j) in enumerate(((0, 1), (0, 2), (1, 2))):
            gap = chordal_arrays(ra[:, i], rb[:, i], ra[:, j], rb[:, j])
            close = numpy.nonzero(gap < 10 * tol)[0]
            if len(close):
                p = points[generic[close[0]]]
                raise DedupAmbiguity(f'Preimages of {p!r} are only {gap[close[0]]:.3g} apart')

        for row, idx in enumerate(generic):
            roots = [(SpherePoint(ra[row, r], rb[row, r]), 1) for r in range(3)]
            results[idx] = sorted(roots, key=lambda pm: pm[0].sort_key())
    return results


def solve_preimage(c: SpherePoint, tol: float = DEDUP_TOL) -> List[Tuple[SpherePoint, int]]:
    """roots with multiplicity of H(h) = c; critical values use their exact fibers"""
    return solve_many([c], tol)[0]


class PreimageNode:
    __slots__ = ('point', 'multiplicity', 'local_degree', 'parent', 'children', 'depth')

    def __init__(self, point: SpherePoint, multiplicity: int = 1, parent: Optional['PreimageNode'] = None):
        self.point = point
        self.multiplicity = multiplicity
        self.parent = parent
        self.depth = 0 if parent is None else parent.depth + 1
        self.local_degree = multiplicity * (1 if parent is None else parent.local_degree)
        self.children: List['PreimageNode'] = []

    def leaves(self) -> List['PreimageNode']:
        if not self.children:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def chain(self) -> List['PreimageNode']:
        node, chain = self, []
        while node is not None:
            chain.append(node)
            node = node.parent
        return chain

    def __repr__(self):
        return f'PreimageNode({self.point!r}, degree={self.local_degree}, depth={self.depth})'


def _assert_separated(points: List[SpherePoint], tol: float):
    if len(points) < 2:
        return
    a, b = as_arrays(points)
    xyz = embed_arrays(a, b)
    order = numpy.argsort(xyz[:, 0], kind='stable')
    xyz = xyz[order]
    window = 2 * 10 * tol
    for i in range(len(order) - 1):
        j = i + 1
        while j < len(order) and xyz[j, 0] - xyz[i, 0] < window:
            if numpy.linalg.norm(xyz[j] - xyz[i]) < window:
                p, q = points[order[i]], points[order[j]]
                raise DedupAmbiguity(f'Fiber points {p!r} and {q!r} are closer than {10 * tol:.1e}')
            j += 1


def iterated_preimages(c: SpherePoint, n: int, tol: float = DEDUP_TOL) -> PreimageNode:
    if n < 1:
        raise ValueError(f'Preimage depth must be positive, got {n}')
    check_fiber_size('iterated_preimages', n)
    root = PreimageNode(c)
    frontier = [root]
    for depth in range(n):
        solved = solve_many([node.point for node in frontier], tol)
        next_frontier = []
        for node, roots in zip(frontier, solved):
            for point, mult in roots:
                child = PreimageNode(point, mult, node)
                node.children.append(child)
                next_frontier.append(child)
        frontier = next_frontier
        _logger.debug(f'Preimage level {depth + 1} of {c!r}: {len(frontier)} points')
    _assert_separated([leaf.point for leaf in frontier], tol)
    return root


def sorted_leaves(tree: PreimageNode) -> List[PreimageNode]:
    return sorted(tree.leaves(), key=lambda leaf: leaf.point.sort_key())

# endregion


@dataclass(frozen=True)
class AnalyticPassport:
    level: int
    over_0: Tuple[int, ...]
    over_1: Tuple[int, ...]
    over_inf: Tuple[int, ...]

    def partitions(self) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
        return self.over_0, self.over_1, self.over_inf

    @property
    def euler_count(self) -> int:
        return len(self.over_0) + len(self.over_1) + len(self.over_inf) - 3 ** self.level

    def to_dict(self) -> Dict[str, object]:
        return {'level': self.level, 'over_0': list(self.over_0), 'over_1': list(self.over_1),
                'over_inf': list(self.over_inf)}


def fiber_degrees(c: SpherePoint, n: int, tol: float = DEDUP_TOL) -> Tuple[int, ...]:
    return tuple(sorted((leaf.local_degree for leaf in iterated_preimages(c, n, tol).leaves()), reverse=True))


def analytic_passport(n: int, tol: float = DEDUP_TOL) -> AnalyticPassport:
    partitions = [fiber_degrees(cv, n, tol) for cv in _CRITICAL_POINTS]
    passport = AnalyticPassport(n, *partitions)
    for part in partitions:
        if sum(part) != 3 ** n:
            raise ArithmeticError(f'Fiber degrees {part} do not sum to 3^{n}')
    return passport


def critical_points_of_iterate(n: int, tol: float = DEDUP_TOL) -> List[SpherePoint]:
    """points whose orbit meets a critical point of H within n - 1 steps"""
    check_size('critical_points_of_iterate', n, 6)
    points = []
    for crit in critical_points():
        seed = SpherePoint.from_value(complex(crit))
        points.append(seed)
        for k in range(1, n):
            points.extend(leaf.point for leaf in iterated_preimages(seed, k, tol).leaves())
    distinct = []
    for p in sorted(points, key=lambda q: q.sort_key()):
        if not any(p.chordal_distance(q) < tol for q in distinct):
            distinct.append(p)
    return distinct


def critical_containment_check(n: int, tol: float = DEDUP_TOL) -> ProofReport:
    check_id = f'critical-containment-{n}'
    points = critical_points_of_iterate(n, tol)
    values = set()
    for p in points:
        image = eval_iterate(n, p)
        idx = _critical_value_index(image, CRITICAL_VALUE_TOL)
        if idx is None:
            raise IdentityFailed(check_id, f'H^{n}({p!r}) = {image!r} lies outside {{0, 1, inf}}')
        values.add(('0', '1', 'inf')[idx])
    return ProofReport(check_id, f'critical values of H^{n} lie in {{0, 1, inf}}', witness={
        'critical_points': len(points),
        'critical_values': ','.join(v for v in ('0', '1', 'inf') if v in values),
    })


def critical_containment_suite(max_level: int, tol: float = DEDUP_TOL) -> ProofReport:
    witness = {}
    for n in range(1, max_level + 1):
        report = critical_containment_check(n, tol)
        witness[f'level_{n}'] = f'{report.witness["critical_points"]} points -> {{{report.witness["critical_values"]}}}'
    return ProofReport('critical-containment', CONTAINMENT_ANCHOR, witness=witness)
