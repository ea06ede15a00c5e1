import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from hesse_flow.dessins.complex import (CORNER_ORDER, EDGE_SLOTS, RETYPE, DecoratedComplex, Face, Vertex, VertexType,
                                        make_edge, slot_for)
from hesse_flow.errors import InvalidComplex
from hesse_flow.utils import check_size


_logger = logging.getLogger(__name__)

MAX_LEVEL = 12

# roles of the old corners of a face
OLD_ROLES = {VertexType.over0: 'd0', VertexType.over1: 'd1', VertexType.overInf: 'dinf'}

NewVertex = Tuple[str, Tuple[str, str], VertexType]  # role, split edge (old roles), next-level type
PatternFace = Tuple[str, str, str, int]  # roles of the next-level over0, over1, overInf corners, relative flag


@dataclass(frozen=True)
class SubstitutionPattern:
    """What happens inside one face when a level is added."""
    new_vertices: Tuple[NewVertex, ...]
    interior_edges: Tuple[Tuple[str, str], ...]
    faces: Tuple[PatternFace, ...]
    retype: Tuple[Tuple[VertexType, VertexType], ...]

    @classmethod
    def build(cls, new_vertices, interior_edges, faces, retype) -> 'SubstitutionPattern':
        """normalizes the order of every component so equal patterns compare equal"""
        return cls(
            tuple(sorted((role, tuple(sorted(edge)), t) for role, edge, t in new_vertices)),
            tuple(sorted(tuple(sorted(e)) for e in interior_edges)),
            tuple(sorted(tuple(f) for f in faces)),
            tuple(sorted(retype, key=lambda kv: CORNER_ORDER.index(kv[0]))),
        )

    def new_type(self, role: str) -> VertexType:
        for t, r in OLD_ROLES.items():
            if r == role:
                return dict(self.retype)[t]
        for r, _, t in self.new_vertices:
            if r == role:
                return t
        raise KeyError(role)

    def split_of(self, a: str, b: str) -> Optional[str]:
        """role of the new vertex placed on the old edge (a, b), if any"""
        for role, edge, _ in self.new_vertices:
            if set(edge) == {a, b}:
                return role
        return None

    @classmethod
    def from_level_one_curves(cls, trace) -> 'SubstitutionPattern':
        """Reads the pattern off the traced level-1 preimage of the real circle.

        The boundary of the upper half-plane is the real circle carrying the level-1 fibers, the arcs in
        the upper half-plane are the interior edges.
        """
        if trace.level != 1:
            raise ValueError(f'Pattern derivation needs level-1 curves, got level {trace.level}')

        points, types = [], []
        for p in trace.polylines:
            for point, t in ((p.start, p.start_type), (p.end, p.end_type)):
                if not any(point.isclose(q, 1e-6) for q in points):
                    points.append(point)
                    types.append(VertexType(t))

        roles = []
        for point, t in zip(points, types):
            value = point.value
            if point.is_infinity:
                roles.append('dinf')
            elif abs(value) < 1e-9:
                roles.append('d0')
            elif abs(value - 1) < 1e-9:
                roles.append('d1')
            else:
                roles.append({VertexType.over0: 'm1', VertexType.over1: 'm2'}.get(t, '?'))
        if sorted(roles) != ['d0', 'd1', 'dinf', 'm1', 'm2']:
            raise InvalidComplex(f'Level-1 fiber points do not form a pattern: {roles}')

        def role_of(point) -> str:
            return next(r for q, r in zip(points, roles) if point.isclose(q, 1e-6))

        # boundary circle in increasing order, infinity last
        circle = [r for _, r in sorted(zip(points, roles), key=lambda pr: pr[0].sort_key())]
        old = [r for r in circle if r.startswith('d')]
        new_vertices = []
        for k, r in enumerate(circle):
            if r.startswith('m'):
                before = next(circle[(k - i) % 5] for i in range(1, 5) if circle[(k - i) % 5].startswith('d'))
                after = next(circle[(k + i) % 5] for i in range(1, 5) if circle[(k + i) % 5].startswith('d'))
                new_vertices.append((r, (before, after), types[roles.index(r)]))

        chords = sorted({tuple(sorted((role_of(p.start), role_of(p.end)))) for p in trace.polylines
                         if p.half == 'upper'})
        polygons = [circle]
        for a, b in chords:
            poly = next(p for p in polygons if a in p and b in p)
            i, j = sorted((poly.index(a), poly.index(b)))
            polygons.remove(poly)
            polygons.extend([poly[i:j + 1], poly[j:] + poly[:i + 1]])
        if any(len(p) != 3 for p in polygons):
            raise InvalidComplex(f'Level-1 arcs do not triangulate the half-plane: {polygons}')

        type_of = dict(zip(roles, types))
        faces = []
        for poly in polygons:
            by_type = {type_of[r]: r for r in poly}
            corners = tuple(by_type[t] for t in CORNER_ORDER)
            # ccw around a region of the upper half-plane is increasing order along the circle
            positions = [circle.index(r) for r in corners]
            rotations = [positions[k:] + positions[:k] for k in range(3)]
            flag = 1 if any(p == sorted(p) for p in rotations) else -1
            faces.append(corners + (flag,))

        retype = [(t, type_of[OLD_ROLES[t]]) for t in CORNER_ORDER]
        _logger.info(f'Derived pattern from level-1 curves, boundary circle {circle}, chords {chords}')
        return cls.build(new_vertices, chords, faces, retype)


def t1_pattern() -> SubstitutionPattern:
    return SubstitutionPattern.build(
        new_vertices=[('m1', ('d1', 'dinf'), VertexType.over0), ('m2', ('dinf', 'd0'), VertexType.over1)],
        interior_edges=[('m1', 'd0'), ('m1', 'm2')],
        faces=[('m1', 'd1', 'd0', -1), ('m1', 'm2', 'd0', 1), ('m1', 'm2', 'dinf', -1)],
        retype=list(RETYPE.items()),
    )


def base_triangle() -> DecoratedComplex:
    types = {'d0': VertexType.over0, 'd1': VertexType.over1, 'dinf': VertexType.overInf}
    c = DecoratedComplex(0)
    for v, t in types.items():
        c.add_vertex(Vertex(v, t, True))
    for slot, (t0, t1) in EDGE_SLOTS.items():
        c.add_edge(make_edge(slot, OLD_ROLES[t0], OLD_ROLES[t1], types, True))
    c.add_face(Face('F', ('d0', 'd1', 'dinf'), tuple(EDGE_SLOTS), 1))
    return c


def subdivide(c: DecoratedComplex, pattern: SubstitutionPattern = None, validate: bool = True) -> DecoratedComplex:
    """Applies the pattern inside every face.

    Ids of the new items derive from the ids they come from: a split vertex is "<edge>/m", the halves
    of a split edge "<edge>/a" (at its tail) and "<edge>/b", interior edges "<face>/e<k>" and children
    "<face>.<k>".
    """
    if c.closed:
        raise InvalidComplex('Only disk complexes can be subdivided')
    if validate:
        c.validate()
    pattern = pattern or t1_pattern()

    result = DecoratedComplex(c.level + 1)
    types: Dict[str, VertexType] = {}
    for v in c.vertices.values():
        t = dict(pattern.retype)[v.type]
        types[v.id] = t
        result.add_vertex(Vertex(v.id, t, v.on_boundary))

    for f in c.faces.values():
        roles = {OLD_ROLES[t]: v for t, v in zip(CORNER_ORDER, f.corners)}
        splits: Dict[str, Tuple[str, str]] = {}  # new role -> split edge id, split vertex id
        for role, (ra, rb), t in pattern.new_vertices:
            parent = c.edges[f.edge(slot_for(c.vertex_type(roles[ra]), c.vertex_type(roles[rb])))]
            vid = f'{parent.id}/m'
            roles[role] = vid
            types[vid] = t
            splits[role] = (parent.id, vid)
            result.add_vertex(Vertex(vid, t, parent.on_boundary))

        def edge_between(ra: str, rb: str) -> str:
            a, b = roles[ra], roles[rb]
            if ra in OLD_ROLES.values() and rb in OLD_ROLES.values():
                parent = c.edges[f.edge(slot_for(c.vertex_type(a), c.vertex_type(b)))]
                if pattern.split_of(ra, rb) is not None:
                    raise InvalidComplex(f'Edge {parent.id} is split, ({ra}, {rb}) is not an edge')
                result.add_edge(make_edge(parent.id, a, b, types, parent.on_boundary))
                return parent.id
            for new, old in ((ra, rb), (rb, ra)):
                if new in splits and old in OLD_ROLES.values():
                    parent = c.edges[splits[new][0]]
                    if roles[old] not in (parent.v0, parent.v1):
                        break
                    edge_id = f'{parent.id}/a' if roles[old] == parent.v0 else f'{parent.id}/b'
                    result.add_edge(make_edge(edge_id, a, b, types, parent.on_boundary))
                    return edge_id
            k = pattern.interior_edges.index(tuple(sorted((ra, rb))))
            edge_id = f'{f.id}/e{k}'
            result.add_edge(make_edge(edge_id, a, b, types, False))
            return edge_id

        for k, (r0, r1, rinf, flag) in enumerate(pattern.faces):
            corner_roles = (r0, r1, rinf)
            edges = tuple(edge_between(corner_roles[CORNER_ORDER.index(t0)], corner_roles[CORNER_ORDER.index(t1)])
                          for t0, t1 in EDGE_SLOTS.values())
            result.add_face(Face(f'{f.id}.{k}', tuple(roles[r] for r in corner_roles), edges, flag * f.orientation))

    _logger.debug(f'Subdivided level {c.level}: {result.counts()}')
    return result


def build_Tn(n: int, pattern: SubstitutionPattern = None) -> DecoratedComplex:
    if n < 0:
        raise ValueError(f'Level must be non-negative, got {n}')
    check_size('build_Tn', n, MAX_LEVEL)
    c = base_triangle()
    for _ in range(n):
        # the input of every later step is the output of the previous one
        c = subdivide(c, pattern, validate=c.level == 0)
    _logger.info(f'Built T_{n}: {c.counts()}')
    return c
