import logging
from collections import defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from hesse_flow.errors import InvalidComplex


_logger = logging.getLogger(__name__)

ORIENTATION_CONVENTION = 'upper-half-plane-positive'


class VertexType(str, Enum):
    over0 = 'over0'
    over1 = 'over1'
    overInf = 'overInf'


class Decoration(str, Enum):
    intNeg = 'intNeg'  # (inf, 0)
    int01 = 'int01'
    int1Inf = 'int1Inf'


# one corner of every type, in ccw order for a positively oriented face
CORNER_ORDER = (VertexType.over0, VertexType.over1, VertexType.overInf)

# face edge slot -> (type of tail, type of head) in the lifted orientation of the real line
EDGE_SLOTS: Dict[str, Tuple[VertexType, VertexType]] = {
    'e01': (VertexType.over0, VertexType.over1),
    'e1inf': (VertexType.over1, VertexType.overInf),
    'einf0': (VertexType.overInf, VertexType.over0),
}

SLOT_DECORATION = {
    'e01': Decoration.int01,
    'e1inf': Decoration.int1Inf,
    'einf0': Decoration.intNeg,
}

# what the next level sees an old vertex as: 0 -> inf, 1 -> 1, inf -> inf
RETYPE = {
    VertexType.over0: VertexType.overInf,
    VertexType.over1: VertexType.over1,
    VertexType.overInf: VertexType.overInf,
}


def slot_for(t0: VertexType, t1: VertexType) -> str:
    for slot, pair in EDGE_SLOTS.items():
        if {t0, t1} == set(pair):
            return slot
    raise InvalidComplex(f'No edge joins two vertices of type {t0.value}')


def decoration_for(t0: VertexType, t1: VertexType) -> Decoration:
    return SLOT_DECORATION[slot_for(t0, t1)]


def oriented_pair(a: str, ta: VertexType, b: str, tb: VertexType) -> Tuple[str, str]:
    """(tail, head) of the edge joining a and b"""
    tail_type, _ = EDGE_SLOTS[slot_for(ta, tb)]
    return (a, b) if ta == tail_type else (b, a)


@dataclass(frozen=True)
class Vertex:
    id: str
    type: VertexType
    on_boundary: bool = False


@dataclass(frozen=True)
class Edge:
    id: str
    v0: str  # tail
    v1: str  # head
    decoration: Decoration
    on_boundary: bool = False

    def other(self, v: str) -> str:
        return self.v1 if v == self.v0 else self.v0


@dataclass(frozen=True)
class Face:
    id: str
    corners: Tuple[str, str, str]  # over0, over1, overInf
    edges: Tuple[str, str, str]  # e01, e1inf, einf0
    orientation: int = 1

    def corner(self, t: VertexType) -> str:
        return self.corners[CORNER_ORDER.index(t)]

    def edge(self, slot: str) -> str:
        return self.edges[tuple(EDGE_SLOTS).index(slot)]

    def walk(self) -> List[Tuple[str, str]]:
        """(origin, edge id) of the three half-edges in ccw order"""
        v0, v1, vinf = self.corners
        e01, e1inf, einf0 = self.edges
        if self.orientation > 0:
            return [(v0, e01), (v1, e1inf), (vinf, einf0)]
        return [(v0, einf0), (vinf, e1inf), (v1, e01)]


class HalfEdges:
    """Half-edge view of a complex: one half-edge per (face, side), indexed 0..3F-1."""

    def __init__(self, c: 'DecoratedComplex'):
        self.origin: List[str] = []
        self.edge: List[str] = []
        self.face: List[str] = []
        self.next: List[int] = []
        self.twin: List[Optional[int]] = []
        by_edge: Dict[str, List[int]] = defaultdict(list)
        for f in c.faces.values():
            base = len(self.origin)
            for k, (origin, edge_id) in enumerate(f.walk()):
                self.origin.append(origin)
                self.edge.append(edge_id)
                self.face.append(f.id)
                self.next.append(base + (k + 1) % 3)
                by_edge[edge_id].append(base + k)
        self.prev = [0] * len(self.next)
        for h, n in enumerate(self.next):
            self.prev[n] = h
        self.twin = [None] * len(self.origin)
        for edge_id, halves in by_edge.items():
            if len(halves) > 2:
                raise InvalidComplex(f'Edge {edge_id} borders {len(halves)} faces')
            if len(halves) == 2:
                h, k = halves
                self.twin[h], self.twin[k] = k, h
        self.by_edge = dict(by_edge)

    def __len__(self):
        return len(self.origin)

    def rotate(self, h: int) -> Optional[int]:
        """next half-edge out of the same origin in ccw order, None at the boundary"""
        return self.twin[self.prev[h]]

    def rotation(self, v: str) -> List[int]:
        """ccw cycle of half-edges out of an interior vertex"""
        start = next(h for h, o in enumerate(self.origin) if o == v)
        return self._cycle(start)

    def rotations(self) -> Dict[str, List[int]]:
        result, seen = {}, set()
        for h, v in enumerate(self.origin):
            if v in seen:
                continue
            seen.add(v)
            result[v] = self._cycle(h)
        return result

    def _cycle(self, start: int) -> List[int]:
        cycle, h = [start], self.rotate(start)
        while h is not None and h != start:
            cycle.append(h)
            h = self.rotate(h)
        if h is None:
            raise InvalidComplex(f'Vertex {self.origin[start]} lies on the boundary, its rotation is not a cycle')
        return cycle


@dataclass
class DecoratedComplex:
    level: int
    vertices: Dict[str, Vertex] = field(default_factory=dict)
    edges: Dict[str, Edge] = field(default_factory=dict)
    faces: Dict[str, Face] = field(default_factory=dict)
    closed: bool = False

    def add_vertex(self, v: Vertex):
        known = self.vertices.get(v.id)
        if known is not None and known != v:
            raise InvalidComplex(f'Vertex {v.id} added twice with different data')
        self.vertices[v.id] = v

    def add_edge(self, e: Edge):
        known = self.edges.get(e.id)
        if known is not None and known != e:
            raise InvalidComplex(f'Edge {e.id} added twice with different data')
        self.edges[e.id] = e

    def add_face(self, f: Face):
        if f.id in self.faces:
            raise InvalidComplex(f'Face {f.id} added twice')
        self.faces[f.id] = f

    def vertex_type(self, v: str) -> VertexType:
        return self.vertices[v].type

    def edges_by_decoration(self, decoration: Decoration) -> List[Edge]:
        return [e for e in self.edges.values() if e.decoration == decoration]

    def boundary_edges(self) -> List[Edge]:
        return [e for e in self.edges.values() if e.on_boundary]

    @property
    def euler(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def half_edges(self) -> HalfEdges:
        return HalfEdges(self)

    def counts(self) -> Dict[str, int]:
        return {'vertices': len(self.vertices), 'edges': len(self.edges), 'faces': len(self.faces)}

    def validate(self) -> 'DecoratedComplex':
        for e in self.edges.values():
            for v in (e.v0, e.v1):
                if v not in self.vertices:
                    raise InvalidComplex(f'Edge {e.id} references unknown vertex {v}')
            t0, t1 = self.vertex_type(e.v0), self.vertex_type(e.v1)
            if decoration_for(t0, t1) != e.decoration:
                raise InvalidComplex(f'Edge {e.id} is decorated {e.decoration.value}, its endpoints ask for '
                                     f'{decoration_for(t0, t1).value}')
            if EDGE_SLOTS[slot_for(t0, t1)][0] != t0:
                raise InvalidComplex(f'Edge {e.id} points against the lifted orientation')

        faces_of: Dict[str, List[Face]] = defaultdict(list)
        for f in self.faces.values():
            for t, v in zip(CORNER_ORDER, f.corners):
                if v not in self.vertices or self.vertex_type(v) != t:
                    raise InvalidComplex(f'Corner {t.value} of face {f.id} is {v}')
            if f.orientation not in (1, -1):
                raise InvalidComplex(f'Face {f.id} has orientation flag {f.orientation}')
            for slot, edge_id in zip(EDGE_SLOTS, f.edges):
                e = self.edges.get(edge_id)
                if e is None:
                    raise InvalidComplex(f'Face {f.id} references unknown edge {edge_id}')
                ends = {f.corner(t) for t in EDGE_SLOTS[slot]}
                if {e.v0, e.v1} != ends:
                    raise InvalidComplex(f'Edge {edge_id} does not join the {slot} corners of face {f.id}')
                faces_of[edge_id].append(f)

        for e in self.edges.values():
            adjacent = faces_of.get(e.id, [])
            expected = 1 if e.on_boundary else 2
            if len(adjacent) != expected:
                raise InvalidComplex(f'Edge {e.id} borders {len(adjacent)} faces, expected {expected}')
            if self.closed and e.on_boundary:
                raise InvalidComplex(f'Closed complex has boundary edge {e.id}')
            if len(adjacent) == 2 and adjacent[0].orientation == adjacent[1].orientation:
                raise InvalidComplex(f'Faces {adjacent[0].id} and {adjacent[1].id} share {e.id} but carry the '
                                     f'same orientation flag')

        on_boundary = {v for e in self.boundary_edges() for v in (e.v0, e.v1)}
        for v in self.vertices.values():
            if v.on_boundary != (v.id in on_boundary):
                raise InvalidComplex(f'Boundary flag of vertex {v.id} is inconsistent')

        # twins run in opposite directions
        he = self.half_edges()
        for h, k in enumerate(he.twin):
            if k is not None and he.origin[h] == he.origin[k]:
                raise InvalidComplex(f'Edge {he.edge[h]} is walked in the same direction by both of its faces')
        return self

    def to_dict(self) -> Dict[str, object]:
        return {
            'level': self.level,
            'closed': self.closed,
            'orientation_convention': ORIENTATION_CONVENTION,
            'vertices': [{'id': v.id, 'type': v.type.value, 'on_boundary': v.on_boundary}
                         for v in self.vertices.values()],
            'edges': [{'id': e.id, 'v0': e.v0, 'v1': e.v1, 'decoration': e.decoration.value,
                       'oriented_from': e.v0, 'on_boundary': e.on_boundary} for e in self.edges.values()],
            'faces': [{'id': f.id, 'corner_over_0': f.corners[0], 'corner_over_1': f.corners[1],
                       'corner_over_inf': f.corners[2], 'orientation': '+' if f.orientation > 0 else '-'}
                      for f in self.faces.values()],
        }


def make_edge(edge_id: str, a: str, b: str, types: Dict[str, VertexType], on_boundary: bool) -> Edge:
    tail, head = oriented_pair(a, types[a], b, types[b])
    return Edge(edge_id, tail, head, decoration_for(types[a], types[b]), on_boundary)


def from_triangles(level: int, types: Dict[str, VertexType],
                   triangles: Iterable[Tuple[str, Sequence[str], int]]) -> DecoratedComplex:
    """Disk complex from faces given as (face id, corners over 0, 1, inf, orientation flag).

    Edges are identified by their endpoint pair, boundary edges are the ones with a single face.
    """
    triangles = list(triangles)
    uses: Dict[Tuple[str, str], int] = defaultdict(int)
    for _, corners, _ in triangles:
        for t0, t1 in EDGE_SLOTS.values():
            a, b = corners[CORNER_ORDER.index(t0)], corners[CORNER_ORDER.index(t1)]
            uses[tuple(sorted((a, b)))] += 1

    c = DecoratedComplex(level)
    boundary_vertices = {v for pair, k in uses.items() if k == 1 for v in pair}
    for v, t in types.items():
        c.add_vertex(Vertex(v, t, v in boundary_vertices))
    for face_id, corners, orientation in triangles:
        edge_ids = []
        for t0, t1 in EDGE_SLOTS.values():
            a, b = corners[CORNER_ORDER.index(t0)], corners[CORNER_ORDER.index(t1)]
            pair = tuple(sorted((a, b)))
            edge_id = f'{pair[0]}~{pair[1]}'
            c.add_edge(make_edge(edge_id, a, b, types, uses[pair] == 1))
            edge_ids.append(edge_id)
        c.add_face(Face(face_id, tuple(corners), tuple(edge_ids), orientation))
    return c


def double(c: DecoratedComplex) -> DecoratedComplex:
    """Glues c to its mirror image along the boundary, giving a closed complex.

    Interior vertices, interior edges and all faces of the mirror carry a trailing prime, mirror faces
    have their orientation flag reversed.
    """
    if c.closed:
        raise InvalidComplex('Complex is already closed')

    def mirror_v(v: str) -> str:
        return v if c.vertices[v].on_boundary else v + "'"

    def mirror_e(e: str) -> str:
        return e if c.edges[e].on_boundary else e + "'"

    d = DecoratedComplex(c.level, closed=True)
    for v in c.vertices.values():
        d.add_vertex(replace(v, on_boundary=False))
    for v in c.vertices.values():
        if not v.on_boundary:
            d.add_vertex(replace(v, id=mirror_v(v.id)))
    for e in c.edges.values():
        d.add_edge(replace(e, on_boundary=False))
    for e in c.edges.values():
        if not e.on_boundary:
            d.add_edge(replace(e, id=mirror_e(e.id), v0=mirror_v(e.v0), v1=mirror_v(e.v1)))
    for f in c.faces.values():
        d.add_face(f)
    for f in c.faces.values():
        d.add_face(Face(f.id + "'", tuple(mirror_v(v) for v in f.corners), tuple(mirror_e(e) for e in f.edges),
                        -f.orientation))
    return d
