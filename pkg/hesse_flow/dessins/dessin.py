import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from sympy.combinatorics import Permutation

from hesse_flow.dessins.complex import ORIENTATION_CONVENTION, DecoratedComplex, Decoration, Edge, double
from hesse_flow.dessins.substitution import MAX_LEVEL, build_Tn
from hesse_flow.errors import InvalidComplex
from hesse_flow.utils import check_size


_logger = logging.getLogger(__name__)


@dataclass
class PhiGraph:
    """edges over [0, 1] with their endpoints coloured black (over 0) and white (over 1)"""
    black: List[str]
    white: List[str]
    edges: List[Edge]


def extract_phi(c: DecoratedComplex) -> PhiGraph:
    edges = c.edges_by_decoration(Decoration.int01)
    black = sorted({e.v0 for e in edges})
    white = sorted({e.v1 for e in edges})
    return PhiGraph(black, white, edges)


@dataclass
class Dessin:
    level: int
    black: List[str]
    white: List[str]
    edges: List[Tuple[str, str, str]]  # id, black end, white end
    rotation: Dict[str, List[str]] = field(default_factory=dict)  # vertex -> ccw edge ids

    def __post_init__(self):
        self._index = {e[0]: k for k, e in enumerate(self.edges)}

    def _permutation(self, vertices: List[str]) -> Permutation:
        cycles = [[self._index[e] for e in self.rotation[v]] for v in vertices]
        return Permutation(cycles, size=len(self.edges))

    @property
    def sigma0(self) -> Permutation:
        return self._permutation(self.black)

    @property
    def sigma1(self) -> Permutation:
        return self._permutation(self.white)

    def faces(self) -> List[List[str]]:
        """cycles of sigma0 * sigma1, as edge ids"""
        face_perm = self.sigma0 * self.sigma1
        return [[self.edges[k][0] for k in cycle] for cycle in face_perm.full_cyclic_form]

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    @property
    def euler(self) -> int:
        return len(self.black) + len(self.white) - len(self.edges) + len(self.faces())

    def with_reversed_rotation(self, v: str) -> 'Dessin':
        rotation = dict(self.rotation)
        rotation[v] = list(reversed(rotation[v]))
        return Dessin(self.level, list(self.black), list(self.white), list(self.edges), rotation)

    def validate(self) -> 'Dessin':
        colours = set(self.black) | set(self.white)
        if set(self.black) & set(self.white):
            raise InvalidComplex('A dessin vertex is both black and white')
        for edge_id, b, w in self.edges:
            if b not in self.black or w not in self.white:
                raise InvalidComplex(f'Edge {edge_id} does not join a black to a white vertex')
        for v in colours:
            ends = [e[0] for e in self.edges if v in (e[1], e[2])]
            if sorted(ends) != sorted(self.rotation.get(v, [])):
                raise InvalidComplex(f'Rotation at {v} does not list its edges')
        if self.euler != 2:
            raise InvalidComplex(f'Dessin has Euler characteristic {self.euler}')
        return self

    def to_dict(self) -> Dict[str, object]:
        return {
            'level': self.level,
            'orientation_convention': ORIENTATION_CONVENTION,
            'black': self.black,
            'white': self.white,
            'edges': [{'id': e, 'black': b, 'white': w} for e, b, w in self.edges],
            'rotation': {v: self.rotation[v] for v in self.black + self.white},
            'faces': self.faces(),
            'passport': combinatorial_passport(self).to_dict(),
        }


def dessin_of(sphere: DecoratedComplex) -> Dessin:
    """Reads the dessin off a closed complex, rotations come from its face walks."""
    if not sphere.closed:
        raise InvalidComplex('Dessins are read off closed complexes')
    phi = extract_phi(sphere)
    he = sphere.half_edges()
    cycles = he.rotations()
    rotation = {}
    for v in phi.black + phi.white:
        rotation[v] = [he.edge[h] for h in cycles[v] if sphere.edges[he.edge[h]].decoration == Decoration.int01]
    edges = sorted((e.id, e.v0, e.v1) for e in phi.edges)
    return Dessin(sphere.level, phi.black, phi.white, edges, rotation)


def dessin(n: int) -> Dessin:
    if n < 1:
        raise ValueError(f'Dessin level must be positive, got {n}')
    check_size('dessin', n, MAX_LEVEL)
    d = dessin_of(double(build_Tn(n)))
    if len(d.edges) != 3 ** n:
        raise InvalidComplex(f'Dessin of level {n} has {len(d.edges)} edges, expected {3 ** n}')
    return d


@dataclass(frozen=True)
class CombinatorialPassport:
    level: int
    black: Tuple[int, ...]
    white: Tuple[int, ...]
    faces: Tuple[int, ...]

    def partitions(self) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
        return self.black, self.white, self.faces

    def to_dict(self) -> Dict[str, object]:
        return {'level': self.level, 'black': list(self.black), 'white': list(self.white),
                'faces': list(self.faces)}


def combinatorial_passport(d: Dessin) -> CombinatorialPassport:
    def partition(sizes) -> Tuple[int, ...]:
        return tuple(sorted(sizes, reverse=True))

    return CombinatorialPassport(
        d.level,
        partition(d.degree(v) for v in d.black),
        partition(d.degree(v) for v in d.white),
        partition(len(f) for f in d.faces()),
    )
