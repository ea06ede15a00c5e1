import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Union

from hesse_flow.dessins.complex import DecoratedComplex
from hesse_flow.dessins.dessin import Dessin


_logger = logging.getLogger(__name__)


@dataclass
class CombinatorialMap:
    """darts, permutations acting on them and a label per dart"""
    names: List[str]
    perms: List[List[int]]
    labels: List[Hashable]

    def __len__(self):
        return len(self.names)


@dataclass
class IsomorphismResult:
    isomorphic: bool
    witness: Dict[str, str] = field(default_factory=dict)

    def __bool__(self):
        return self.isomorphic


def _complex_map(c: DecoratedComplex) -> CombinatorialMap:
    he = c.half_edges()
    degree = Counter(v for e in c.edges.values() for v in (e.v0, e.v1))
    twin = [h if t is None else t for h, t in enumerate(he.twin)]
    labels = []
    for h in range(len(he)):
        e = c.edges[he.edge[h]]
        labels.append((c.vertex_type(he.origin[h]), e.decoration, e.v0 == he.origin[h],
                       c.faces[he.face[h]].orientation, he.twin[h] is None, degree[he.origin[h]]))
    names = [f'{he.face[h]}:{he.origin[h]}' for h in range(len(he))]
    return CombinatorialMap(names, [list(he.next), twin], labels)


def _dessin_map(d: Dessin) -> CombinatorialMap:
    index = {e[0]: k for k, e in enumerate(d.edges)}
    perms = []
    for vertices in (d.black, d.white):
        perm = list(range(len(d.edges)))
        for v in vertices:
            cycle = [index[e] for e in d.rotation[v]]
            for k, dart in enumerate(cycle):
                perm[dart] = cycle[(k + 1) % len(cycle)]
        perms.append(perm)
    labels = [(d.degree(b), d.degree(w)) for _, b, w in d.edges]
    return CombinatorialMap([e[0] for e in d.edges], perms, labels)


def _extend(a: CombinatorialMap, b: CombinatorialMap, start: int, image: int) -> Optional[List[int]]:
    fwd = [-1] * len(a)
    bwd = [-1] * len(b)
    fwd[start], bwd[image] = image, start
    queue = [start]
    while queue:
        x = queue.pop()
        y = fwd[x]
        for pa, pb in zip(a.perms, b.perms):
            x2, y2 = pa[x], pb[y]
            if fwd[x2] == -1:
                if bwd[y2] != -1 or a.labels[x2] != b.labels[y2]:
                    return None
                fwd[x2], bwd[y2] = y2, x2
                queue.append(x2)
            elif fwd[x2] != y2:
                return None
    if -1 in fwd:
        return None
    return fwd


def map_isomorphism(a: CombinatorialMap, b: CombinatorialMap) -> IsomorphismResult:
    """Label preserving isomorphism commuting with every permutation, searched from a rarest dart of a."""
    if len(a) != len(b) or len(a.perms) != len(b.perms) or Counter(a.labels) != Counter(b.labels):
        return IsomorphismResult(False)
    if not len(a):
        return IsomorphismResult(True)

    by_label = defaultdict(list)
    for k, label in enumerate(b.labels):
        by_label[label].append(k)
    counts = Counter(a.labels)
    start = min(range(len(a)), key=lambda k: (counts[a.labels[k]], k))
    for candidate in by_label[a.labels[start]]:
        fwd = _extend(a, b, start, candidate)
        if fwd is not None:
            return IsomorphismResult(True, {a.names[k]: b.names[v] for k, v in enumerate(fwd)})
    return IsomorphismResult(False)


def ribbon_isomorphic(a: Union[Dessin, DecoratedComplex], b: Union[Dessin, DecoratedComplex]) -> IsomorphismResult:
    if type(a) is not type(b):
        raise TypeError(f'Cannot compare {type(a).__name__} with {type(b).__name__}')
    if a.level != b.level:
        raise ValueError(f'Levels differ: {a.level} and {b.level}')
    to_map = _dessin_map if isinstance(a, Dessin) else _complex_map
    result = map_isomorphism(to_map(a), to_map(b))
    _logger.info(f'Level {a.level} {type(a).__name__} isomorphism: {result.isomorphic}')
    return result
